// Seeded random instances, brute-force oracles and the acceptance suite
// shared by the test binaries and the `selftest` subcommand.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "zieschang/factorize.hpp"

namespace zieschang {

// All randomness comes from std::mt19937_64. Each criterion seeds its own
// engine from std::seed_seq{seed, criterion id}.
using Rng = std::mt19937_64;

Rng criterion_rng(std::uint64_t seed, int criterion);

GenWord random_gen_word(Signature sig, GenVariant variant, int max_tokens, Rng& rng);
Word random_word(Signature sig, int max_length, Rng& rng);
// A random arrangement of the candidate multiset: each t_j once, every
// signed x- and y-letter once.
std::vector<Letter> random_candidate(Signature sig, Rng& rng);
// Rejection-samples random_candidate until it is Zieschang.
Word random_zieschang(Signature sig, Rng& rng);

// Cycle detection by depth-first search on the undirected multigraph
// underlying the extended Whitehead graph.
bool dfs_forest_oracle(const std::vector<Letter>& V, Signature sig);

// Signatures with 2g+p <= max_rank (excluding the empty one).
std::vector<Signature> signatures_up_to(int max_rank);
// The grid used by the reduction, factorization and certification checks.
std::vector<Signature> reduction_grid();

struct SelftestOptions {
    std::uint64_t seed = 20261016;
    // Samples per signature for criteria 4, 7 and 8; criterion 5 uses ten
    // times this, criteria 6 and 9 a hundred times.
    int samples = 100;
    bool enforce_runtime = true;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

CriterionResult run_criterion(int id, const SelftestOptions& options);
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream* progress = nullptr);
std::string format_result(const CriterionResult& r);

}  // namespace zieschang
