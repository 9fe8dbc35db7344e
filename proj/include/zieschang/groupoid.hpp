// The Zieschang groupoid: Nielsen edges, the reduction engine driven by the
// mu pre-order, canonical edges to V_0, and automorphism certification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zieschang/endo.hpp"
#include "zieschang/whitehead.hpp"

namespace zieschang {

// (V, W, phi) with V, W Zieschang, V^phi = W and phi permuting the [t_j].
class GroupoidEdge {
public:
    // Throws InvariantViolation when any invariant fails.
    GroupoidEdge(Word source, Word target, Automorphism aut);
    // Target computed as apply(aut, source).
    GroupoidEdge(Word source, Automorphism aut);

    const Word& source() const { return source_; }
    const Word& target() const { return target_; }
    const Automorphism& aut() const { return aut_; }
    Signature sig() const { return aut_.sig(); }

    GroupoidEdge inverse() const;

private:
    Word source_;
    Word target_;
    Automorphism aut_;
};

// Edge followed by edge; the target of `a` must equal the source of `b`.
GroupoidEdge then(const GroupoidEdge& a, const GroupoidEdge& b);

enum class NielsenTag { N1, N2Right, N2Left, N3Right, N3Left };

struct NielsenKind {
    NielsenTag tag = NielsenTag::N1;
    int k = 0;  // 1-based chain position; 0 for N1
    bool operator==(const NielsenKind&) const = default;
};

std::string format_nielsen_kind(NielsenKind kind);

// The Nielsen move of the given kind at V, or nullopt when the template does
// not apply (wrong letter type, k out of range). N1 is not a template.
std::optional<Automorphism> nielsen_move(const Word& V, Signature sig, NielsenTag tag, int k);

std::optional<NielsenKind> classify_nielsen(const GroupoidEdge& e);
std::vector<GroupoidEdge> enumerate_nielsen_from(const Word& V, Signature sig);

// Image words sorted ascending under (length, left half); compared
// lexicographically.
struct PreOrderKey {
    struct Entry {
        std::size_t length = 0;
        Word left;
        Word word;
    };
    std::vector<Entry> entries;
};

PreOrderKey mu_key(const Endomorphism& phi);
// -1, 0, +1 for precedes, equivalent, follows.
int compare(const PreOrderKey& a, const PreOrderKey& b);
bool precedes(const PreOrderKey& a, const PreOrderKey& b);
std::string format_key(const PreOrderKey& key);

struct NielsenReduction {
    std::vector<GroupoidEdge> edges;   // Nielsen edges from V
    GroupoidEdge remainder;            // N1 edge ending at apply(phi, V)
    std::vector<PreOrderKey> mu_history;  // one key per internal state
    std::vector<NielsenKind> kinds;    // kind of each edge
    std::size_t iterations() const { return edges.size(); }
};

NielsenReduction nielsen_reduce(const Word& V, const Endomorphism& phi);
NielsenReduction nielsen_reduce(const Word& V, const Automorphism& phi);

// Letter permutations (t-letters positive) carry their own inverse.
std::optional<Automorphism> letter_permutation_automorphism(const Endomorphism& f);

struct CanonStep {
    std::string kind;  // "i", "ii", "iii.i", "iii.ii", "iv" .. "vii", "viii.iv" .. "viii.vii"
    int k = 0;         // t-index for t-steps, x-index for x-steps
    Word before;
    Word after;
    Automorphism aut;
};

struct CanonicalEdge {
    Automorphism phi;
    std::vector<CanonStep> steps;
};

std::string format_step(const CanonStep& s);

CanonicalEdge canonical_edge(const Word& V, Signature sig);

// Witnessed automorphism for phi, or nullopt when the reduction sticks.
// Throws HypothesisViolated unless phi fixes the relator and permutes the
// [t_j] classes.
std::optional<Automorphism> certify_automorphism(const Endomorphism& phi);

}  // namespace zieschang
