#include "zieschang/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace zieschang {

Rng criterion_rng(std::uint64_t seed, int criterion) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(criterion)};
    return Rng(seq);
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Counts checks and keeps the first failure message.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (first_.empty()) first_ = what();
    }
    void fail(const std::string& what) {
        check(false, [&] { return what; });
    }
    Outcome outcome(const std::string& extra = {}) const {
        std::string s = std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures";
        if (!extra.empty()) s += "; " + extra;
        if (!first_.empty()) s += "; first: " + first_;
        return {failures_ == 0, s};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

Word W(std::string_view s) { return parse_word(s); }

std::string sig_str(Signature sig) { return format_signature(sig); }

bool endo_identity(const Endomorphism& f) { return f.is_identity(); }

bool has_high_alpha(const GenWord& w) {
    return std::any_of(w.tokens().begin(), w.tokens().end(), [](const GenToken& t) {
        return t.name.family == Family::Alpha && t.name.index >= 3;
    });
}

// ---------------------------------------------------------------------------

Outcome criterion1(const SelftestOptions&) {
    Tally tally;
    for (const Signature sig : signatures_up_to(8)) {
        const Word v0 = relator(sig);
        for (const GenName n : gen_set(sig, GenVariant::ADL)) {
            const std::string label = format_gen_name(n) + " at " + sig_str(sig);
            const Automorphism a = generator(n, sig);
            tally.check(apply(a.fwd(), v0) == v0, [&] { return label + " moves the relator"; });
            tally.check(t_class_permutation(a.fwd()).has_value(), [&] { return label + " does not permute [t]"; });
            tally.check(endo_identity(compose(a.fwd(), a.inv())) && endo_identity(compose(a.inv(), a.fwd())),
                        [&] { return label + " witness does not compose to identity"; });
        }
    }
    return tally.outcome();
}

Outcome criterion2(const SelftestOptions&) {
    Tally tally;
    const Signature s3{3, 0};
    const std::vector<std::string> chain = {
        "x1' y1'",          "x1' x2' y2' x2",      "x1' x2' y2'",      "x1' x2'",
        "x1' x2' y2 x3' y3' x3", "x1' x2' y2 x3' y3'", "x1' y2 x3' y3'", "x1' x3'",
        "x1' y1 x2' y2' x2 x3'", "x1' y1 x2' y2' x3'", "y1 x2' y2' x3'", "x2' x3'",
        "x2' y2 x3'",       "y2 x3'",              "x3' y3",           "y3"};
    const GenWord c = humphries_conjugator();
    tally.check(c.size() == 16, [&] { return "conjugator has " + std::to_string(c.size()) + " tokens"; });
    Word cur = W("x1' y1' x1");
    for (std::size_t i = 0; i < c.size() && i < chain.size(); ++i) {
        cur = apply(generator(c.tokens()[i].name, s3), cur);
        tally.check(cur == W(chain[i]), [&] {
            return "chain step " + std::to_string(i + 1) + ": got " + format_word(cur) + ", want " + chain[i];
        });
    }
    const GenWord h3 = humphries_rewrite(3, s3);
    tally.check(h3.size() == 33, [&] { return "rewrite(3) has " + std::to_string(h3.size()) + " tokens"; });
    tally.check(h3 == c.inverse() * parse_gen_word("a1") * c, [] { return "rewrite(3) is not c' a1 c"; });
    tally.check(eval_gen_word(h3, s3) == generator({Family::Alpha, 3}, s3), [] { return "rewrite(3) != alpha_3"; });
    for (int g = 4; g <= 5; ++g) {
        const Signature sig{g, 0};
        for (int i = 3; i <= g; ++i) {
            const GenWord h = humphries_rewrite(i, sig);
            tally.check(!has_high_alpha(h), [&] { return "rewrite(" + std::to_string(i) + ") keeps alpha_{>=3}"; });
            tally.check(eval_gen_word(h, sig) == generator({Family::Alpha, i}, sig), [&] {
                return "rewrite(" + std::to_string(i) + ") != alpha_" + std::to_string(i) + " at " + sig_str(sig);
            });
        }
        // The shifted conjugation identity itself, before any rewriting.
        const GenWord shifted = shift_indices(c.inverse() * parse_gen_word("a1") * c, g - 3);
        tally.check(eval_gen_word(shifted, sig) == generator({Family::Alpha, g}, sig),
                    [&] { return "shifted identity fails at g=" + std::to_string(g); });
    }
    return tally.outcome();
}

Outcome criterion3(const SelftestOptions&) {
    Tally tally;
    const Signature s3{3, 0};
    const Automorphism e = eta();
    tally.check(apply(e, W("x1' y1' x1")) == W("y3"), [] { return "(x1' y1' x1)^eta != y3"; });
    tally.check(membership(e.fwd()).in_A, [] { return "eta not in A"; });
    tally.check(compose(generator({Family::Alpha, 1}, s3), e) == compose(e, generator({Family::Alpha, 3}, s3)),
                [] { return "alpha_1 eta != eta alpha_3"; });
    for (int g = 0; g <= 5; ++g) {
        for (int p = 0; p <= 3; ++p) {
            const Signature sig{g, p};
            if (sig.rank() == 0) continue;
            const Automorphism z = zeta_lift(sig);
            tally.check(endo_identity(compose(z.fwd(), z.fwd())),
                        [&] { return "zeta lift not an involution at " + sig_str(sig); });
        }
        if (g == 0) continue;
        const Signature sig{g, 0};
        Word expected;
        for (int i = g; i >= 1; --i)
            expected = multiply(expected, commutator(Word::of(Letter::y(i)), Word::of(Letter::x(i))));
        tally.check(apply(zeta_lift(sig), relator(sig)) == expected,
                    [&] { return "zeta lift image of the relator wrong at g=" + std::to_string(g); });
    }
    return tally.outcome();
}

Outcome criterion4(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 4);
    for (const Signature sig : reduction_grid()) {
        const Word v0 = relator(sig);
        for (int s = 0; s < opt.samples; ++s) {
            const GenWord w = random_gen_word(sig, GenVariant::ADL, 12, rng);
            const std::string label = sig_str(sig) + " [" + format_gen_word(w) + "]";
            const Automorphism a = eval_gen_word(w, sig);
            try {
                const NielsenReduction r = nielsen_reduce(v0, a);
                bool decreasing = true;
                for (std::size_t i = 1; i < r.mu_history.size(); ++i)
                    decreasing = decreasing && precedes(r.mu_history[i], r.mu_history[i - 1]);
                tally.check(decreasing, [&] { return label + ": mu did not strictly decrease"; });
                Endomorphism acc(sig);
                for (const auto& e : r.edges) acc = compose(acc, e.aut().fwd());
                acc = compose(acc, r.remainder.aut().fwd());
                tally.check(acc == a.fwd(), [&] { return label + ": recomposition differs"; });
                bool nielsen = true;
                for (const auto& e : r.edges) {
                    const auto k = classify_nielsen(e);
                    nielsen = nielsen && k && k->tag != NielsenTag::N1;
                }
                const auto rk = classify_nielsen(r.remainder);
                nielsen = nielsen && rk && rk->tag == NielsenTag::N1;
                tally.check(nielsen, [&] { return label + ": an emitted edge is not of the stated Nielsen type"; });
            } catch (const Error& e) {
                tally.fail(label + ": " + error_kind_name(e.kind()) + " " + e.what());
            }
        }
    }
    return tally.outcome();
}

// Word made of the letters strictly between positions i and j.
Word between(const Word& V, std::size_t i, std::size_t j) { return V.slice(i + 1, j - i - 1); }

std::size_t pos_of(const Word& V, Letter l) {
    return static_cast<std::size_t>(std::find(V.begin(), V.end(), l) - V.begin());
}

Outcome criterion5(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 5);
    std::size_t hits[5] = {0, 0, 0, 0, 0};
    const Word x1b = Word::of(Letter::x(1, -1)), y1b = Word::of(Letter::y(1, -1));
    for (const Signature sig : reduction_grid()) {
        const Word v0 = relator(sig);
        for (int s = 0; s < 10 * opt.samples; ++s) {
            const Word V = random_zieschang(sig, rng);
            const std::string label = sig_str(sig) + " V=" + format_word(V);
            try {
                const CanonicalEdge c = canonical_edge(V, sig);
                const Automorphism& phi = c.phi;
                tally.check(apply(phi, V) == v0, [&] { return label + ": Phi_V(V) != V_0"; });
                Word at = V;
                bool chained = true;
                for (const auto& st : c.steps) {
                    chained = chained && st.before == at && apply(st.aut, at) == st.after && is_zieschang(st.after, sig);
                    at = st.after;
                }
                tally.check(chained, [&] { return label + ": step log broken or leaves the Zieschang set"; });
                if (sig.p == 0 && sig.g >= 1) {
                    // Pattern 1: V = a P a' Q
                    const Letter a = V[0];
                    const Word P = between(V, 0, pos_of(V, a.inverse()));
                    ++hits[1];
                    tally.check(apply(phi, Word::of(a)) == x1b && apply(phi, P) == y1b,
                                [&] { return label + ": property 1 fails"; });
                }
                if (sig.p == 1) {
                    // Pattern 2: V = P t1 Q
                    const Letter t1 = Letter::t(1);
                    const Word P = V.prefix(pos_of(V, t1));
                    ++hits[2];
                    tally.check(apply(phi, conjugate(Word::of(t1), P.inverse())) == Word::of(t1),
                                [&] { return label + ": property 2 fails"; });
                    if (sig.g >= 1 && V[0] == t1) {
                        // Pattern 3: V = t1 a P a' Q
                        const Letter a = V[1];
                        const Word Pa = between(V, 1, pos_of(V, a.inverse()));
                        ++hits[3];
                        tally.check(apply(phi, Word::of(t1)) == Word::of(t1) && apply(phi, Word::of(a)) == x1b &&
                                        apply(phi, Pa) == y1b,
                                    [&] { return label + ": property 3 fails"; });
                    }
                }
                if (sig.p >= 2) {
                    // Pattern 4: V = P t_j1 Q t_j2 R with no t-letters in P, Q
                    std::vector<std::size_t> tpos;
                    for (std::size_t i = 0; i < V.size(); ++i)
                        if (V[i].is_t()) tpos.push_back(i);
                    const Word P = V.prefix(tpos[0]);
                    const Word PQ = multiply(P, between(V, tpos[0], tpos[1]));
                    const Word first = conjugate(Word::of(V[tpos[0]]), P.inverse());
                    const Word second = conjugate(Word::of(V[tpos[1]]), PQ.inverse());
                    ++hits[4];
                    tally.check(apply(phi, first) == Word::of(Letter::t(sig.p)) &&
                                    apply(phi, second) == Word::of(Letter::t(sig.p - 1)),
                                [&] { return label + ": property 4 fails"; });
                }
            } catch (const Error& e) {
                tally.fail(label + ": " + error_kind_name(e.kind()) + " " + e.what());
            }
        }
    }
    for (int k = 1; k <= 4; ++k)
        tally.check(hits[k] > 0, [&] { return "property " + std::to_string(k) + " never exercised"; });
    std::string extra = "pattern hits";
    for (int k = 1; k <= 4; ++k) extra += " " + std::to_string(hits[k]);
    return tally.outcome(extra);
}

Outcome criterion6(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 6);
    std::size_t positives = 0;
    for (const Signature sig : signatures_up_to(6)) {
        for (int s = 0; s < 100 * opt.samples; ++s) {
            const std::vector<Letter> V = random_candidate(sig, rng);
            const bool uf = is_zieschang(V, sig);
            positives += uf;
            tally.check(uf == dfs_forest_oracle(V, sig),
                        [&] { return sig_str(sig) + " V=" + format_letters(V) + ": verdicts differ"; });
        }
    }
    return tally.outcome(std::to_string(positives) + " Zieschang");
}

Outcome criterion7(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 7);
    std::size_t coset_violations = 0, longest = 0;
    for (const Signature sig : reduction_grid()) {
        for (int s = 0; s < opt.samples; ++s) {
            const GenWord w = random_gen_word(sig, GenVariant::ADL, 12, rng);
            const std::string label = sig_str(sig) + " [" + format_gen_word(w) + "]";
            const Automorphism a = eval_gen_word(w, sig);
            try {
                const GenWord f = factorize_adl(a);
                longest = std::max(longest, f.size());
                tally.check(eval_gen_word(f, sig) == a, [&] { return label + ": ADL word does not evaluate back"; });
                const GenWord h = factorize_adlh(a);
                tally.check(!has_high_alpha(h), [&] { return label + ": ADLH word contains alpha_{>=3}"; });
                tally.check(eval_gen_word(h, sig) == a, [&] { return label + ": ADLH word does not evaluate back"; });
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::CosetViolation) ++coset_violations;
                tally.fail(label + ": " + error_kind_name(e.kind()) + " " + e.what());
            }
        }
    }
    return tally.outcome("CosetViolation " + std::to_string(coset_violations) + "; longest word " +
                         std::to_string(longest));
}

Outcome criterion8(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 8);
    for (const Signature sig : reduction_grid()) {
        for (int s = 0; s < opt.samples; ++s) {
            const GenWord w = random_gen_word(sig, GenVariant::ADL, 12, rng);
            const std::string label = sig_str(sig) + " [" + format_gen_word(w) + "]";
            const Automorphism a = eval_gen_word(w, sig);
            try {
                const auto c = certify_automorphism(a.fwd());
                tally.check(c.has_value(), [&] { return label + ": not certified"; });
                if (c) {
                    tally.check(c->fwd() == a.fwd() && endo_identity(compose(c->fwd(), c->inv())) &&
                                    endo_identity(compose(c->inv(), c->fwd())),
                                [&] { return label + ": certified witness invalid"; });
                }
            } catch (const Error& e) {
                tally.fail(label + ": " + error_kind_name(e.kind()) + " " + e.what());
            }
            // Break the relator: multiply one basis image by its own letter.
            const Letter b = basis_letter(uniform(rng, 0, sig.rank() - 1), sig);
            std::vector<Word> imgs = a.fwd().images();
            const int bi = basis_index(b, sig);
            imgs[bi] = multiply(imgs[bi], Word::of(b));
            const Endomorphism broken(sig, imgs);
            if (membership(broken).in_A) continue;
            bool rejected = false;
            try {
                (void)certify_automorphism(broken);
            } catch (const Error& e) {
                rejected = e.kind() == ErrorKind::HypothesisViolated;
            }
            tally.check(rejected, [&] { return label + ": broken endomorphism not rejected with HypothesisViolated"; });
        }
    }
    return tally.outcome();
}

Outcome criterion9(const SelftestOptions& opt) {
    Tally tally;
    Rng rng = criterion_rng(opt.seed, 9);
    const std::vector<Signature> sigs = {{1, 0}, {1, 1}, {2, 0}, {0, 3}, {2, 1}};
    for (int s = 0; s < 100 * opt.samples; ++s) {
        const Signature sig = sigs[static_cast<std::size_t>(s) % sigs.size()];
        const Word u = random_word(sig, 10, rng);
        const Word v = random_word(sig, 10, rng);
        const Letter w = basis_letter(uniform(rng, 0, sig.rank() - 1), sig);
        const auto du = fox_derivative(u, w), dv = fox_derivative(v, w);
        tally.check(fox_derivative(multiply(u, v), w) == du.right_multiply(v) + dv, [&] {
            return "product rule fails for u=" + format_word(u) + " v=" + format_word(v) + " w=" + format_letter(w);
        });
        tally.check(fox_derivative(u.inverse(), w) == -du.right_multiply(u.inverse()),
                    [&] { return "inverse rule fails for u=" + format_word(u); });
    }
    for (const Signature sig : sigs)
        for (const Letter a : basis_letters(sig))
            for (const Letter b : basis_letters(sig)) {
                const auto d = fox_derivative(Word::of(a), b);
                tally.check(a == b ? d == GroupRingElement::of(Word()) : d.is_zero(),
                            [&] { return "basis rule fails for " + format_letter(a) + "/" + format_letter(b); });
            }
    return tally.outcome();
}

struct CriterionDef {
    const char* name;
    double budget_seconds;
    Outcome (*run)(const SelftestOptions&);
};

const CriterionDef kCriteria[] = {
    {"generator membership", 30, criterion1},
    {"Humphries suite", 5, criterion2},
    {"eta and zeta lift identities", 5, criterion3},
    {"Nielsen reduction round-trip", 300, criterion4},
    {"canonical edges", 120, criterion5},
    {"Zieschang recognition oracle", 60, criterion6},
    {"factorization round-trip", 900, criterion7},
    {"certification", 120, criterion8},
    {"Fox calculus", 10, criterion9},
};

}  // namespace

GenWord random_gen_word(Signature sig, GenVariant variant, int max_tokens, Rng& rng) {
    const std::vector<GenName> names = gen_set(sig, variant);
    if (names.empty()) return {};
    const int len = uniform(rng, 0, max_tokens);
    std::vector<GenToken> toks;
    for (int i = 0; i < len; ++i)
        toks.push_back({names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))],
                        uniform(rng, 0, 1) ? 1 : -1});
    return GenWord(toks);
}

Word random_word(Signature sig, int max_length, Rng& rng) {
    const std::vector<Letter> letters = signed_letters(sig);
    const int len = uniform(rng, 0, max_length);
    std::vector<Letter> seq;
    for (int i = 0; i < len; ++i)
        seq.push_back(letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))]);
    return Word(seq);
}

std::vector<Letter> random_candidate(Signature sig, Rng& rng) {
    std::vector<Letter> v;
    for (int j = 1; j <= sig.p; ++j) v.push_back(Letter::t(j));
    for (int i = 1; i <= sig.g; ++i)
        for (const Letter l : {Letter::x(i), Letter::y(i)}) {
            v.push_back(l);
            v.push_back(l.inverse());
        }
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

Word random_zieschang(Signature sig, Rng& rng) {
    for (;;) {
        const std::vector<Letter> v = random_candidate(sig, rng);
        if (is_zieschang(v, sig)) return Word::from_reduced(v);
    }
}

bool dfs_forest_oracle(const std::vector<Letter>& V, Signature sig) {
    const int n = 2 * sig.rank();
    auto id = [&](Letter l) { return 2 * basis_index(l, sig) + (l.sign < 0 ? 1 : 0); };
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= sig.p; ++j) edges.emplace_back(id(Letter::t(j, -1)), id(Letter::t(j)));
    for (std::size_t k = 0; k + 1 < V.size(); ++k) edges.emplace_back(id(V[k]), id(V[k + 1].inverse()));
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [a, b] = edges[e];
        if (a == b) return false;
        adj[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(e));
        adj[static_cast<std::size_t>(b)].emplace_back(a, static_cast<int>(e));
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        // Stack of (vertex, edge used to reach it).
        std::vector<std::pair<int, int>> stack{{root, -1}};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            const auto [v, via] = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adj[static_cast<std::size_t>(v)]) {
                if (e == via) continue;
                if (seen[static_cast<std::size_t>(w)]) return false;
                seen[static_cast<std::size_t>(w)] = 1;
                stack.emplace_back(w, e);
            }
        }
    }
    return true;
}

std::vector<Signature> signatures_up_to(int max_rank) {
    std::vector<Signature> out;
    for (int g = 0; 2 * g <= max_rank; ++g)
        for (int p = 0; 2 * g + p <= max_rank; ++p)
            if (g + p > 0) out.push_back({g, p});
    return out;
}

std::vector<Signature> reduction_grid() {
    return {{0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
}

CriterionResult run_criterion(int id, const SelftestOptions& options) {
    if (id < 1 || id > 9) throw Error(ErrorKind::IndexOutOfRange, "criterion " + std::to_string(id) + " does not exist");
    const CriterionDef& def = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = def.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = def.run(options);
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("uncaught: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.enforce_runtime && r.seconds >= def.budget_seconds) {
        r.pass = false;
        r.detail += "; over the " + std::to_string(static_cast<int>(def.budget_seconds)) + " s budget";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream* progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) {
        out.push_back(run_criterion(id, options));
        if (progress) *progress << format_result(out.back()) << '\n' << std::flush;
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail << " ["
       << static_cast<long long>(r.seconds * 1000) << " ms]";
    return os.str();
}

}  // namespace zieschang
