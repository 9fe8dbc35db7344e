#include "zieschang/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace zieschang {

namespace {

Word L(Letter l) { return Word::of(l); }

[[noreturn]] void stuck(const std::string& why) { throw Error(ErrorKind::ReductionStuck, why); }

[[noreturn]] void broken(const std::string& why) { throw Error(ErrorKind::InvariantViolation, why); }

Automorphism from_maps(Signature sig, const std::vector<std::pair<Letter, Word>>& fwd,
                       const std::vector<std::pair<Letter, Word>>& inv) {
    return Automorphism::trusted(Endomorphism::from_map(sig, fwd), Endomorphism::from_map(sig, inv));
}

// Involutive letter swap a -> b', b -> a' (a -> b' alone when a and b share a basis letter).
Automorphism swap_letters(Signature sig, Letter a, Letter b) {
    std::vector<std::pair<Letter, Word>> m{{a, L(b.inverse())}};
    if (a.positive() != b.positive()) m.emplace_back(b, L(a.inverse()));
    const Endomorphism f = Endomorphism::from_map(sig, m);
    return Automorphism(f, f);
}

std::size_t find_letter(const Word& w, Letter l, std::size_t from = 0) {
    for (std::size_t i = from; i < w.size(); ++i)
        if (w[i] == l) return i;
    broken("letter " + format_letter(l) + " missing from " + format_word(w));
}

}  // namespace

GroupoidEdge::GroupoidEdge(Word source, Word target, Automorphism aut)
    : source_(std::move(source)), target_(std::move(target)), aut_(std::move(aut)) {
    const Signature sig = aut_.sig();
    if (apply(aut_, source_) != target_)
        broken("edge automorphism does not send " + format_word(source_) + " to " + format_word(target_));
    if (!is_zieschang(source_, sig)) broken("edge source " + format_word(source_) + " is not Zieschang");
    if (!is_zieschang(target_, sig)) broken("edge target " + format_word(target_) + " is not Zieschang");
    if (!t_class_permutation(aut_.fwd())) broken("edge automorphism does not permute the t classes");
}

GroupoidEdge::GroupoidEdge(Word source, Automorphism aut)
    : GroupoidEdge(source, apply(aut, source), aut) {}

GroupoidEdge GroupoidEdge::inverse() const { return GroupoidEdge(target_, source_, invert(aut_)); }

GroupoidEdge then(const GroupoidEdge& a, const GroupoidEdge& b) {
    if (a.target() != b.source()) broken("edges do not compose: " + format_word(a.target()) + " vs " + format_word(b.source()));
    return GroupoidEdge(a.source(), b.target(), compose(a.aut(), b.aut()));
}

std::string format_nielsen_kind(NielsenKind kind) {
    switch (kind.tag) {
        case NielsenTag::N1: return "N1";
        case NielsenTag::N2Right: return "N2_right k=" + std::to_string(kind.k);
        case NielsenTag::N2Left: return "N2_left k=" + std::to_string(kind.k);
        case NielsenTag::N3Right: return "N3_right k=" + std::to_string(kind.k);
        case NielsenTag::N3Left: return "N3_left k=" + std::to_string(kind.k);
    }
    return "?";
}

std::optional<Automorphism> nielsen_move(const Word& V, Signature sig, NielsenTag tag, int k) {
    const int n = static_cast<int>(V.size());
    if (k < 1 || k > n) return std::nullopt;
    const Letter v = V[k - 1];
    switch (tag) {
        case NielsenTag::N1: return std::nullopt;
        case NielsenTag::N2Right:
        case NielsenTag::N3Right: {
            if (k > n - 1) return std::nullopt;
            const Word next = L(V[k]);
            if (tag == NielsenTag::N2Right) {
                if (!v.is_x_letter()) return std::nullopt;
                return from_maps(sig, {{v, multiply(L(v), next.inverse())}}, {{v, multiply(L(v), next)}});
            }
            if (!v.is_t()) return std::nullopt;
            return from_maps(sig, {{v, conjugate(L(v), next.inverse())}}, {{v, conjugate(L(v), next)}});
        }
        case NielsenTag::N2Left:
        case NielsenTag::N3Left: {
            if (k < 2) return std::nullopt;
            const Word prev = L(V[k - 2]);
            if (tag == NielsenTag::N2Left) {
                if (!v.is_x_letter()) return std::nullopt;
                return from_maps(sig, {{v, multiply(prev.inverse(), L(v))}}, {{v, multiply(prev, L(v))}});
            }
            if (!v.is_t()) return std::nullopt;
            return from_maps(sig, {{v, conjugate(L(v), prev)}}, {{v, conjugate(L(v), prev.inverse())}});
        }
    }
    return std::nullopt;
}

std::optional<NielsenKind> classify_nielsen(const GroupoidEdge& e) {
    if (classify_letters(e.aut().fwd())) return NielsenKind{NielsenTag::N1, 0};
    const Word& V = e.source();
    for (auto tag : {NielsenTag::N2Right, NielsenTag::N2Left, NielsenTag::N3Right, NielsenTag::N3Left}) {
        for (int k = 1; k <= static_cast<int>(V.size()); ++k) {
            auto m = nielsen_move(V, e.sig(), tag, k);
            if (m && m->fwd() == e.aut().fwd()) return NielsenKind{tag, k};
        }
    }
    return std::nullopt;
}

std::vector<GroupoidEdge> enumerate_nielsen_from(const Word& V, Signature sig) {
    if (!is_zieschang(V, sig)) throw Error(ErrorKind::NotZieschang, format_word(V) + " is not Zieschang");
    std::vector<GroupoidEdge> out;
    for (auto tag : {NielsenTag::N2Right, NielsenTag::N2Left, NielsenTag::N3Right, NielsenTag::N3Left}) {
        for (int k = 1; k <= static_cast<int>(V.size()); ++k) {
            auto m = nielsen_move(V, sig, tag, k);
            if (!m) continue;
            const Word W = apply(*m, V);
            if (is_zieschang(W, sig)) out.emplace_back(V, W, *m);
        }
    }
    return out;
}

PreOrderKey mu_key(const Endomorphism& phi) {
    const Signature sig = phi.sig();
    PreOrderKey key;
    auto add = [&](const Word& w) {
        key.entries.push_back({w.size(), w.prefix((w.size() + 1) / 2), w});
    };
    for (int j = 1; j <= sig.p; ++j) add(phi.image(Letter::t(j)));
    for (int i = 1; i <= sig.g; ++i) {
        for (Letter l : {Letter::x(i), Letter::y(i)}) {
            add(phi.image(l));
            add(phi.image(l.inverse()));
        }
    }
    std::sort(key.entries.begin(), key.entries.end(), [](const auto& a, const auto& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.left != b.left) return a.left < b.left;
        return a.word < b.word;
    });
    return key;
}

int compare(const PreOrderKey& a, const PreOrderKey& b) {
    const std::size_t n = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.length != y.length) return x.length < y.length ? -1 : 1;
        if (x.left != y.left) return x.left < y.left ? -1 : 1;
    }
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size() ? -1 : 1;
    return 0;
}

bool precedes(const PreOrderKey& a, const PreOrderKey& b) { return compare(a, b) < 0; }

std::string format_key(const PreOrderKey& key) {
    std::string s = "{";
    for (std::size_t i = 0; i < key.entries.size(); ++i) {
        if (i) s += ", ";
        s += format_word(key.entries[i].word);
    }
    return s + "}";
}

std::optional<Automorphism> letter_permutation_automorphism(const Endomorphism& f) {
    if (!classify_letters(f)) return std::nullopt;
    const Signature sig = f.sig();
    std::vector<Word> inv(sig.rank());
    for (int b = 0; b < sig.rank(); ++b) {
        const Letter img = f.images()[b][0];
        const Letter src = basis_letter(b, sig);
        inv[basis_index(img, sig)] = L(img.sign > 0 ? src : src.inverse());
    }
    return Automorphism::trusted(f, Endomorphism(sig, inv));
}

NielsenReduction nielsen_reduce(const Word& V, const Endomorphism& phi) {
    const Signature sig = phi.sig();
    if (!is_zieschang(V, sig)) throw Error(ErrorKind::NotZieschang, format_word(V) + " is not Zieschang");
    const Word target = apply(phi, V);
    if (static_cast<int>(target.size()) > sig.relator_length())
        throw Error(ErrorKind::TargetTooLong, "|V^phi| = " + std::to_string(target.size()) + " > " +
                                                  std::to_string(sig.relator_length()));
    std::vector<GroupoidEdge> edges;
    std::vector<NielsenKind> kinds;
    std::vector<PreOrderKey> history{mu_key(phi)};
    Word U = V;
    Endomorphism cur = phi;
    const std::size_t n = U.size();
    std::vector<Word> imgs(n);
    for (;;) {
        for (std::size_t k = 0; k < n; ++k) imgs[k] = cur.image(U[k]);
        std::optional<NielsenKind> move;
        for (std::size_t k = 0; k + 1 < n && !move; ++k) {
            const Word A = common_prefix(imgs[k].inverse(), imgs[k + 1]);
            const Word B = multiply(imgs[k], A);
            const Word C = multiply(imgs[k + 1].inverse(), A);
            if (A == B || A == C || B == C)
                stuck("A, B, C not distinct at k=" + std::to_string(k + 1) + ": A=" + format_word(A) +
                      " B=" + format_word(B) + " C=" + format_word(C));
            if (!(B < A) && !(C < A)) continue;
            if (B < C) {
                const int pos = static_cast<int>(k) + 2;
                move = NielsenKind{U[k + 1].is_t() ? NielsenTag::N3Left : NielsenTag::N2Left, pos};
            } else {
                const int pos = static_cast<int>(k) + 1;
                move = NielsenKind{U[k].is_t() ? NielsenTag::N3Right : NielsenTag::N2Right, pos};
            }
        }
        if (!move) break;
        const auto alpha = nielsen_move(U, sig, move->tag, move->k);
        if (!alpha) broken("reduction chose an inapplicable move " + format_nielsen_kind(*move));
        const Word next = apply(*alpha, U);
        if (!is_zieschang(next, sig)) stuck("move " + format_nielsen_kind(*move) + " leaves the groupoid");
        Endomorphism next_phi = compose(alpha->inv(), cur);
        PreOrderKey key = mu_key(next_phi);
        if (!precedes(key, history.back()))
            stuck("mu did not decrease after " + format_nielsen_kind(*move) + ": " + format_key(history.back()) +
                  " -> " + format_key(key));
        edges.emplace_back(U, next, *alpha);
        kinds.push_back(*move);
        history.push_back(std::move(key));
        U = next;
        cur = std::move(next_phi);
    }
    const auto pi = letter_permutation_automorphism(cur);
    if (!pi) stuck("reduced map does not permute letters");
    try {
        GroupoidEdge rem(U, target, *pi);
        return NielsenReduction{std::move(edges), std::move(rem), std::move(history), std::move(kinds)};
    } catch (const Error& e) {
        stuck(std::string("final letter permutation is not an edge: ") + e.what());
    }
}

NielsenReduction nielsen_reduce(const Word& V, const Automorphism& phi) { return nielsen_reduce(V, phi.fwd()); }

std::string format_step(const CanonStep& s) {
    return "(" + s.kind + " k=" + std::to_string(s.k) + ") " + format_word(s.before) + " => " + format_word(s.after);
}

CanonicalEdge canonical_edge(const Word& V, Signature sig) {
    if (!is_zieschang(V, sig)) throw Error(ErrorKind::NotZieschang, format_word(V) + " is not Zieschang");
    CanonicalEdge out{Automorphism::identity(sig), {}};
    Word U = V;
    auto step = [&](std::string kind, int k, const Automorphism& a) {
        const Word next = apply(a, U);
        if (!is_zieschang(next, sig))
            broken("canonical step (" + kind + ") produced non-Zieschang " + format_word(next));
        out.steps.push_back({std::move(kind), k, U, next, a});
        out.phi = compose(out.phi, a);
        U = next;
    };

    std::size_t pos = 0;
    for (int j = sig.p; j >= 1; --j, ++pos) {
        const Letter want = Letter::t(j);
        if (U[pos] == want) continue;
        const std::string pre = j == sig.p ? "" : "iii.";
        std::size_t q = pos;
        while (!U[q].is_t()) ++q;
        const Letter tk = U[q];
        if (q > pos) {
            const Word P = U.slice(pos, q - pos);
            step(pre + "i", j, from_maps(sig, {{tk, conjugate(L(tk), P)}}, {{tk, conjugate(L(tk), P.inverse())}}));
        }
        if (tk != want) step(pre + "ii", j, swap_letters(sig, tk, want.inverse()));
    }

    for (int i = 1; i <= sig.g; ++i, pos += 4) {
        const std::string pre = i == 1 ? "" : "viii.";
        const Letter x = Letter::x(i), y = Letter::y(i);
        // (iv): bring x_i' to the front of the remainder.
        if (U[pos] != x.inverse()) step(pre + "iv", i, swap_letters(sig, U[pos], x));
        // (v): shorten the segment between x_i' and x_i to one letter.
        std::size_t qx = find_letter(U, x, pos + 1);
        if (qx - pos - 1 >= 2) {
            const Word P = U.slice(pos + 1, qx - pos - 1);
            const Word Q = U.suffix_from(qx + 1);
            std::size_t bi = 0;
            for (; bi < P.size(); ++bi)
                if (std::find(Q.begin(), Q.end(), P[bi].inverse()) != Q.end()) break;
            if (bi == P.size()) broken("step (v) found no letter of P inverted in Q");
            const Letter b = P[bi];
            const Word P1 = P.prefix(bi), P2 = P.suffix_from(bi + 1);
            step(pre + "v", i,
                 from_maps(sig, {{b, multiply({P1.inverse(), L(b), P2.inverse()})}},
                           {{b, multiply({P1, L(b), P2})}}));
        }
        // (vi): the single letter becomes y_i'.
        if (U[pos + 1] != y.inverse()) step(pre + "vi", i, swap_letters(sig, U[pos + 1], y));
        // (vii): clear the segment between x_i and y_i.
        const std::size_t qy = find_letter(U, y, pos + 3);
        if (qy > pos + 3) {
            const Word P = U.slice(pos + 3, qy - pos - 3);
            const Word Q = U.suffix_from(qy + 1);
            const auto graph = build_graph(U, sig);
            std::vector<bool> in_path(2 * sig.rank(), false);
            auto vid = [&](Letter l) { return 2 * basis_index(l, sig) + (l.sign < 0 ? 1 : 0); };
            auto v = successor(graph, x);
            for (int guard = 0; v && *v != y.inverse(); ++guard) {
                if (guard > 2 * sig.rank()) broken("step (vii) path does not reach y_i'");
                in_path[vid(*v)] = true;
                v = successor(graph, *v);
            }
            if (!v) broken("step (vii) path does not reach y_i'");
            std::vector<std::pair<Letter, Word>> fwd, inv;
            for (const Letter u : basis_letters(sig)) {
                const bool left = in_path[vid(u.inverse())];
                const bool right = in_path[vid(u)];
                if (!left && !right) continue;
                fwd.emplace_back(u, multiply({left ? L(y) : Word(), L(u), right ? L(y.inverse()) : Word()}));
                inv.emplace_back(u, multiply({left ? L(y.inverse()) : Word(), L(u), right ? L(y) : Word()}));
            }
            const Automorphism w(Endomorphism::from_map(sig, fwd), Endomorphism::from_map(sig, inv));
            if (apply(w, Q) != Q) broken("step (vii) map moves Q");
            if (apply(w, P) != conjugate(P, L(y.inverse()))) broken("step (vii) map does not conjugate P by y_i");
            step(pre + "vii", i, w);
        }
    }
    if (U != relator(sig)) broken("canonical path ended at " + format_word(U));
    return out;
}

std::optional<Automorphism> certify_automorphism(const Endomorphism& phi) {
    const Membership m = membership(phi);
    if (!m.fixes_relator) throw Error(ErrorKind::HypothesisViolated, "map does not fix the relator");
    if (!m.permutes_t_classes) throw Error(ErrorKind::HypothesisViolated, "map does not permute the t classes");
    try {
        const NielsenReduction r = nielsen_reduce(relator(phi.sig()), phi);
        Automorphism inv = invert(r.remainder.aut());
        for (auto it = r.edges.rbegin(); it != r.edges.rend(); ++it) inv = compose(inv, invert(it->aut()));
        return Automorphism(phi, inv.fwd());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ReductionStuck || e.kind() == ErrorKind::WitnessInvalid) return std::nullopt;
        throw;
    }
}

}  // namespace zieschang
