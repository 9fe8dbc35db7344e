#include "zieschang/factorize.hpp"

#include <algorithm>

namespace zieschang {

namespace {

Word L(Letter l) { return Word::of(l); }

[[noreturn]] void coset_violation(const std::string& why) { throw Error(ErrorKind::CosetViolation, why); }

Automorphism single_move(Signature sig, Letter l, const Word& fwd, const Word& inv) {
    return Automorphism::trusted(Endomorphism::from_map(sig, {{l, fwd}}), Endomorphism::from_map(sig, {{l, inv}}));
}

// t -> t^X
Automorphism conjugate_t(Signature sig, Letter t, const Word& X) {
    return single_move(sig, t, conjugate(L(t), X), conjugate(L(t), X.inverse()));
}

std::size_t position_of(const Word& w, Letter l) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == l) return i;
    return w.size();
}

Automorphism loop_of(const GroupoidEdge& e, CanonicalCache& cache) {
    return compose({invert(cache.phi(e.source())), e.aut(), cache.phi(e.target())});
}

bool moves_only(const Endomorphism& f, Letter l, const Word& image) {
    return f == Endomorphism::from_map(f.sig(), {{l, image}});
}

void append_inverted_reversed(std::vector<ScriptMove>& out, std::vector<ScriptMove> moves) {
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back({it->edge.inverse(), it->family + "^-1"});
}

// Moves from V = P1 t_j Q1 to t_j P1 Q1.
std::vector<ScriptMove> front_moves(const Word& V, Letter tj, Signature sig) {
    const std::size_t q = position_of(V, tj);
    if (q == 0) return {};
    std::size_t r = 0;
    while (r < q && !V[r].is_t()) ++r;
    if (r == q) return {{GroupoidEdge(V, conjugate_t(sig, tj, V.prefix(q))), "t-to-front"}};
    std::vector<ScriptMove> out;
    Word cur = V;
    const Word between = V.slice(r + 1, q - r - 1);
    if (!between.empty()) {
        out.push_back({GroupoidEdge(cur, conjugate_t(sig, tj, between)), "t-past-word"});
        cur = out.back().edge.target();
    }
    out.push_back({GroupoidEdge(cur, conjugate_t(sig, tj, V.prefix(r + 1))), "t-past-t"});
    return out;
}

EdgeScript script_p2(const GroupoidEdge& e) {
    const Signature sig = e.sig();
    const Word& V = e.source();
    const Word& W = e.target();
    for (int j = sig.p; j >= 1; --j) {
        const Letter tj = Letter::t(j);
        if (e.aut().fwd().image(tj) != L(tj)) continue;
        const std::size_t qv = position_of(V, tj), qw = position_of(W, tj);
        if (apply(e.aut(), V.prefix(qv)) != W.prefix(qw)) continue;
        EdgeScript s;
        s.moves = front_moves(V, tj, sig);
        const std::vector<ScriptMove> back = front_moves(W, tj, sig);
        Automorphism mid = e.aut();
        for (const auto& m : s.moves) mid = compose(invert(m.edge.aut()), mid);
        for (const auto& m : back) mid = compose(mid, m.edge.aut());
        const Word from = s.moves.empty() ? V : s.moves.back().edge.target();
        const Word to = back.empty() ? W : back.back().edge.target();
        s.moves.push_back({GroupoidEdge(from, to, mid), "anchored-core"});
        append_inverted_reversed(s.moves, back);
        return s;
    }
    coset_violation("no fixed t-letter anchors the edge " + format_word(V) + " => " + format_word(W));
}

EdgeScript script_p1(const GroupoidEdge& e, CanonicalCache& cache, bool allow_inverse);

// V = P t1 a Q a' R with e = (a -> t1' a): the hexagon through t1 P a Q a' R.
std::optional<EdgeScript> hexagon_form1(const GroupoidEdge& e) {
    const Signature sig = e.sig();
    const Letter t1 = Letter::t(1);
    const Word& V = e.source();
    const std::size_t q = position_of(V, t1);
    if (q + 1 >= V.size()) return std::nullopt;
    const Letter a = V[q + 1];
    if (!a.is_x_letter() || position_of(V, a.inverse()) < q + 1) return std::nullopt;
    if (!moves_only(e.aut().fwd(), a, multiply(L(t1).inverse(), L(a)))) return std::nullopt;
    const Word& W = e.target();
    const Word P = V.prefix(q);
    const GroupoidEdge m4(W, conjugate_t(sig, t1, W.prefix(position_of(W, t1))));
    std::vector<ScriptMove> tail{{m4, "t1-to-front"}};
    if (!P.empty()) {
        const GroupoidEdge m5(m4.target(), single_move(sig, a, multiply(P.inverse(), L(a)), multiply(P, L(a))));
        tail.push_back({m5, "absorb-prefix"});
    }
    Automorphism top = e.aut();
    for (const auto& m : tail) top = compose(top, m.edge.aut());
    EdgeScript s;
    s.moves.push_back({GroupoidEdge(V, tail.back().edge.target(), top), "hexagon"});
    append_inverted_reversed(s.moves, tail);
    return s;
}

// V = P a t1 Q a' R with e = (a -> a t1'): conjugate t1 by a at both ends.
std::optional<EdgeScript> square_form2(const GroupoidEdge& e, CanonicalCache& cache) {
    const Signature sig = e.sig();
    const Letter t1 = Letter::t(1);
    const Word& V = e.source();
    const std::size_t q = position_of(V, t1);
    if (q == 0 || q >= V.size()) return std::nullopt;
    const Letter a = V[q - 1];
    if (!a.is_x_letter() || position_of(V, a.inverse()) < q) return std::nullopt;
    if (!moves_only(e.aut().fwd(), a, multiply(L(a), L(t1).inverse()))) return std::nullopt;
    const Automorphism n = conjugate_t(sig, t1, L(a));
    const GroupoidEdge left(V, n);
    const GroupoidEdge right(e.target(), n);
    const GroupoidEdge mid(left.target(), right.target(), compose({invert(n), e.aut(), n}));
    EdgeScript s;
    s.moves.push_back({left, "t1-conjugate"});
    const EdgeScript inner = script_p1(mid, cache, false);
    s.moves.insert(s.moves.end(), inner.moves.begin(), inner.moves.end());
    s.moves.push_back({right.inverse(), "t1-conjugate^-1"});
    return s;
}

EdgeScript script_p1(const GroupoidEdge& e, CanonicalCache& cache, bool allow_inverse) {
    if (coset_tag(loop_of(e, cache))) return EdgeScript{{{e, "raw-loop"}}};
    if (auto s = hexagon_form1(e)) return *s;
    if (auto s = square_form2(e, cache)) return *s;
    if (allow_inverse) {
        const EdgeScript inv = script_p1(e.inverse(), cache, false);
        EdgeScript s;
        append_inverted_reversed(s.moves, inv.moves);
        return s;
    }
    coset_violation("no p=1 edge family matches " + format_word(e.source()) + " => " + format_word(e.target()));
}

EdgeScript script_p0(const GroupoidEdge& e, CanonicalCache& cache, bool allow_inverse) {
    if (coset_tag(loop_of(e, cache))) return EdgeScript{{{e, "raw-loop"}}};
    const Signature sig = e.sig();
    const Word& V = e.source();
    if (V.size() >= 2) {
        const Letter a = V[0], b = V[1];
        if (moves_only(e.aut().fwd(), b, multiply(L(a).inverse(), L(b)))) {
            const GroupoidEdge e1(V, single_move(sig, a, multiply(L(a), L(b).inverse()), multiply(L(a), L(b))));
            const GroupoidEdge e2(e1.target(), e.target(), compose(invert(e1.aut()), e.aut()));
            return EdgeScript{{{e1, "split-first"}, {e2, "split-rest"}}};
        }
    }
    if (allow_inverse) {
        const EdgeScript inv = script_p0(e.inverse(), cache, false);
        EdgeScript s;
        append_inverted_reversed(s.moves, inv.moves);
        return s;
    }
    coset_violation("no I-family matches " + format_word(V) + " => " + format_word(e.target()));
}

GenWord gen(Family f, int i, int exponent = 1) { return GenWord({{{f, i}, exponent}}); }

GenWord factorize_rec(const Automorphism& a);

// Factor an element of the stabilizer named by the Stab tag.
GenWord factor_stab(const Automorphism& s) {
    const Signature sig = s.sig();
    if (sig.p >= 1) return factorize_rec(restrict_drop_tp(s));
    const GenWord small = factorize_rec(restrict_relabel_K(s));
    const GenWord lifted = shift_indices(small, 1);
    const Automorphism delta = compose(s, invert(eval_gen_word(lifted, sig)));
    // delta must be a power of alpha_1: x1 -> y1^-k x1, all else fixed.
    const Letter x1 = Letter::x(1), y1 = Letter::y(1);
    const Word img = delta.fwd().image(x1);
    if (img.empty() || img.back() != x1)
        throw Error(ErrorKind::InvariantViolation, "kernel correction is not a power of alpha_1");
    const Word head = img.prefix(img.size() - 1);
    int k = 0;
    for (const Letter l : head) {
        if (l.positive() != y1 || (k != 0 && (l.sign < 0) != (k > 0)))
            throw Error(ErrorKind::InvariantViolation, "kernel correction is not a power of alpha_1");
        k += l.sign < 0 ? 1 : -1;
    }
    if (delta.fwd() != eval_gen_word(power(GenName{Family::Alpha, 1}, k), sig).fwd())
        throw Error(ErrorKind::InvariantViolation, "kernel correction is not a power of alpha_1");
    return power(GenName{Family::Alpha, 1}, k) * lifted;
}

GenWord factorize_rec(const Automorphism& a) {
    const Signature sig = a.sig();
    const Membership m = membership(a.fwd());
    if (!m.in_A) throw Error(ErrorKind::NotInA, "automorphism is not in A" + format_signature(sig));
    if (a.fwd().is_identity()) return {};
    if (sig.rank() <= 1) throw Error(ErrorKind::InvariantViolation, "A" + format_signature(sig) + " is trivial");
    CanonicalCache cache(sig);
    const Word v0 = relator(sig);
    const NielsenReduction red = nielsen_reduce(v0, a);
    std::vector<BaseLoop> loops;
    for (const auto& e : red.edges) {
        auto part = nielsen_to_base_loops(e, cache);
        loops.insert(loops.end(), part.begin(), part.end());
    }
    {
        auto part = nielsen_to_base_loops(red.remainder, cache);
        loops.insert(loops.end(), part.begin(), part.end());
    }
    GenWord out;
    for (const auto& l : loops) {
        const PeeledLoop p = peel_special(l, sig);
        out = out * p.prefix * factor_stab(p.stab) * p.suffix;
    }
    if (eval_gen_word(out, sig).fwd() != a.fwd())
        throw Error(ErrorKind::RecompositionMismatch, "factorization does not evaluate to the input");
    return out;
}

}  // namespace

const char* coset_tag_name(CosetTag tag) {
    switch (tag) {
        case CosetTag::Stab: return "STAB";
        case CosetTag::StabTimesSpecial: return "STAB_TIMES_SPECIAL";
        case CosetTag::StabTimesSpecialInv: return "STAB_TIMES_SPECIAL_INV";
    }
    return "?";
}

std::optional<CosetTag> coset_tag(const Automorphism& loop) {
    const Signature sig = loop.sig();
    if (sig.p >= 1) {
        const Letter tp = Letter::t(sig.p);
        Word special;
        if (sig.p >= 2) {
            special = L(Letter::t(sig.p - 1));
        } else {
            if (sig.g < 1) return loop.fwd().image(tp) == L(tp) ? std::optional(CosetTag::Stab) : std::nullopt;
            special = conjugate(L(tp), multiply({L(Letter::x(1)).inverse(), L(Letter::y(1)).inverse(), L(Letter::x(1))}));
        }
        if (loop.fwd().image(tp) == L(tp)) return CosetTag::Stab;
        if (loop.fwd().image(tp) == special) return CosetTag::StabTimesSpecial;
        if (loop.inv().image(tp) == special) return CosetTag::StabTimesSpecialInv;
        return std::nullopt;
    }
    if (sig.g < 1) return CosetTag::Stab;
    const Word x1b = L(Letter::x(1, -1));
    const Word k = multiply({x1b, L(Letter::y(1, -1)), L(Letter::x(1))});
    if (apply(loop, k) == k) return CosetTag::Stab;
    if (apply(loop, x1b) == x1b) return CosetTag::StabTimesSpecial;
    return std::nullopt;
}

const Automorphism& CanonicalCache::phi(const Word& V) {
    auto it = cache_.find(V);
    if (it == cache_.end()) it = cache_.emplace(V, canonical_edge(V, sig_).phi).first;
    return it->second;
}

EdgeScript edge_script(const GroupoidEdge& e, CanonicalCache& cache) {
    const Signature sig = e.sig();
    EdgeScript s;
    if (sig.p >= 2) {
        if (coset_tag(loop_of(e, cache))) s.moves.push_back({e, "raw-loop"});
        else s = script_p2(e);
    } else if (sig.p == 1) {
        s = script_p1(e, cache, true);
    } else {
        s = script_p0(e, cache, true);
    }
    // The script must recompose to the edge exactly.
    Automorphism acc = Automorphism::identity(sig);
    Word at = e.source();
    for (const auto& m : s.moves) {
        if (m.edge.source() != at) throw Error(ErrorKind::InvariantViolation, "edge script endpoints do not chain");
        acc = compose(acc, m.edge.aut());
        at = m.edge.target();
    }
    if (at != e.target() || acc.fwd() != e.aut().fwd())
        throw Error(ErrorKind::InvariantViolation, "edge script does not recompose to the edge");
    return s;
}

std::vector<BaseLoop> nielsen_to_base_loops(const GroupoidEdge& e, CanonicalCache& cache) {
    const EdgeScript s = edge_script(e, cache);
    std::vector<BaseLoop> out;
    for (const auto& m : s.moves) {
        const Automorphism l = loop_of(m.edge, cache);
        const auto tag = coset_tag(l);
        if (!tag)
            coset_violation("loop from " + m.family + " move " + format_word(m.edge.source()) + " => " +
                            format_word(m.edge.target()) + " lies outside the stated cosets");
        out.push_back({l, *tag});
    }
    return out;
}

std::vector<BaseLoop> nielsen_to_base_loops(const GroupoidEdge& e) {
    CanonicalCache cache(e.sig());
    return nielsen_to_base_loops(e, cache);
}

PeeledLoop peel_special(const BaseLoop& l, Signature sig) {
    if (coset_tag(l.aut) != l.tag) coset_violation(std::string("loop is not in the ") + coset_tag_name(l.tag) + " coset");
    if (l.tag == CosetTag::Stab) return {l.aut, {}, {}};
    if (sig.p >= 1) {
        const GenName special = sig.p >= 2 ? GenName{Family::Sigma, sig.p} : GenName{Family::Gamma, 1};
        const Automorphism s = generator(special, sig);
        if (l.tag == CosetTag::StabTimesSpecial) return {compose(l.aut, invert(s)), {}, gen(special.family, special.index)};
        return {compose(s, l.aut), gen(special.family, special.index, -1), {}};
    }
    if (l.tag != CosetTag::StabTimesSpecial) coset_violation("p=0 loops have no inverse special coset");
    const Automorphism ba = compose(generator({Family::Beta, 1}, sig), generator({Family::Alpha, 1}, sig));
    const Automorphism chi = compose({ba, l.aut, invert(ba)});
    return {chi, parse_gen_word("a1' b1'"), parse_gen_word("b1 a1")};
}

GenWord factorize_adl(const Automorphism& a) { return factorize_rec(a); }

GenWord factorize_adlh(const Automorphism& a) {
    const GenWord w = to_adlh(factorize_adl(a), a.sig());
    if (eval_gen_word(w, a.sig()).fwd() != a.fwd())
        throw Error(ErrorKind::RecompositionMismatch, "ADLH rewrite does not evaluate to the input");
    return w;
}

}  // namespace zieschang
