#include "zieschang/gens.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "zieschang/groupoid.hpp"

namespace zieschang {

namespace {

Word L(Letter l) { return Word::of(l); }

}  // namespace

GenWord::GenWord(const std::vector<GenToken>& tokens) {
    for (const auto& t : tokens) {
        if (!tokens_.empty() && tokens_.back().name == t.name &&
            tokens_.back().exponent == -t.exponent) {
            tokens_.pop_back();
        } else {
            tokens_.push_back(t);
        }
    }
}

GenWord GenWord::inverse() const {
    std::vector<GenToken> out;
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) out.push_back({it->name, -it->exponent});
    return GenWord(out);
}

GenWord GenWord::operator*(const GenWord& o) const {
    std::vector<GenToken> all = tokens_;
    all.insert(all.end(), o.tokens_.begin(), o.tokens_.end());
    return GenWord(all);
}

bool valid_in(GenName name, Signature sig) {
    switch (name.family) {
        case Family::Sigma: return name.index >= 2 && name.index <= sig.p;
        case Family::Alpha:
        case Family::Beta: return name.index >= 1 && name.index <= sig.g;
        case Family::Gamma: return name.index >= std::max(2 - sig.p, 1) && name.index <= sig.g;
    }
    return false;
}

Automorphism generator(GenName name, Signature sig) {
    if (!valid_in(name, sig))
        throw Error(ErrorKind::IndexOutOfRange,
                    format_gen_name(name) + " is not a generator for " + format_signature(sig));
    const int i = name.index;
    using M = std::vector<std::pair<Letter, Word>>;
    M fwd, inv;
    switch (name.family) {
        case Family::Sigma: {
            const Letter tj = Letter::t(i), tk = Letter::t(i - 1);
            fwd = {{tj, L(tk)}, {tk, conjugate(L(tj), L(tk))}};
            inv = {{tk, L(tj)}, {tj, conjugate(L(tk), L(tj).inverse())}};
            break;
        }
        case Family::Alpha: {
            const Letter x = Letter::x(i), y = Letter::y(i);
            fwd = {{x, multiply(L(y).inverse(), L(x))}};
            inv = {{x, multiply(L(y), L(x))}};
            break;
        }
        case Family::Beta: {
            const Letter x = Letter::x(i), y = Letter::y(i);
            fwd = {{y, multiply(L(x), L(y))}};
            inv = {{y, multiply(L(x).inverse(), L(y))}};
            break;
        }
        case Family::Gamma: {
            const Letter x = Letter::x(i), y = Letter::y(i);
            if (i == 1) {
                const Letter t = Letter::t(1);
                const Word w = multiply({L(t), conjugate(L(y).inverse(), L(x))});
                fwd = {{t, conjugate(L(t), w)}, {x, multiply(L(x), w)}};
                inv = {{t, conjugate(L(t), w.inverse())}, {x, multiply(L(x), w.inverse())}};
            } else {
                const Letter xp = Letter::x(i - 1), yp = Letter::y(i - 1);
                const Word w = multiply({L(yp), conjugate(L(y).inverse(), L(x))});
                fwd = {{xp, multiply(w.inverse(), L(xp))},
                       {yp, conjugate(L(yp), w)},
                       {x, multiply(L(x), w)}};
                inv = {{xp, multiply(w, L(xp))},
                       {yp, conjugate(L(yp), w.inverse())},
                       {x, multiply(L(x), w.inverse())}};
            }
            break;
        }
    }
    return Automorphism(Endomorphism::from_map(sig, fwd), Endomorphism::from_map(sig, inv));
}

std::vector<GenName> gen_set(Signature sig, GenVariant variant) {
    std::vector<GenName> out;
    for (int j = 2; j <= sig.p; ++j) out.push_back({Family::Sigma, j});
    for (int i = 1; i <= sig.g; ++i)
        if (variant == GenVariant::ADL || i <= 2) out.push_back({Family::Alpha, i});
    for (int i = 1; i <= sig.g; ++i) out.push_back({Family::Beta, i});
    for (int i = std::max(2 - sig.p, 1); i <= sig.g; ++i) out.push_back({Family::Gamma, i});
    return out;
}

Automorphism eta() {
    const Signature sig{3, 0};
    const Word x1 = L(Letter::x(1)), y1 = L(Letter::y(1)), x2 = L(Letter::x(2)),
               y2 = L(Letter::y(2)), x3 = L(Letter::x(3)), y3 = L(Letter::y(3));
    const Word c3 = commutator(x3, y3);
    const Word c23 = multiply(commutator(x2, y2), c3);
    const Endomorphism f = Endomorphism::from_map(
        sig, {{Letter::x(1), multiply({y3.inverse(), x3.inverse(), y3.inverse()})},
              {Letter::y(1), conjugate(y3.inverse(), multiply(x3, y3))},
              {Letter::x(2), conjugate(x2, c3)},
              {Letter::y(2), conjugate(y2, c3)},
              {Letter::x(3), conjugate(x1, c23)},
              {Letter::y(3), conjugate(y1, c23)}});
    // The witness comes from the Nielsen factorization.
    auto a = certify_automorphism(f);
    if (!a) throw Error(ErrorKind::WitnessInvalid, "eta could not be certified");
    return *a;
}

Automorphism zeta_lift(Signature sig) {
    std::vector<std::pair<Letter, Word>> m;
    for (int i = 1; i <= sig.g; ++i) {
        m.emplace_back(Letter::x(i), L(Letter::y(sig.g + 1 - i)));
        m.emplace_back(Letter::y(i), L(Letter::x(sig.g + 1 - i)));
    }
    for (int j = 1; j <= sig.p; ++j) m.emplace_back(Letter::t(j), L(Letter::t(sig.p + 1 - j, -1)));
    const Endomorphism f = Endomorphism::from_map(sig, m);
    return Automorphism(f, f);
}

Automorphism eval_gen_word(const GenWord& w, Signature sig) {
    Automorphism acc = Automorphism::identity(sig);
    std::map<std::pair<int, int>, Automorphism> cache;
    for (const auto& t : w.tokens()) {
        const auto key = std::make_pair(static_cast<int>(t.name.family), t.name.index);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, generator(t.name, sig)).first;
        acc = compose(acc, t.exponent > 0 ? it->second : invert(it->second));
    }
    return acc;
}

GenWord humphries_conjugator() {
    return parse_gen_word("b1 g2 b2 a2 g3 b3 b2 g3 g2 b2 b1 g2 a2 b2 g3 b3");
}

GenWord shift_indices(const GenWord& w, int shift) {
    std::vector<GenToken> out;
    for (auto t : w.tokens()) {
        t.name.index += shift;
        out.push_back(t);
    }
    return GenWord(out);
}

GenWord power(GenName name, int k) {
    std::vector<GenToken> out;
    for (int i = 0; i < std::abs(k); ++i) out.push_back({name, k < 0 ? -1 : 1});
    return GenWord(out);
}

GenWord humphries_rewrite(int i, Signature sig) {
    if (i < 3 || i > sig.g)
        throw Error(ErrorKind::IndexOutOfRange,
                    "humphries_rewrite needs 3 <= i <= g, got i=" + std::to_string(i));
    const GenWord c = humphries_conjugator();
    const GenWord base = c.inverse() * parse_gen_word("a1") * c;
    // Shifting moves alpha_1, alpha_2 to alpha_{i-2}, alpha_{i-1}; those with
    // index >= 3 are rewritten in turn.
    return to_adlh(shift_indices(base, i - 3), sig);
}

GenWord to_adlh(const GenWord& w, Signature sig) {
    std::vector<GenToken> out;
    for (const auto& t : w.tokens()) {
        if (t.name.family == Family::Alpha && t.name.index >= 3) {
            GenWord r = humphries_rewrite(t.name.index, sig);
            if (t.exponent < 0) r = r.inverse();
            out.insert(out.end(), r.tokens().begin(), r.tokens().end());
        } else {
            out.push_back(t);
        }
    }
    return GenWord(out);
}

GenName parse_gen_name(std::string_view token, int* exponent) {
    if (token.size() < 2) throw Error(ErrorKind::ParseError, "bad generator '" + std::string(token) + "'");
    GenName n;
    switch (token[0]) {
        case 's': n.family = Family::Sigma; break;
        case 'a': n.family = Family::Alpha; break;
        case 'b': n.family = Family::Beta; break;
        case 'g': n.family = Family::Gamma; break;
        default: throw Error(ErrorKind::ParseError, "bad generator '" + std::string(token) + "'");
    }
    std::size_t end = token.size();
    int e = 1;
    if (token.back() == '\'') {
        e = -1;
        --end;
    }
    if (end <= 1 || token[1] == '0') throw Error(ErrorKind::ParseError, "bad generator '" + std::string(token) + "'");
    int idx = 0;
    for (std::size_t i = 1; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw Error(ErrorKind::ParseError, "bad generator '" + std::string(token) + "'");
        idx = idx * 10 + (token[i] - '0');
        if (idx > 1000000) throw Error(ErrorKind::ParseError, "generator index too large");
    }
    n.index = idx;
    if (exponent) *exponent = e;
    return n;
}

std::string format_gen_name(GenName name) {
    const char c = name.family == Family::Sigma  ? 's'
                   : name.family == Family::Alpha ? 'a'
                   : name.family == Family::Beta  ? 'b'
                                                  : 'g';
    return std::string(1, c) + std::to_string(name.index);
}

GenWord parse_gen_word(std::string_view text) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) toks.push_back(text.substr(i, j - i));
        i = j;
    }
    if (toks.size() == 1 && toks[0] == "1") return {};
    if (toks.empty()) throw Error(ErrorKind::ParseError, "empty generator word (use 1 for the identity)");
    std::vector<GenToken> out;
    for (auto t : toks) {
        int e = 1;
        const GenName n = parse_gen_name(t, &e);
        out.push_back({n, e});
    }
    return GenWord(out);
}

std::string format_gen_word(const GenWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += format_gen_name(w.tokens()[i].name);
        if (w.tokens()[i].exponent < 0) s += '\'';
    }
    return s;
}

}  // namespace zieschang
