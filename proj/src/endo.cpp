#include "zieschang/endo.hpp"

#include <algorithm>
#include <sstream>

namespace zieschang {

namespace {

void require_same(Signature a, Signature b) {
    if (!(a == b))
        throw Error(ErrorKind::SignatureMismatch,
                    format_signature(a) + " vs " + format_signature(b));
}

bool mentions(const Word& w, Letter basis) {
    for (const auto& l : w)
        if (l.positive() == basis) return true;
    return false;
}

}  // namespace

Endomorphism::Endomorphism(Signature sig) : sig_(sig) {
    for (const auto& l : basis_letters(sig)) images_.push_back(Word::of(l));
}

Endomorphism::Endomorphism(Signature sig, std::vector<Word> images)
    : sig_(sig), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != sig.rank())
        throw Error(ErrorKind::SignatureMismatch, "image count does not match rank");
    for (const auto& w : images_) check_word_in(w, sig);
}

Endomorphism Endomorphism::from_map(Signature sig,
                                    const std::vector<std::pair<Letter, Word>>& moves) {
    Endomorphism f(sig);
    for (const auto& [key, img] : moves) {
        if (!letter_in(key, sig))
            throw Error(ErrorKind::IndexOutOfRange, "letter " + format_letter(key) + " not in signature");
        check_word_in(img, sig);
        f.images_[basis_index(key, sig)] = key.sign > 0 ? img : img.inverse();
    }
    return f;
}

Word Endomorphism::image(Letter l) const {
    const Word& w = images_[basis_index(l, sig_)];
    return l.sign > 0 ? w : w.inverse();
}

bool Endomorphism::is_identity() const { return *this == Endomorphism(sig_); }

std::size_t Endomorphism::max_image_length() const {
    std::size_t m = 0;
    for (const auto& w : images_) m = std::max(m, w.size());
    return m;
}

Word apply(const Endomorphism& f, const Word& u) {
    std::vector<Letter> st;
    for (const auto& l : u) {
        if (!letter_in(l, f.sig()))
            throw Error(ErrorKind::SignatureMismatch, "letter " + format_letter(l) + " outside signature");
        const Word& img = f.images()[basis_index(l, f.sig())];
        auto push = [&st](Letter m) {
            if (!st.empty() && st.back() == m.inverse()) st.pop_back();
            else st.push_back(m);
        };
        if (l.sign > 0) {
            for (const auto& m : img) push(m);
        } else {
            for (auto it = img.end(); it != img.begin();) push((--it)->inverse());
        }
    }
    return Word::from_reduced(std::move(st));
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    require_same(f.sig(), g.sig());
    std::vector<Word> imgs;
    imgs.reserve(f.images().size());
    for (const auto& w : f.images()) imgs.push_back(apply(g, w));
    return Endomorphism(f.sig(), std::move(imgs));
}

Automorphism::Automorphism(Endomorphism fwd, Endomorphism inv)
    : fwd_(std::move(fwd)), inv_(std::move(inv)) {
    require_same(fwd_.sig(), inv_.sig());
    if (!compose(fwd_, inv_).is_identity() || !compose(inv_, fwd_).is_identity())
        throw Error(ErrorKind::WitnessInvalid, "witness does not invert the automorphism");
}

Automorphism Automorphism::identity(Signature sig) {
    return trusted(Endomorphism(sig), Endomorphism(sig));
}

Automorphism Automorphism::trusted(Endomorphism fwd, Endomorphism inv) {
    Automorphism a;
    a.fwd_ = std::move(fwd);
    a.inv_ = std::move(inv);
    return a;
}

Word apply(const Automorphism& a, const Word& u) { return apply(a.fwd(), u); }

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    return Automorphism::trusted(compose(a.fwd(), b.fwd()), compose(b.inv(), a.inv()));
}

Automorphism compose(std::initializer_list<Automorphism> as) {
    if (as.size() == 0) throw Error(ErrorKind::SignatureMismatch, "empty composition");
    Automorphism acc = *as.begin();
    for (auto it = as.begin() + 1; it != as.end(); ++it) acc = compose(acc, *it);
    return acc;
}

Automorphism invert(const Automorphism& a) { return Automorphism::trusted(a.inv(), a.fwd()); }

Automorphism inner(Signature sig, const Word& w) {
    std::vector<Word> fwd, inv;
    for (const auto& l : basis_letters(sig)) {
        fwd.push_back(conjugate(Word::of(l), w));
        inv.push_back(conjugate(Word::of(l), w.inverse()));
    }
    return Automorphism::trusted(Endomorphism(sig, fwd), Endomorphism(sig, inv));
}

bool TPermutation::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::optional<LetterPermutation> classify_letters(const Endomorphism& f) {
    const Signature sig = f.sig();
    LetterPermutation out;
    std::vector<bool> seen(sig.rank(), false);
    for (int j = 1; j <= sig.p; ++j) {
        const Word& w = f.images()[j - 1];
        if (w.size() != 1 || !w[0].is_t() || w[0].sign < 0) return std::nullopt;
        if (seen[w[0].index - 1]) return std::nullopt;
        seen[w[0].index - 1] = true;
        out.t.image.push_back(w[0].index);
    }
    for (int idx = sig.p; idx < sig.rank(); ++idx) {
        const Word& w = f.images()[idx];
        if (w.size() != 1 || !w[0].is_x_letter()) return std::nullopt;
        const int b = basis_index(w[0], sig);
        if (seen[b]) return std::nullopt;
        seen[b] = true;
        out.x_images.push_back(w[0]);
    }
    return out;
}

std::optional<TPermutation> t_class_permutation(const Endomorphism& f) {
    const Signature sig = f.sig();
    TPermutation pi;
    std::vector<bool> seen(sig.p, false);
    for (int j = 1; j <= sig.p; ++j) {
        const Word core = cyclic_core(f.images()[j - 1]);
        if (core.size() != 1 || !core[0].is_t() || core[0].sign < 0) return std::nullopt;
        const int k = core[0].index;
        if (seen[k - 1]) return std::nullopt;
        seen[k - 1] = true;
        pi.image.push_back(k);
    }
    return pi;
}

Membership membership(const Endomorphism& f) {
    Membership m;
    const Word v0 = relator(f.sig());
    m.fixes_relator = apply(f, v0) == v0;
    m.permutes_t_classes = t_class_permutation(f);
    m.in_A = m.fixes_relator && m.permutes_t_classes.has_value();
    return m;
}

std::optional<Word> outer_equal(const Automorphism& a, const Automorphism& b) {
    require_same(a.sig(), b.sig());
    const Signature sig = a.sig();
    // c = b^{-1} a must be the inner automorphism u -> w' u w.
    const Endomorphism c = compose(b.inv(), a.fwd());
    const auto basis = basis_letters(sig);
    int moved = -1;
    for (int i = 0; i < sig.rank(); ++i)
        if (!(c.images()[i] == Word::of(basis[i]))) {
            moved = i;
            break;
        }
    if (moved < 0) return Word{};

    const Letter u = basis[moved];
    const Word cu = c.images()[moved];
    const Word core = cyclic_core(cu);
    if (!(core == Word::of(u))) return std::nullopt;
    const std::size_t strip = (cu.size() - 1) / 2;
    const Word tail = cu.suffix_from(strip + 1);  // cu = tail' u tail

    auto works = [&](const Word& w) {
        for (int i = 0; i < sig.rank(); ++i)
            if (!(conjugate(Word::of(basis[i]), w) == c.images()[i])) return false;
        return true;
    };
    // Candidates lie in <u> tail; the exponent is bounded by the image lengths.
    const int bound = static_cast<int>(c.max_image_length()) + 1;
    for (int n = 0; n <= bound; ++n) {
        for (int s : {1, -1}) {
            if (n == 0 && s < 0) continue;
            const Word w = multiply(power(Word::of(u), s * n), tail);
            if (works(w)) return w;
        }
    }
    return std::nullopt;
}

Automorphism restrict_drop_tp(const Automorphism& a) {
    const Signature sig = a.sig();
    if (sig.p < 1) throw Error(ErrorKind::IndexOutOfRange, "restrict_drop_tp needs p >= 1");
    const Letter tp = Letter::t(sig.p);
    if (!(a.fwd().image(tp) == Word::of(tp)))
        throw Error(ErrorKind::NotInStabilizer, "t_p is not fixed");
    const Signature sub{sig.g, sig.p - 1};
    std::vector<Word> fwd, inv;
    for (int idx = 0; idx < sig.rank(); ++idx) {
        if (idx == sig.p - 1) continue;
        const Word& f = a.fwd().images()[idx];
        const Word& i = a.inv().images()[idx];
        if (mentions(f, tp) || mentions(i, tp))
            throw Error(ErrorKind::ImageEscapes,
                        "image of " + format_letter(basis_letter(idx, sig)) + " mentions t_p");
        fwd.push_back(f);
        inv.push_back(i);
    }
    return Automorphism(Endomorphism(sub, fwd), Endomorphism(sub, inv));
}

Automorphism restrict_relabel_K(const Automorphism& a) {
    const Signature sig = a.sig();
    if (sig.p != 0 || sig.g < 1)
        throw Error(ErrorKind::IndexOutOfRange, "restrict_relabel_K needs p = 0 and g >= 1");
    const Word special = parse_word("x1' y1' x1");
    if (!(apply(a, special) == special))
        throw Error(ErrorKind::NotInStabilizer, "x1' y1' x1 is not fixed");
    const Signature sub{sig.g - 1, 1};
    auto relabel = [&](const Word& w, Letter src) {
        std::vector<Letter> out;
        for (const auto& l : w) {
            if (l.kind == Kind::X && l.index == 1)
                throw Error(ErrorKind::ImageEscapes,
                            "image of " + format_letter(src) + " leaves the subgroup K");
            if (l.kind == Kind::Y && l.index == 1) out.push_back(Letter::t(1, l.sign));
            else out.push_back({l.kind, l.index - 1, l.sign});
        }
        return Word::from_reduced(std::move(out));
    };
    std::vector<Letter> sources{Letter::y(1)};
    for (int i = 2; i <= sig.g; ++i) {
        sources.push_back(Letter::x(i));
        sources.push_back(Letter::y(i));
    }
    std::vector<Word> fwd, inv;
    for (const auto& s : sources) {
        fwd.push_back(relabel(a.fwd().image(s), s));
        inv.push_back(relabel(a.inv().image(s), s));
    }
    return Automorphism(Endomorphism(sub, fwd), Endomorphism(sub, inv));
}

std::string format_endomorphism(const Endomorphism& f) {
    std::ostringstream os;
    os << "sig g=" << f.sig().g << " p=" << f.sig().p << "\n";
    const auto basis = basis_letters(f.sig());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.images()[i] == Word::of(basis[i])) continue;
        os << format_letter(basis[i]) << " -> " << format_word(f.images()[i]) << "\n";
    }
    return os.str();
}

Signature parse_signature_header(const std::string& line) {
    std::istringstream is(line);
    std::string tag, gs, ps, extra;
    if (!(is >> tag >> gs >> ps) || tag != "sig" || gs.rfind("g=", 0) != 0 ||
        ps.rfind("p=", 0) != 0 || (is >> extra))
        throw Error(ErrorKind::ParseError, "expected header 'sig g=<g> p=<p>', got '" + line + "'");
    Signature sig;
    try {
        std::size_t used = 0;
        sig.g = std::stoi(gs.substr(2), &used);
        if (used != gs.size() - 2) throw std::invalid_argument("g");
        sig.p = std::stoi(ps.substr(2), &used);
        if (used != ps.size() - 2) throw std::invalid_argument("p");
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad signature header '" + line + "'");
    }
    if (sig.g < 0 || sig.p < 0) throw Error(ErrorKind::ParseError, "negative signature");
    return sig;
}

Endomorphism parse_endomorphism(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::optional<Signature> sig;
    std::vector<std::pair<Letter, Word>> moves;
    std::vector<int> seen;
    while (std::getline(is, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        line = line.substr(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!sig) {
            sig = parse_signature_header(line);
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) throw Error(ErrorKind::ParseError, "missing '->' in '" + line + "'");
        std::string lhs = line.substr(0, arrow);
        lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](char ch) { return ch == ' ' || ch == '\t'; }),
                  lhs.end());
        const Letter key = parse_letter(lhs);
        const Word img = parse_word(line.substr(arrow + 2), *sig);
        if (!letter_in(key, *sig)) throw Error(ErrorKind::IndexOutOfRange, "letter " + lhs + " not in signature");
        const int b = basis_index(key, *sig);
        if (std::find(seen.begin(), seen.end(), b) != seen.end())
            throw Error(ErrorKind::ParseError, "letter " + lhs + " listed twice");
        seen.push_back(b);
        moves.emplace_back(key, img);
    }
    if (!sig) throw Error(ErrorKind::ParseError, "missing signature header");
    return Endomorphism::from_map(*sig, moves);
}

}  // namespace zieschang
