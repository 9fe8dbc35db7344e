#include "zieschang/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zieschang {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::WitnessInvalid: return "WitnessInvalid";
        case ErrorKind::NotACandidate: return "NotACandidate";
        case ErrorKind::NotZieschang: return "NotZieschang";
        case ErrorKind::TargetTooLong: return "TargetTooLong";
        case ErrorKind::ReductionStuck: return "ReductionStuck";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::CosetViolation: return "CosetViolation";
        case ErrorKind::NotInA: return "NotInA";
        case ErrorKind::NotInStabilizer: return "NotInStabilizer";
        case ErrorKind::ImageEscapes: return "ImageEscapes";
        case ErrorKind::RecompositionMismatch: return "RecompositionMismatch";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

std::string format_signature(Signature sig) {
    return "(" + std::to_string(sig.g) + "," + std::to_string(sig.p) + ")";
}

std::int64_t Letter::rank() const {
    const std::int64_t neg = sign < 0 ? 1 : 0;
    if (kind == Kind::T) return 2 * static_cast<std::int64_t>(index - 1) + neg;
    const std::int64_t base = std::int64_t{1} << 32;
    return base + 4 * static_cast<std::int64_t>(index - 1) + (kind == Kind::Y ? 2 : 0) + neg;
}

bool letter_in(Letter l, Signature sig) {
    if (l.index < 1) return false;
    if (l.kind == Kind::T) return l.index <= sig.p;
    return l.index <= sig.g;
}

int basis_index(Letter l, Signature sig) {
    if (l.kind == Kind::T) return l.index - 1;
    return sig.p + 2 * (l.index - 1) + (l.kind == Kind::Y ? 1 : 0);
}

Letter basis_letter(int idx, Signature sig) {
    if (idx < sig.p) return Letter::t(idx + 1);
    const int r = idx - sig.p;
    return r % 2 == 0 ? Letter::x(r / 2 + 1) : Letter::y(r / 2 + 1);
}

std::vector<Letter> basis_letters(Signature sig) {
    std::vector<Letter> out;
    for (int i = 0; i < sig.rank(); ++i) out.push_back(basis_letter(i, sig));
    return out;
}

std::vector<Letter> signed_letters(Signature sig) {
    std::vector<Letter> out;
    for (int i = 0; i < sig.rank(); ++i) {
        const Letter l = basis_letter(i, sig);
        out.push_back(l);
        out.push_back(l.inverse());
    }
    return out;
}

Word::Word(const std::vector<Letter>& seq) : letters_(free_reduce(seq).letters_) {}

Word Word::of(Letter l) { return from_reduced({l}); }

Word Word::from_reduced(std::vector<Letter> seq) {
    Word w;
    w.letters_ = std::move(seq);
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return from_reduced(std::move(out));
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, letters_.size());
    return from_reduced(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t start) const {
    start = std::min(start, letters_.size());
    return from_reduced(std::vector<Letter>(letters_.begin() + start, letters_.end()));
}

Word Word::slice(std::size_t start, std::size_t len) const {
    start = std::min(start, letters_.size());
    len = std::min(len, letters_.size() - start);
    return from_reduced(
        std::vector<Letter>(letters_.begin() + start, letters_.begin() + start + len));
}

bool Word::operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto a = letters_[i].rank();
        const auto b = o.letters_[i].rank();
        if (a != b) return a < b;
    }
    return false;
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w) {
        h ^= static_cast<std::size_t>(l.rank() * 31 + 7);
        h *= 1099511628211ull;
    }
    return h;
}

Word free_reduce(const std::vector<Letter>& seq) {
    std::vector<Letter> st;
    st.reserve(seq.size());
    for (const auto& l : seq) {
        if (!st.empty() && st.back() == l.inverse()) {
            st.pop_back();
        } else {
            st.push_back(l);
        }
    }
    return Word::from_reduced(std::move(st));
}

bool is_reduced(const std::vector<Letter>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1].inverse()) return false;
    return true;
}

Word multiply(const Word& u, const Word& v) {
    std::size_t cancel = 0;
    const std::size_t n = u.size(), m = v.size();
    while (cancel < n && cancel < m && u[n - 1 - cancel] == v[cancel].inverse()) ++cancel;
    std::vector<Letter> out;
    out.reserve(n + m - 2 * cancel);
    out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n - cancel));
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(cancel), v.end());
    return Word::from_reduced(std::move(out));
}

Word multiply(std::initializer_list<Word> ws) {
    Word acc;
    for (const auto& w : ws) acc = multiply(acc, w);
    return acc;
}

Word invert(const Word& u) { return u.inverse(); }

Word conjugate(const Word& u, const Word& v) { return multiply({v.inverse(), u, v}); }

Word commutator(const Word& u, const Word& v) {
    return multiply({u.inverse(), v.inverse(), u, v});
}

Word power(const Word& u, int n) {
    const Word base = n < 0 ? u.inverse() : u;
    Word acc;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = multiply(acc, base);
    return acc;
}

Word common_prefix(const Word& u, const Word& v) {
    std::size_t k = 0;
    while (k < u.size() && k < v.size() && u[k] == v[k]) ++k;
    return u.prefix(k);
}

bool CyclicWord::operator<(const CyclicWord& o) const {
    return Word::from_reduced(letters_) < Word::from_reduced(o.letters_);
}

Word cyclic_core(const Word& u) {
    std::size_t lo = 0, hi = u.size();
    while (hi - lo >= 2 && u[lo] == u[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return u.slice(lo, hi - lo);
}

CyclicWord cyclic_class(const Word& u) {
    const Word core = cyclic_core(u);
    const auto& ls = core.letters();
    const std::size_t n = ls.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto a = ls[(r + i) % n].rank();
            const auto b = ls[(best + i) % n].rank();
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    CyclicWord c;
    c.letters_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.letters_.push_back(ls[(best + i) % n]);
    return c;
}

Word relator(Signature sig) {
    std::vector<Letter> seq;
    for (int j = sig.p; j >= 1; --j) seq.push_back(Letter::t(j));
    for (int i = 1; i <= sig.g; ++i) {
        seq.push_back(Letter::x(i, -1));
        seq.push_back(Letter::y(i, -1));
        seq.push_back(Letter::x(i));
        seq.push_back(Letter::y(i));
    }
    return Word(seq);
}

GroupRingElement GroupRingElement::of(const Word& w, long long c) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
}

long long GroupRingElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add_term(const Word& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupRingElement GroupRingElement::right_multiply(const Word& w) const {
    GroupRingElement r;
    for (const auto& [u, c] : terms_) r.add_term(multiply(u, w), c);
    return r;
}

std::string format_group_ring(const GroupRingElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << "(" << format_word(w) << ")";
    }
    return os.str();
}

GroupRingElement fox_derivative(const Word& u, Letter w) {
    if (w.sign < 0) throw Error(ErrorKind::ParseError, "Fox derivative needs a positive basis letter");
    // Sum over occurrences: w contributes +suffix, w' contributes -(w' suffix).
    GroupRingElement acc;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const Letter l = u[k];
        if (l.positive() != w) continue;
        if (l.sign > 0) {
            acc = acc + GroupRingElement::of(u.suffix_from(k + 1), 1);
        } else {
            acc = acc + GroupRingElement::of(u.suffix_from(k), -1);
        }
    }
    return acc;
}

Letter parse_letter(std::string_view token) {
    if (token.size() < 2) throw Error(ErrorKind::ParseError, "bad letter '" + std::string(token) + "'");
    Letter l;
    switch (token[0]) {
        case 't': l.kind = Kind::T; break;
        case 'x': l.kind = Kind::X; break;
        case 'y': l.kind = Kind::Y; break;
        default: throw Error(ErrorKind::ParseError, "bad letter '" + std::string(token) + "'");
    }
    std::size_t end = token.size();
    l.sign = 1;
    if (token.back() == '\'') {
        l.sign = -1;
        --end;
    }
    if (end <= 1 || token[1] == '0')
        throw Error(ErrorKind::ParseError, "bad letter index in '" + std::string(token) + "'");
    long long idx = 0;
    for (std::size_t i = 1; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw Error(ErrorKind::ParseError, "bad letter '" + std::string(token) + "'");
        idx = idx * 10 + (token[i] - '0');
        if (idx > 1000000) throw Error(ErrorKind::ParseError, "letter index too large");
    }
    l.index = static_cast<int>(idx);
    return l;
}

std::string format_letter(Letter l) {
    std::string s;
    s += l.kind == Kind::T ? 't' : (l.kind == Kind::X ? 'x' : 'y');
    s += std::to_string(l.index);
    if (l.sign < 0) s += '\'';
    return s;
}

std::vector<Letter> parse_letters(std::string_view text) {
    std::vector<Letter> out;
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) toks.push_back(text.substr(i, j - i));
        i = j;
    }
    if (toks.size() == 1 && toks[0] == "1") return out;
    if (toks.empty()) throw Error(ErrorKind::ParseError, "empty word text (use 1 for the identity)");
    for (auto t : toks) out.push_back(parse_letter(t));
    return out;
}

Word parse_word(std::string_view text) { return Word(parse_letters(text)); }

Word parse_word(std::string_view text, Signature sig) {
    Word w = parse_word(text);
    check_word_in(w, sig);
    return w;
}

void check_word_in(const Word& w, Signature sig) {
    for (const auto& l : w)
        if (!letter_in(l, sig))
            throw Error(ErrorKind::IndexOutOfRange,
                        "letter " + format_letter(l) + " not in signature " + format_signature(sig));
}

std::string format_letters(const std::vector<Letter>& seq) {
    if (seq.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ' ';
        s += format_letter(seq[i]);
    }
    return s;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

}  // namespace zieschang
