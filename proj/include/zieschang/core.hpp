// Alphabet, reduced words, cyclic words, the surface relator and Fox calculus
// for the free group on t_1..t_p, x_1..x_g, y_1..y_g.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zieschang {

enum class ErrorKind {
    ParseError,
    IndexOutOfRange,
    SignatureMismatch,
    WitnessInvalid,
    NotACandidate,
    NotZieschang,
    TargetTooLong,
    ReductionStuck,
    HypothesisViolated,
    CosetViolation,
    NotInA,
    NotInStabilizer,
    ImageEscapes,
    RecompositionMismatch,
    InvariantViolation,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Signature {
    int g = 0;
    int p = 0;

    int rank() const { return 2 * g + p; }
    int relator_length() const { return 4 * g + p; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string format_signature(Signature sig);

enum class Kind : std::uint8_t { T = 0, X = 1, Y = 2 };

struct Letter {
    Kind kind = Kind::T;
    int index = 1;
    int sign = 1;

    static Letter t(int j, int s = 1) { return {Kind::T, j, s}; }
    static Letter x(int i, int s = 1) { return {Kind::X, i, s}; }
    static Letter y(int i, int s = 1) { return {Kind::Y, i, s}; }

    Letter inverse() const { return {kind, index, -sign}; }
    Letter positive() const { return {kind, index, 1}; }
    bool is_t() const { return kind == Kind::T; }
    // "x-letter" covers both x_i and y_i and their inverses.
    bool is_x_letter() const { return kind != Kind::T; }
    bool positive_sign() const { return sign > 0; }

    // Position in the fixed total order
    // t1 < t1' < t2 < ... < x1 < x1' < y1 < y1' < x2 < ...
    std::int64_t rank() const;

    bool operator==(const Letter& o) const {
        return kind == o.kind && index == o.index && sign == o.sign;
    }
    std::strong_ordering operator<=>(const Letter& o) const { return rank() <=> o.rank(); }
};

bool letter_in(Letter l, Signature sig);

// Index of the basis letter underlying l: t_j -> j-1, x_i -> p+2(i-1), y_i -> p+2(i-1)+1.
int basis_index(Letter l, Signature sig);
Letter basis_letter(int idx, Signature sig);
std::vector<Letter> basis_letters(Signature sig);
// All 4g+2p signed letters in the fixed order.
std::vector<Letter> signed_letters(Signature sig);

// A freely reduced word. Construction always reduces.
class Word {
public:
    Word() = default;
    explicit Word(const std::vector<Letter>& seq);
    static Word of(Letter l);
    static Word from_reduced(std::vector<Letter> seq);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const Letter& front() const { return letters_.front(); }
    const Letter& back() const { return letters_.back(); }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word inverse() const;
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t start) const;
    Word slice(std::size_t start, std::size_t len) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    // Length-lexicographic order on the fixed letter order.
    bool operator<(const Word& o) const;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

Word free_reduce(const std::vector<Letter>& seq);
bool is_reduced(const std::vector<Letter>& seq);

Word multiply(const Word& u, const Word& v);
Word multiply(std::initializer_list<Word> ws);
Word invert(const Word& u);
// u^v = v' u v
Word conjugate(const Word& u, const Word& v);
// [u,v] = u' v' u v
Word commutator(const Word& u, const Word& v);
Word power(const Word& u, int n);
Word common_prefix(const Word& u, const Word& v);

// Canonical representative of a conjugacy class: cyclically reduced and
// rotated to the least rotation under the fixed letter order.
class CyclicWord {
public:
    CyclicWord() = default;
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool operator==(const CyclicWord& o) const { return letters_ == o.letters_; }
    bool operator<(const CyclicWord& o) const;

private:
    friend CyclicWord cyclic_class(const Word& u);
    std::vector<Letter> letters_;
};

CyclicWord cyclic_class(const Word& u);
Word cyclic_core(const Word& u);

// t_p ... t_1 [x_1,y_1] ... [x_g,y_g]
Word relator(Signature sig);

// Element of the integral group ring: finite map word -> nonzero coefficient.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of(const Word& w, long long c = 1);

    const std::map<Word, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Word& w) const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator-(const GroupRingElement& o) const { return *this + (-o); }
    GroupRingElement right_multiply(const Word& w) const;

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Word& w, long long c);
    std::map<Word, long long> terms_;
};

std::string format_group_ring(const GroupRingElement& e);

// Right Fox derivative: (uv)^d = u^d v + v^d, basis rule v^d_w = delta(v,w).
GroupRingElement fox_derivative(const Word& u, Letter w);

// Text syntax: t3, x2, y1, trailing ' for inverse; words are whitespace
// separated tokens, "1" is the empty word.
Letter parse_letter(std::string_view token);
std::string format_letter(Letter l);
Word parse_word(std::string_view text);
Word parse_word(std::string_view text, Signature sig);
std::vector<Letter> parse_letters(std::string_view text);
std::string format_word(const Word& w);
std::string format_letters(const std::vector<Letter>& seq);
void check_word_in(const Word& w, Signature sig);

}  // namespace zieschang
