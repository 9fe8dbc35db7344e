#include <doctest.h>

#include <random>

#include "zieschang/core.hpp"

using namespace zieschang;

namespace {

Word w(const char* text) { return parse_word(text); }

Word random_word(std::mt19937_64& rng, Signature sig, int max_len) {
    const auto letters = signed_letters(sig);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::vector<Letter> seq;
    for (int n = len(rng); n > 0; --n) seq.push_back(letters[pick(rng)]);
    return Word(seq);
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(w("x1 x1'").empty());
    CHECK(w("t1 x1 x1' y1") == w("t1 y1"));
    CHECK(format_word(w("x1' y1' x1 y1")) == "x1' y1' x1 y1");
    CHECK(is_reduced(parse_letters("x1' y1' x1 y1")));
    CHECK_FALSE(is_reduced(parse_letters("x1 x1'")));
    CHECK(free_reduce(parse_letters("y1 x1 x1' y1'")).empty());
}

TEST_CASE("group operations") {
    CHECK(commutator(w("x1"), w("y1")) == w("x1' y1' x1 y1"));
    CHECK(conjugate(w("t1"), w("x1")) == w("x1' t1 x1"));
    CHECK(multiply(w("x1 y1"), w("y1' x1")) == w("x1 x1"));
    CHECK(invert(w("x1 y2'")) == w("y2 x1'"));
    CHECK(power(w("x1 y1"), -2) == w("y1' x1' y1' x1'"));
    CHECK(common_prefix(w("x1 y1 t1"), w("x1 y1 t2")) == w("x1 y1"));
}

TEST_CASE("cyclic classes") {
    CHECK(cyclic_class(w("x1' t1 x1")) == cyclic_class(w("t1")));
    CHECK_FALSE(cyclic_class(w("t1")) == cyclic_class(w("t2")));
    CHECK(cyclic_class(w("y1 x1")) == cyclic_class(w("x1 y1")));
    CHECK(cyclic_core(w("x1' y1 t1 x1")) == w("y1 t1"));
}

TEST_CASE("relator") {
    CHECK(relator({1, 0}) == w("x1' y1' x1 y1"));
    CHECK(relator({0, 0}).empty());
    CHECK(relator({1, 2}) == w("t2 t1 x1' y1' x1 y1"));
    for (int g = 0; g <= 3; ++g)
        for (int p = 0; p <= 3; ++p) CHECK(relator({g, p}).size() == static_cast<std::size_t>(4 * g + p));
}

TEST_CASE("letter order and basis indices") {
    const Signature sig{2, 2};
    const auto letters = signed_letters(sig);
    REQUIRE(letters.size() == 12);
    CHECK(format_letter(letters[0]) == "t1");
    CHECK(format_letter(letters[1]) == "t1'");
    CHECK(format_letter(letters[4]) == "x1");
    CHECK(format_letter(letters[7]) == "y1'");
    for (std::size_t i = 1; i < letters.size(); ++i) CHECK(letters[i - 1] < letters[i]);
    CHECK(basis_index(Letter::y(2), sig) == 5);
    CHECK(basis_letter(3, sig) == Letter::y(1));
}

TEST_CASE("parsing") {
    CHECK(parse_word("1").empty());
    CHECK(format_word(Word()) == "1");
    CHECK_THROWS_AS(parse_word("z1"), Error);
    CHECK_THROWS_AS(parse_word("x0"), Error);
    CHECK_THROWS_AS(parse_word("x"), Error);
    try {
        parse_word("x3", {2, 0});
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Word u = random_word(rng, {2, 3}, 15);
        CHECK(parse_word(format_word(u)) == u);
    }
}

TEST_CASE("Fox derivatives") {
    CHECK(fox_derivative(w("x1"), Letter::x(1)) == GroupRingElement::of(Word()));
    CHECK(fox_derivative(w("y1"), Letter::x(1)).is_zero());
    const auto d = fox_derivative(w("x1 y1"), Letter::x(1));
    CHECK(d == GroupRingElement::of(w("y1")));
    CHECK(d.coefficient(w("y1")) == 1);
}

TEST_CASE("randomized word properties") {
    std::mt19937_64 rng(11);
    const Signature sig{2, 1};
    for (int i = 0; i < 500; ++i) {
        const Word u = random_word(rng, sig, 12), v = random_word(rng, sig, 12);
        CHECK(multiply(u, invert(u)).empty());
        CHECK(multiply(u, v).size() <= u.size() + v.size());
        CHECK(conjugate(u, v).size() <= u.size() + 2 * v.size());
        CHECK(cyclic_class(u) == cyclic_class(conjugate(u, v)));
        for (const Letter b : basis_letters(sig)) {
            const auto lhs = fox_derivative(multiply(u, v), b);
            const auto rhs = fox_derivative(u, b).right_multiply(v) + fox_derivative(v, b);
            CHECK(lhs == rhs);
            CHECK((fox_derivative(invert(u), b) + fox_derivative(u, b).right_multiply(invert(u))).is_zero());
        }
    }
}
