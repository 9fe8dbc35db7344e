#include <doctest.h>

#include <random>

#include "zieschang/gens.hpp"

using namespace zieschang;

namespace {

Word w(const char* text) { return parse_word(text); }

Automorphism gen(const char* name, Signature sig) { return generator(parse_gen_name(name), sig); }

Automorphism random_product(std::mt19937_64& rng, Signature sig, int tokens) {
    const auto names = gen_set(sig, GenVariant::ADL);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::vector<GenToken> seq;
    for (int i = 0; i < tokens; ++i) seq.push_back({names[pick(rng)], rng() % 2 ? 1 : -1});
    return eval_gen_word(GenWord(seq), sig);
}

}  // namespace

TEST_CASE("apply") {
    CHECK(apply(gen("s2", {0, 2}), w("t2")) == w("t1"));
    CHECK(apply(Endomorphism::identity({1, 1}), w("t1 x1 y1'")) == w("t1 x1 y1'"));
    CHECK(apply(gen("a1", {1, 0}), relator({1, 0})) == relator({1, 0}));
}

TEST_CASE("compose and invert") {
    const Signature sig{1, 0};
    const auto a1 = gen("a1", sig), b1 = gen("b1", sig);
    CHECK(apply(compose(b1, a1), w("x1' y1' x1")) == w("x1'"));
    CHECK(compose(a1, Automorphism::identity(sig)) == a1);
    CHECK(compose(a1.fwd(), a1.inv()).is_identity());
    CHECK(invert(Automorphism::identity(sig)) == Automorphism::identity(sig));
    CHECK(invert(invert(b1)) == b1);
    CHECK(apply(invert(gen("s2", {0, 2})), w("t1")) == w("t2"));
}

TEST_CASE("witness is checked") {
    const Signature sig{1, 0};
    const auto a1 = gen("a1", sig);
    CHECK_THROWS_AS(Automorphism(a1.fwd(), a1.fwd()), Error);
}

TEST_CASE("classify_letters") {
    const Signature sig{1, 0};
    const auto id = classify_letters(Endomorphism::identity(sig));
    REQUIRE(id);
    CHECK(id->t.is_identity());
    const auto swap = Endomorphism::from_map(sig, {{Letter::x(1), w("y1")}, {Letter::y(1), w("x1")}});
    const auto s = classify_letters(swap);
    REQUIRE(s);
    CHECK(s->x_images == std::vector<Letter>{Letter::y(1), Letter::x(1)});
    CHECK_FALSE(classify_letters(gen("a1", sig).fwd()));
}

TEST_CASE("membership") {
    const Signature sig{1, 0};
    const auto m = membership(gen("a1", sig).fwd());
    CHECK(m.fixes_relator);
    CHECK(m.permutes_t_classes.has_value());
    CHECK(m.in_A);
    const auto bad = membership(Endomorphism::from_map(sig, {{Letter::x(1), w("x1 y1")}}));
    CHECK_FALSE(bad.fixes_relator);
    CHECK_FALSE(bad.in_A);
    CHECK(membership(Endomorphism::identity(sig)).in_A);

    const auto s2 = membership(gen("s2", {0, 3}).fwd());
    REQUIRE(s2.permutes_t_classes);
    CHECK(s2.permutes_t_classes->image == std::vector<int>{2, 1, 3});
}

TEST_CASE("outer_equal") {
    const Signature sig{1, 0};
    const auto a1 = gen("a1", sig);
    CHECK(outer_equal(a1, a1) == Word());
    const auto twin = compose(a1, inner(sig, w("x1")));
    const auto c = outer_equal(twin, a1);
    REQUIRE(c);
    for (const Letter b : basis_letters(sig))
        CHECK(apply(twin, Word::of(b)) == conjugate(apply(a1, Word::of(b)), *c));
    CHECK_FALSE(outer_equal(Automorphism::identity(sig), gen("b1", sig)));
}

TEST_CASE("outer_equal is an equivalence on random instances") {
    std::mt19937_64 rng(5);
    const Signature sig{1, 1};
    for (int i = 0; i < 30; ++i) {
        const auto a = random_product(rng, sig, 6);
        const Word u(std::vector<Letter>{Letter::x(1), Letter::t(1, -1)});
        const Word v(std::vector<Letter>{Letter::y(1, -1)});
        const auto b = compose(a, inner(sig, u));
        const auto c = compose(b, inner(sig, v));
        const auto ab = outer_equal(b, a);
        const auto ba = outer_equal(a, b);
        const auto ac = outer_equal(c, a);
        REQUIRE(ab);
        REQUIRE(ba);
        REQUIRE(ac);
        for (const Letter l : basis_letters(sig)) {
            CHECK(apply(a, Word::of(l)) == conjugate(apply(b, Word::of(l)), *ba));
            CHECK(apply(c, Word::of(l)) == conjugate(apply(a, Word::of(l)), *ac));
        }
    }
}

TEST_CASE("restrictions") {
    CHECK(restrict_drop_tp(gen("s2", {0, 3})) == gen("s2", {0, 2}));
    CHECK(restrict_drop_tp(Automorphism::identity({1, 2})) == Automorphism::identity({1, 1}));
    CHECK(restrict_drop_tp(gen("g1", {1, 2})) == gen("g1", {1, 1}));
    CHECK(restrict_relabel_K(gen("a1", {2, 0})) == Automorphism::identity({1, 1}));
    CHECK(restrict_relabel_K(gen("b2", {2, 0})) == gen("b1", {1, 1}));
    CHECK(restrict_relabel_K(Automorphism::identity({2, 0})) == Automorphism::identity({1, 1}));
}

TEST_CASE("composition laws and closure") {
    std::mt19937_64 rng(3);
    for (const Signature sig : {Signature{1, 1}, Signature{2, 0}, Signature{0, 3}}) {
        for (int i = 0; i < 20; ++i) {
            const auto a = random_product(rng, sig, 5), b = random_product(rng, sig, 5),
                       c = random_product(rng, sig, 5);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
            CHECK(compose(Automorphism::identity(sig), a) == a);
            CHECK(membership(compose(a, b).fwd()).in_A);
            for (const Letter l : basis_letters(sig)) CHECK(apply(a.fwd(), apply(a.inv(), Word::of(l))) == Word::of(l));
        }
    }
}

TEST_CASE("restrict_drop_tp inverts generator inclusion") {
    std::mt19937_64 rng(9);
    const Signature big{1, 2}, small{1, 1};
    const auto names = gen_set(small, GenVariant::ADL);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    for (int i = 0; i < 20; ++i) {
        std::vector<GenToken> seq;
        for (int k = 0; k < 6; ++k) seq.push_back({names[pick(rng)], rng() % 2 ? 1 : -1});
        const GenWord gw(seq);
        CHECK(restrict_drop_tp(eval_gen_word(gw, big)) == eval_gen_word(gw, small));
    }
}

TEST_CASE("text format") {
    const Signature sig{1, 1};
    const auto f = gen("g1", sig).fwd();
    const std::string text = format_endomorphism(f);
    CHECK(text.rfind("sig g=1 p=1\n", 0) == 0);
    CHECK(parse_endomorphism(text) == f);
    const auto parsed = parse_endomorphism("sig g=1 p=0\nx1 -> y1' x1\n");
    CHECK(parsed == gen("a1", {1, 0}).fwd());
    CHECK(format_endomorphism(Endomorphism::identity(sig)) == "sig g=1 p=1\n");
    CHECK_THROWS_AS(parse_endomorphism("sig g=1 p=0\nx2 -> x1\n"), Error);
    CHECK_THROWS_AS(parse_endomorphism("x1 -> x1\n"), Error);
}
