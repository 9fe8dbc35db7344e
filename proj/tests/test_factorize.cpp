#include <doctest.h>

#include "zieschang/selftest.hpp"

using namespace zieschang;

namespace {

Automorphism gen(const char* name, Signature sig) { return generator(parse_gen_name(name), sig); }

bool adlh_clean(const GenWord& w) {
    for (const auto& t : w.tokens())
        if (t.name.family == Family::Alpha && t.name.index >= 3) return false;
    return true;
}

}  // namespace

TEST_CASE("coset tags") {
    CHECK(coset_tag(Automorphism::identity({1, 2})) == CosetTag::Stab);
    CHECK(coset_tag(gen("s2", {0, 2})) == CosetTag::StabTimesSpecial);
    CHECK(coset_tag(invert(gen("s2", {0, 2}))) == CosetTag::StabTimesSpecialInv);
    CHECK(coset_tag(gen("a1", {2, 0})) == CosetTag::Stab);
    CHECK(std::string(coset_tag_name(CosetTag::StabTimesSpecial)) == "STAB_TIMES_SPECIAL");
}

TEST_CASE("peel_special") {
    const Signature sig{0, 3};
    const auto s3 = gen("s3", sig);
    const auto peeled = peel_special({s3, CosetTag::StabTimesSpecial}, sig);
    CHECK(peeled.stab.fwd().is_identity());
    CHECK(peeled.prefix.empty());
    CHECK(format_gen_word(peeled.suffix) == "s3");

    const auto s2 = gen("s2", sig);
    const auto kept = peel_special({s2, CosetTag::Stab}, sig);
    CHECK(kept.stab == s2);
    CHECK(kept.prefix.empty());
    CHECK(kept.suffix.empty());

    const Signature closed{2, 0};
    const auto l = gen("b1", closed);
    REQUIRE(apply(l, parse_word("x1'")) == parse_word("x1'"));
    const auto p0 = peel_special({l, CosetTag::StabTimesSpecial}, closed);
    CHECK(apply(p0.stab, parse_word("x1' y1' x1")) == parse_word("x1' y1' x1"));
    CHECK(compose({eval_gen_word(p0.prefix, closed), p0.stab, eval_gen_word(p0.suffix, closed)}) == l);
}

TEST_CASE("base loops recompose") {
    Rng rng = criterion_rng(7, 100);
    for (const Signature sig : reduction_grid()) {
        CanonicalCache cache(sig);
        for (int i = 0; i < 8; ++i) {
            const auto a = eval_gen_word(random_gen_word(sig, GenVariant::ADL, 8, rng), sig);
            const auto r = nielsen_reduce(relator(sig), a);
            for (const auto& e : r.edges) {
                Automorphism acc = Automorphism::identity(sig);
                for (const auto& loop : nielsen_to_base_loops(e, cache)) {
                    CHECK(coset_tag(loop.aut) == loop.tag);
                    CHECK(apply(loop.aut, relator(sig)) == relator(sig));
                    acc = compose(acc, loop.aut);
                }
                CHECK(compose({cache.phi(e.source()), acc, invert(cache.phi(e.target()))}) == e.aut());
            }
        }
    }
}

TEST_CASE("factorize examples") {
    CHECK(factorize_adl(Automorphism::identity({2, 1})).empty());
    CHECK(factorize_adlh(Automorphism::identity({3, 0})).empty());
    const auto s2 = gen("s2", {0, 2});
    CHECK(eval_gen_word(factorize_adl(s2), {0, 2}) == s2);
    const auto a3 = gen("a3", {3, 0});
    const GenWord h = factorize_adlh(a3);
    CHECK(adlh_clean(h));
    CHECK(eval_gen_word(h, {3, 0}) == a3);
    const auto b3 = gen("b3", {3, 0});
    const GenWord hb = factorize_adlh(b3);
    CHECK(adlh_clean(hb));
    CHECK(eval_gen_word(hb, {3, 0}) == b3);
}

TEST_CASE("trivial groups") {
    for (const Signature sig : {Signature{0, 0}, Signature{0, 1}}) {
        CHECK(factorize_adl(Automorphism::identity(sig)).empty());
    }
}

TEST_CASE("factorize round trip with stripped witnesses") {
    Rng rng = criterion_rng(9, 100);
    for (const Signature sig : reduction_grid()) {
        for (int i = 0; i < 12; ++i) {
            const auto a = eval_gen_word(random_gen_word(sig, GenVariant::ADL, 12, rng), sig);
            const auto certified = certify_automorphism(a.fwd());
            REQUIRE(certified);
            const GenWord adl = factorize_adl(*certified);
            CHECK(eval_gen_word(adl, sig) == a);
            if (sig.p == 0 && sig.g >= 3) {
                const GenWord adlh = factorize_adlh(*certified);
                CHECK(adlh_clean(adlh));
                CHECK(eval_gen_word(adlh, sig) == a);
            }
        }
    }
}

TEST_CASE("signature (2,2) beyond the acceptance grid") {
    Rng rng = criterion_rng(10, 100);
    const Signature sig{2, 2};
    for (int i = 0; i < 10; ++i) {
        const auto a = eval_gen_word(random_gen_word(sig, GenVariant::ADL, 10, rng), sig);
        CHECK(eval_gen_word(factorize_adl(a), sig) == a);
    }
}
