#include <doctest.h>

#include <algorithm>

#include "zieschang/selftest.hpp"

using namespace zieschang;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

bool has_edge(const ExtendedWhiteheadGraph& g, const char* from, const char* to) {
    const Letter a = parse_letter(from), b = parse_letter(to);
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.from == a && e.to == b; });
}

}  // namespace

TEST_CASE("graph of the relator is a line") {
    const Signature sig{1, 2};
    const auto g = build_graph(relator(sig), sig);
    CHECK(is_forest(g));
    CHECK(g.edges.size() == static_cast<std::size_t>(4 * sig.g + 2 * sig.p - 1));
    CHECK(has_edge(g, "t2'", "t2"));
    CHECK(has_edge(g, "t2", "t1'"));
}

TEST_CASE("cycle detection") {
    const Signature sig{1, 1};
    const auto V = parse_letters("x1 y1 t1 y1' x1'");
    const auto g = build_graph(V, sig);
    CHECK(has_edge(g, "x1", "y1'"));
    CHECK_FALSE(is_forest(g));
    CHECK_FALSE(is_zieschang(V, sig));
}

TEST_CASE("t-only path") {
    const Signature sig{0, 2};
    const auto g = build_graph(parse_letters("t1 t2"), sig);
    CHECK(is_forest(g));
    CHECK(has_edge(g, "t1'", "t1"));
    CHECK(has_edge(g, "t1", "t2'"));
    CHECK(has_edge(g, "t2'", "t2"));
}

TEST_CASE("is_zieschang") {
    for (const Signature sig : signatures_up_to(6)) CHECK(is_zieschang(relator(sig), sig));
    CHECK(is_zieschang(parse_letters("x1 y1 x1' y1'"), {1, 0}));
    CHECK(candidate_failure(parse_letters("x1 y1"), {1, 0}) != "");
    CHECK(candidate_failure(parse_letters("t1' x1 y1 x1' y1'"), {1, 1}) != "");
    CHECK_FALSE(is_zieschang(parse_letters("x1 x1' y1 y1'"), {1, 0}));
}

TEST_CASE("DOT export") {
    const std::string closed = to_dot(build_graph(relator({1, 0}), {1, 0}));
    CHECK(count(closed, "style=dashed") == 2);
    CHECK(count(closed, " -> ") == 5);
    const std::string empty = to_dot(build_graph(Word(), {0, 0}));
    CHECK(count(empty, " -> ") == 0);
    CHECK(count(empty, "[") == 0);
    const std::string t_only = to_dot(build_graph(relator({0, 2}), {0, 2}));
    CHECK(count(t_only, " -> ") - count(t_only, "style=dashed") == 3);
}

TEST_CASE("union-find agrees with DFS") {
    Rng rng = criterion_rng(1, 100);
    for (const Signature sig : signatures_up_to(5)) {
        for (int i = 0; i < 300; ++i) {
            const auto V = random_candidate(sig, rng);
            CHECK(is_forest(build_graph(V, sig)) == dfs_forest_oracle(V, sig));
        }
    }
}

TEST_CASE("Zieschang words are reduced and their graphs are trees") {
    Rng rng = criterion_rng(2, 100);
    for (const Signature sig : reduction_grid()) {
        for (int i = 0; i < 50; ++i) {
            const auto V = random_candidate(sig, rng);
            if (!is_zieschang(V, sig)) continue;
            CHECK(is_reduced(V));
            CHECK(build_graph(V, sig).edges.size() == static_cast<std::size_t>(4 * sig.g + 2 * sig.p - 1));
        }
    }
}

TEST_CASE("stabilizer images of short length stay Zieschang") {
    Rng rng = criterion_rng(3, 100);
    for (const Signature sig : {Signature{1, 1}, Signature{2, 0}, Signature{1, 2}}) {
        int hits = 0;
        for (int i = 0; i < 400; ++i) {
            const Word V = random_zieschang(sig, rng);
            const auto phi = eval_gen_word(random_gen_word(sig, GenVariant::ADL, 2, rng), sig);
            const Word image = apply(phi, V);
            if (image.size() > static_cast<std::size_t>(sig.relator_length())) continue;
            ++hits;
            CHECK(is_zieschang(image, sig));
        }
        CHECK(hits > 0);
    }
}
