// Extended Whitehead graphs of candidate Zieschang elements.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zieschang/core.hpp"

namespace zieschang {

struct GraphEdge {
    Letter from;
    Letter to;
};

struct ExtendedWhiteheadGraph {
    Signature sig;
    std::vector<Letter> vertices;  // all signed letters, fixed order
    std::vector<GraphEdge> edges;  // t_j' ~> t_j first, then the chain edges in k order
    // Ghost edge endpoints: (1 ~> v_1') and (v_n ~> 1); absent when V is empty.
    std::optional<Letter> ghost_head;  // v_1', the target of the leading ghost edge
    std::optional<Letter> ghost_tail;  // v_n, the source of the trailing ghost edge
};

// Throws NotACandidate when V fails the length or letter-multiset conditions.
ExtendedWhiteheadGraph build_graph(const std::vector<Letter>& V, Signature sig);
ExtendedWhiteheadGraph build_graph(const Word& V, Signature sig);

// Empty string when V is a candidate, otherwise the failed condition.
std::string candidate_failure(const std::vector<Letter>& V, Signature sig);

bool is_forest(const ExtendedWhiteheadGraph& graph);
bool is_zieschang(const std::vector<Letter>& V, Signature sig);
bool is_zieschang(const Word& V, Signature sig);

// Successor of each vertex along the graph (the unique outgoing edge).
std::optional<Letter> successor(const ExtendedWhiteheadGraph& graph, Letter v);

std::string to_dot(const ExtendedWhiteheadGraph& graph);

}  // namespace zieschang
