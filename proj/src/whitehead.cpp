#include "zieschang/whitehead.hpp"

#include <numeric>
#include <sstream>

namespace zieschang {

namespace {

int vertex_id(Letter l, Signature sig) { return 2 * basis_index(l, sig) + (l.sign < 0 ? 1 : 0); }

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    // False when a and b were already connected.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b] || (rank_[a] == rank_[b] && b < a)) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

}  // namespace

std::string candidate_failure(const std::vector<Letter>& V, Signature sig) {
    if (static_cast<int>(V.size()) != sig.relator_length())
        return "length " + std::to_string(V.size()) + " != " + std::to_string(sig.relator_length());
    std::vector<int> count(2 * sig.rank(), 0);
    for (const auto& l : V) {
        if (!letter_in(l, sig)) return "letter " + format_letter(l) + " outside signature";
        if (l.is_t() && l.sign < 0) return "inverse t-letter " + format_letter(l);
        if (++count[vertex_id(l, sig)] > 1) return "letter " + format_letter(l) + " repeated";
    }
    return {};
}

ExtendedWhiteheadGraph build_graph(const std::vector<Letter>& V, Signature sig) {
    const std::string why = candidate_failure(V, sig);
    if (!why.empty()) throw Error(ErrorKind::NotACandidate, why);
    ExtendedWhiteheadGraph gr;
    gr.sig = sig;
    gr.vertices = signed_letters(sig);
    for (int j = 1; j <= sig.p; ++j) gr.edges.push_back({Letter::t(j, -1), Letter::t(j)});
    for (std::size_t k = 0; k + 1 < V.size(); ++k) gr.edges.push_back({V[k], V[k + 1].inverse()});
    if (!V.empty()) {
        gr.ghost_head = V.front().inverse();
        gr.ghost_tail = V.back();
    }
    return gr;
}

ExtendedWhiteheadGraph build_graph(const Word& V, Signature sig) { return build_graph(V.letters(), sig); }

bool is_forest(const ExtendedWhiteheadGraph& graph) {
    UnionFind uf(2 * graph.sig.rank());
    for (const auto& e : graph.edges)
        if (!uf.unite(vertex_id(e.from, graph.sig), vertex_id(e.to, graph.sig))) return false;
    return true;
}

bool is_zieschang(const std::vector<Letter>& V, Signature sig) {
    if (!candidate_failure(V, sig).empty()) return false;
    return is_forest(build_graph(V, sig));
}

bool is_zieschang(const Word& V, Signature sig) { return is_zieschang(V.letters(), sig); }

std::optional<Letter> successor(const ExtendedWhiteheadGraph& graph, Letter v) {
    for (const auto& e : graph.edges)
        if (e.from == v) return e.to;
    return std::nullopt;
}

std::string to_dot(const ExtendedWhiteheadGraph& graph) {
    std::ostringstream os;
    auto name = [](Letter l) { return "\"" + format_letter(l) + "\""; };
    os << "digraph whitehead {\n";
    for (const auto& v : graph.vertices) os << "  " << name(v) << ";\n";
    for (const auto& e : graph.edges) os << "  " << name(e.from) << " -> " << name(e.to) << ";\n";
    // Ghost edges run to and from the identity, drawn as one auxiliary point.
    if (graph.ghost_head || graph.ghost_tail) os << "  \"1\" [shape=point];\n";
    if (graph.ghost_head) os << "  \"1\" -> " << name(*graph.ghost_head) << " [style=dashed];\n";
    if (graph.ghost_tail) os << "  " << name(*graph.ghost_tail) << " -> \"1\" [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace zieschang
