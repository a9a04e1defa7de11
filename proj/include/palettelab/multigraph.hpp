#pragma once

#include <utility>
#include <vector>

namespace palettelab {

using VertexId = int;
using EdgeId = int;

// One line of a construction request: an unordered pair plus how many
// parallel copies to create. Copies receive consecutive edge ids.
struct EdgeSpec {
    VertexId u = 0;
    VertexId v = 0;
    int multiplicity = 1;
};

// Loopless multigraph over vertices 0..n-1. Edges are immutable once built
// and addressed by dense ids in construction order.
class Multigraph {
public:
    Multigraph() = default;

    // Validates every spec (endpoints in range, no loops, multiplicity >= 1)
    // and expands multiplicities into individual edges.
    static Multigraph build(int vertex_count, const std::vector<EdgeSpec>& specs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    const std::vector<EdgeId>& incident_edges(VertexId v) const;

    int degree(VertexId v) const;
    int max_degree() const;

    // Number of parallel edges joining u and v (0 when not adjacent).
    int multiplicity(VertexId u, VertexId v) const;
    int max_multiplicity() const;

    // Underlying simple graph: same vertex set, exactly one edge per
    // adjacent pair, emitted in ascending (min,max) order.
    Multigraph simple_projection() const;

    // Edge list normalized to sorted (min,max) pairs; equal multisets mean
    // the two graphs are the same labelled multigraph up to edge ids.
    std::vector<std::pair<VertexId, VertexId>> sorted_pair_list() const;

    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

// Disjoint union keeps track of where each vertex and edge came from so
// per-component reasoning stays possible after the merge.
struct UnionLayout {
    Multigraph graph;
    std::vector<int> component_of_vertex;
    std::vector<int> vertex_offset;  // component index -> first vertex id
    std::vector<int> edge_offset;    // component index -> first edge id
};

UnionLayout disjoint_union(const std::vector<Multigraph>& parts);

}  // namespace palettelab
