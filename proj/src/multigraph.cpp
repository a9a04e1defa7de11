#include "palettelab/multigraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace palettelab {

Multigraph Multigraph::build(int vertex_count, const std::vector<EdgeSpec>& specs) {
    if (vertex_count < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    Multigraph g;
    g.n_ = vertex_count;
    g.adj_.assign(static_cast<size_t>(vertex_count), {});
    for (size_t i = 0; i < specs.size(); ++i) {
        const EdgeSpec& s = specs[i];
        std::ostringstream where;
        where << "edge spec " << i << " (" << s.u << "," << s.v << ")";
        if (s.u < 0 || s.u >= vertex_count || s.v < 0 || s.v >= vertex_count) {
            throw std::invalid_argument(where.str() + ": endpoint out of range");
        }
        if (s.u == s.v) {
            throw std::invalid_argument(where.str() + ": loops are not allowed");
        }
        if (s.multiplicity < 1) {
            throw std::invalid_argument(where.str() + ": multiplicity must be at least 1");
        }
        for (int c = 0; c < s.multiplicity; ++c) {
            EdgeId id = static_cast<EdgeId>(g.edges_.size());
            g.edges_.emplace_back(s.u, s.v);
            g.adj_[static_cast<size_t>(s.u)].push_back(id);
            g.adj_[static_cast<size_t>(s.v)].push_back(id);
        }
    }
    return g;
}

std::pair<VertexId, VertexId> Multigraph::endpoints(EdgeId e) const {
    if (e < 0 || e >= edge_count()) {
        throw std::invalid_argument("edge id out of range");
    }
    return edges_[static_cast<size_t>(e)];
}

const std::vector<EdgeId>& Multigraph::incident_edges(VertexId v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex id out of range");
    }
    return adj_[static_cast<size_t>(v)];
}

int Multigraph::degree(VertexId v) const {
    return static_cast<int>(incident_edges(v).size());
}

int Multigraph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw std::invalid_argument("vertex id out of range");
    }
    int count = 0;
    for (EdgeId e : adj_[static_cast<size_t>(u)]) {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        if ((a == u && b == v) || (a == v && b == u)) ++count;
    }
    return count;
}

int Multigraph::max_multiplicity() const {
    std::map<std::pair<VertexId, VertexId>, int> counts;
    int best = edges_.empty() ? 0 : 1;
    for (const auto& [u, v] : edges_) {
        auto key = std::minmax(u, v);
        best = std::max(best, ++counts[{key.first, key.second}]);
    }
    return best;
}

Multigraph Multigraph::simple_projection() const {
    std::vector<std::pair<VertexId, VertexId>> pairs = sorted_pair_list();
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<EdgeSpec> specs;
    specs.reserve(pairs.size());
    for (const auto& [u, v] : pairs) specs.push_back({u, v, 1});
    return build(n_, specs);
}

std::vector<std::pair<VertexId, VertexId>> Multigraph::sorted_pair_list() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

UnionLayout disjoint_union(const std::vector<Multigraph>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("disjoint union of an empty list");
    }
    UnionLayout out;
    int n = 0;
    int m = 0;
    std::vector<EdgeSpec> specs;
    for (size_t c = 0; c < parts.size(); ++c) {
        const Multigraph& p = parts[c];
        out.vertex_offset.push_back(n);
        out.edge_offset.push_back(m);
        for (int v = 0; v < p.vertex_count(); ++v) {
            out.component_of_vertex.push_back(static_cast<int>(c));
        }
        for (EdgeId e = 0; e < p.edge_count(); ++e) {
            auto [u, v] = p.endpoints(e);
            specs.push_back({u + n, v + n, 1});
        }
        n += p.vertex_count();
        m += p.edge_count();
    }
    out.graph = Multigraph::build(n, specs);
    return out;
}

}  // namespace palettelab
