#ifndef DYNISO_GRAPH_HPP
#define DYNISO_GRAPH_HPP

#include <utility>
#include <vector>

#include "dyniso/order_arith.hpp"

namespace dyniso {

// Symmetric simple-graph view over universe ids. Neighbor lists are kept
// sorted by rank so every iteration order is deterministic.
class Adjacency {
public:
    void ensure_size(int n);
    int size() const { return static_cast<int>(nbr_.size()); }

    bool has_edge(VertexId a, VertexId b) const;
    void add_edge(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);

    int degree(VertexId v) const { return static_cast<int>(nbr_[static_cast<std::size_t>(v)].size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return nbr_[static_cast<std::size_t>(v)]; }

    int edge_count() const { return m_; }
    int active_vertex_count() const;

    // All (v, v_e) with an edge between them, sorted.
    std::vector<std::pair<VertexId, VertexId>> directed_edges() const;
    std::vector<std::pair<VertexId, VertexId>> undirected_edges() const;

    bool operator==(const Adjacency& o) const { return nbr_ == o.nbr_; }

private:
    std::vector<std::vector<VertexId>> nbr_;
    int m_ = 0;
};

}  // namespace dyniso

#endif
