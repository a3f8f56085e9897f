#include "dyniso/graph.hpp"

#include <algorithm>

namespace dyniso {

void Adjacency::ensure_size(int n) {
    if (n > size()) nbr_.resize(static_cast<std::size_t>(n));
}

bool Adjacency::has_edge(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= size() || b >= size()) return false;
    const auto& na = nbr_[static_cast<std::size_t>(a)];
    return std::binary_search(na.begin(), na.end(), b);
}

void Adjacency::add_edge(VertexId a, VertexId b) {
    auto& na = nbr_[static_cast<std::size_t>(a)];
    auto& nb = nbr_[static_cast<std::size_t>(b)];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++m_;
}

void Adjacency::remove_edge(VertexId a, VertexId b) {
    auto& na = nbr_[static_cast<std::size_t>(a)];
    auto& nb = nbr_[static_cast<std::size_t>(b)];
    na.erase(std::lower_bound(na.begin(), na.end(), b));
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    --m_;
}

int Adjacency::active_vertex_count() const {
    int c = 0;
    for (const auto& l : nbr_)
        if (!l.empty()) ++c;
    return c;
}

std::vector<std::pair<VertexId, VertexId>> Adjacency::directed_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(2 * m_));
    for (VertexId v = 0; v < size(); ++v)
        for (VertexId u : neighbors(v)) out.emplace_back(v, u);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Adjacency::undirected_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (VertexId v = 0; v < size(); ++v)
        for (VertexId u : neighbors(v))
            if (v < u) out.emplace_back(v, u);
    return out;
}

}  // namespace dyniso
