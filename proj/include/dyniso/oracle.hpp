#ifndef DYNISO_ORACLE_HPP
#define DYNISO_ORACLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dyniso/graph.hpp"

namespace dyniso::oracle {

// Per-vertex anticlockwise neighbor order; index = embedding number.
struct RotationSystem {
    std::vector<std::vector<VertexId>> rot;

    int degree(VertexId v) const { return static_cast<int>(rot[static_cast<std::size_t>(v)].size()); }
    int number_of(VertexId v, VertexId x) const;
    VertexId at(VertexId v, int n) const {
        return rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(n)];
    }
    RotationSystem flipped() const;
};

// Guard separating brute-force reference code from the incremental update
// paths. While a section is open every oracle entry throws and is counted.
namespace guard {
bool active();
long long violation_count();
void reset_violations();

struct IncrementalSection {
    IncrementalSection();
    ~IncrementalSection();
    IncrementalSection(const IncrementalSection&) = delete;
    IncrementalSection& operator=(const IncrementalSection&) = delete;
};
}  // namespace guard

struct ScratchBfs {
    std::vector<int> dist;         // -1 unreachable
    std::vector<VertexId> parent;  // kNoVertex for root / unreachable
};

// Queue BFS from v; neighbors scanned ascending, so the parent of a vertex is
// its smallest-rank neighbor on the previous level.
ScratchBfs scratch_bfs(const Adjacency& g, VertexId v);

struct ScratchCbfs {
    std::vector<VertexId> parent;     // parent[v] = v_e by convention
    std::vector<int> level;           // -1 not visited
    std::vector<VertexId> visit_order;
};

// Canonical BFS from root v with starting edge (v, v_e): each dequeued vertex
// sweeps its rotation starting just after its parent and claims unvisited
// neighbors. flipped sweeps the rotation in the opposite direction.
ScratchCbfs scratch_cbfs(const Adjacency& g, const RotationSystem& rot, VertexId v, VertexId v_e,
                         bool flipped = false);

// Traces face cycles with the next-edge-in-rotation rule. Returns the face
// count when every directed edge lies on exactly one cycle and V - E + F = 2
// over active vertices, otherwise nullopt.
std::optional<int> check_embedding(const Adjacency& g, const RotationSystem& rot);

// Face cycles of a valid rotation system, each anticlockwise, in the trace
// order used by check_embedding.
std::vector<std::vector<VertexId>> trace_faces(const Adjacency& g, const RotationSystem& rot);

// All pairs {u,v} whose removal disconnects the active graph.
std::vector<std::pair<VertexId, VertexId>> separating_pairs(const Adjacency& g);

bool is_connected(const Adjacency& g);

// Planar rotation system for a connected 2-connected graph, or nullopt when
// the graph is not planar (Demoucron-style face/bridge insertion).
std::optional<RotationSystem> planar_rotation(const Adjacency& g);

// Backtracking isomorphism over active vertices. Returns a mapping g-id ->
// h-id (kNoVertex for inactive vertices) or nullopt.
std::optional<std::vector<VertexId>> brute_iso(const Adjacency& g, const Adjacency& h);

}  // namespace dyniso::oracle

#endif
