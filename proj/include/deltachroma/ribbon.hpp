#pragma once

// Ribbon (embedded) graphs as signed rotation systems: each vertex carries a
// cyclic order of half-edge ids, each edge pairs two half-edges and may be
// twisted. Faces are never stored; boundary walks are traced on demand.

#include <vector>

#include "deltachroma/graphs.hpp"
#include "deltachroma/setsystem.hpp"

namespace deltachroma {

struct RibbonEdge {
  int h1;
  int h2;
  bool twisted = false;
};

class RibbonGraph {
 public:
  // Half-edge ids must be exactly 0..2m-1, each appearing once across the
  // vertex rotations and once across the edge records. The underlying graph
  // must be connected.
  RibbonGraph(std::vector<std::vector<int>> vertex_rotations, std::vector<RibbonEdge> edges);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const std::vector<RibbonEdge>& edges() const { return edges_; }
  int vertex_of(int half_edge) const { return vertex_of_[static_cast<size_t>(half_edge)]; }
  int edge_of(int half_edge) const { return edge_of_[static_cast<size_t>(half_edge)]; }
  bool is_loop(int edge) const;

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<RibbonEdge> edges_;
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
};

// Number of boundary components of the spanning ribbon subgraph on the edge
// subset s (all vertices retained).
int boundary_components(const RibbonGraph& g, Mask s);

// Ground set = edges; feasible = subsets whose spanning ribbon subgraph has
// a single boundary component (quasi-trees).
DeltaMatroid delta_matroid_of_ribbon_graph(const RibbonGraph& g);

// True iff vertex orientations can be chosen making every edge untwisted.
bool is_orientable(const RibbonGraph& g);

// Chords of a one-vertex untwisted diagram become vertices; two chords are
// adjacent iff their endpoints interleave. All framings are zero.
FramedGraph intersection_graph(const RibbonGraph& chord_diagram);

// Attachment pattern for the two-vertex family: each rotation lists edge ids
// in cyclic order. Non-loop ids (0..k-1) appear once in each rotation; each
// loop id (k..n-1) appears twice in exactly one rotation.
struct TwoVertexLayout {
  std::vector<int> rotation_a;
  std::vector<int> rotation_b;
};

// Connected orientable ribbon graph with two vertices, k parallel non-loop
// edges and n-k loops, attached per layout. Requires 2 <= k <= n.
RibbonGraph two_vertex_family(int n, int k, const TwoVertexLayout& layout);

// All layouts up to rotation of each cyclic order (edge 0 is pinned first in
// both rotations; duplicate loop symbols are not distinguished).
std::vector<TwoVertexLayout> all_two_vertex_layouts(int n, int k);

// All chord diagrams with the given number of chords: every perfect matching
// of 2n cyclically ordered half-edges, untwisted, on a single vertex.
std::vector<RibbonGraph> all_chord_diagrams(int chords);

// All connected ribbon graphs with the given vertex count (1 or 2) and edge
// count: every loop/connector assignment, every rotation (first half-edge of
// each vertex pinned to factor out cyclic symmetry), every twist pattern.
// Isomorphic graphs may repeat; intended for universally quantified sweeps.
std::vector<RibbonGraph> all_ribbon_graphs(int vertices, int edges);

}  // namespace deltachroma
