#pragma once

// Simple and framed graphs: adjacency kept as bitmask rows, framing as a
// vertex mask. Includes the two graph-level moves of the 4-term relation and
// the brute-force coloring oracles.

#include <cstdint>
#include <vector>

#include "deltachroma/binary.hpp"
#include "deltachroma/setsystem.hpp"
#include "deltachroma/xpoly.hpp"

namespace deltachroma {

class FramedGraph {
 public:
  explicit FramedGraph(int n);
  FramedGraph(int n, const std::vector<std::pair<int, int>>& edges, Mask framing = 0);

  int size() const { return n_; }
  bool has_edge(int a, int b) const { return (adj_[static_cast<size_t>(a)] >> b) & 1; }
  void set_edge(int a, int b, bool present);
  void toggle_edge(int a, int b);
  Mask neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool framing(int v) const { return (framing_ >> v) & 1; }
  void set_framing(int v, bool f);
  Mask framing_mask() const { return framing_; }
  bool is_simple() const { return framing_ == 0; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const FramedGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_ && framing_ == o.framing_;
  }
  bool operator!=(const FramedGraph& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<Mask> adj_;
  Mask framing_;
};

// Adjacency matrix with the framing on the diagonal.
F2SymMatrix adjacency_matrix(const FramedGraph& g);

// D(G) = D(A(G)).
DeltaMatroid delta_matroid_of_framed_graph(const FramedGraph& g);

FramedGraph induced_subgraph(const FramedGraph& g, Mask vertices);

// G'_{ab}: toggles the edge {a,b}.
FramedGraph edge_switch(const FramedGraph& g, int a, int b);

// G~_{ab}: toggles the adjacency of a to every neighbor of b other than a;
// when b is framed, additionally toggles the framing of a and the edge {a,b}.
FramedGraph slide_move(const FramedGraph& g, int a, int b);

// Stanley's function by direct summation over proper colorings in
// num_colors colors; simple graphs only. The oracle for the Hopf pipeline.
CPoly stanley_direct(const FramedGraph& g, int num_colors);

// Number of proper colorings in t colors; simple graphs only.
std::int64_t chromatic_brute(const FramedGraph& g, int t);

}  // namespace deltachroma
