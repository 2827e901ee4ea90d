#include "deltachroma/graphs.hpp"

namespace deltachroma {

FramedGraph::FramedGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0), framing_(0) {
  if (n < 0 || n > kGroundSetCap) throw CapError("vertex count outside [0, 16]");
}

FramedGraph::FramedGraph(int n, const std::vector<std::pair<int, int>>& edges, Mask framing)
    : FramedGraph(n) {
  for (auto [a, b] : edges) set_edge(a, b, true);
  if (framing & ~((n == 0 ? 0 : (Mask{1} << n) - 1))) throw Error("framing outside vertex set");
  framing_ = framing;
}

void FramedGraph::set_edge(int a, int b, bool present) {
  if (a == b) throw Error("self-loops are not allowed");
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw Error("vertex out of range");
  if (present) {
    adj_[static_cast<size_t>(a)] |= Mask{1} << b;
    adj_[static_cast<size_t>(b)] |= Mask{1} << a;
  } else {
    adj_[static_cast<size_t>(a)] &= ~(Mask{1} << b);
    adj_[static_cast<size_t>(b)] &= ~(Mask{1} << a);
  }
}

void FramedGraph::toggle_edge(int a, int b) { set_edge(a, b, !has_edge(a, b)); }

void FramedGraph::set_framing(int v, bool f) {
  if (v < 0 || v >= n_) throw Error("vertex out of range");
  if (f)
    framing_ |= Mask{1} << v;
  else
    framing_ &= ~(Mask{1} << v);
}

int FramedGraph::edge_count() const {
  int total = 0;
  for (Mask row : adj_) total += popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> FramedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

F2SymMatrix adjacency_matrix(const FramedGraph& g) {
  F2SymMatrix a(g.size());
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j)
      if (g.has_edge(i, j)) a.set_entry(i, j, true);
    if (g.framing(i)) a.set_entry(i, i, true);
  }
  return a;
}

DeltaMatroid delta_matroid_of_framed_graph(const FramedGraph& g) {
  return delta_matroid_of_matrix(adjacency_matrix(g));
}

FramedGraph induced_subgraph(const FramedGraph& g, Mask vertices) {
  FramedGraph out(popcount(vertices));
  int ri = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (!(vertices & (Mask{1} << i))) continue;
    if (g.framing(i)) out.set_framing(ri, true);
    int rj = 0;
    for (int j = 0; j < g.size(); ++j) {
      if (!(vertices & (Mask{1} << j))) continue;
      if (j > i && g.has_edge(i, j)) out.set_edge(ri, rj, true);
      ++rj;
    }
    ++ri;
  }
  return out;
}

FramedGraph edge_switch(const FramedGraph& g, int a, int b) {
  if (a == b) throw Error("edge switch needs distinct vertices");
  FramedGraph out = g;
  out.toggle_edge(a, b);
  return out;
}

FramedGraph slide_move(const FramedGraph& g, int a, int b) {
  if (a == b) throw Error("slide move needs distinct vertices");
  if (a < 0 || b < 0 || a >= g.size() || b >= g.size()) throw Error("vertex out of range");
  FramedGraph out = g;
  Mask toggles = g.neighbors(b) & ~(Mask{1} << a);
  for (int v = 0; v < g.size(); ++v)
    if (toggles & (Mask{1} << v)) out.toggle_edge(a, v);
  if (g.framing(b)) {
    out.set_framing(a, !g.framing(a));
    out.toggle_edge(a, b);
  }
  return out;
}

CPoly stanley_direct(const FramedGraph& g, int num_colors) {
  if (!g.is_simple()) throw Error("Stanley's first definition applies to simple graphs only");
  const int n = g.size();
  CPoly out(num_colors);
  std::vector<int> color(static_cast<size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (int a = 0; a < n && proper; ++a) {
      Mask nb = g.neighbors(a) >> (a + 1);
      for (int b = a + 1; nb; ++b, nb >>= 1)
        if ((nb & 1) && color[static_cast<size_t>(a)] == color[static_cast<size_t>(b)]) {
          proper = false;
          break;
        }
    }
    if (proper) {
      std::vector<int> exps(static_cast<size_t>(num_colors), 0);
      for (int v = 0; v < n; ++v) ++exps[static_cast<size_t>(color[static_cast<size_t>(v)])];
      out.add_term(exps, XPoly(1));
    }
    int i = 0;
    while (i < n && ++color[static_cast<size_t>(i)] == num_colors) color[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

std::int64_t chromatic_brute(const FramedGraph& g, int t) {
  if (!g.is_simple()) throw Error("chromatic polynomial counts colorings of simple graphs only");
  if (t < 0) throw Error("color count must be non-negative");
  const int n = g.size();
  if (n == 0) return 1;
  if (t == 0) return 0;
  std::int64_t count = 0;
  std::vector<int> color(static_cast<size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (int a = 0; a < n && proper; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.has_edge(a, b) && color[static_cast<size_t>(a)] == color[static_cast<size_t>(b)]) {
          proper = false;
          break;
        }
    if (proper) ++count;
    int i = 0;
    while (i < n && ++color[static_cast<size_t>(i)] == t) color[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace deltachroma
