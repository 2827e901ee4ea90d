#include "deltachroma/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace deltachroma {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> vertex_rotations,
                         std::vector<RibbonEdge> edges)
    : rotations_(std::move(vertex_rotations)), edges_(std::move(edges)) {
  const int m = edge_count();
  if (m > kGroundSetCap) throw CapError("edge count exceeds 16");
  const int h = 2 * m;
  vertex_of_.assign(static_cast<size_t>(h), -1);
  edge_of_.assign(static_cast<size_t>(h), -1);
  for (int v = 0; v < vertex_count(); ++v)
    for (int he : rotations_[static_cast<size_t>(v)]) {
      if (he < 0 || he >= h) throw Error("half-edge id out of range");
      if (vertex_of_[static_cast<size_t>(he)] != -1)
        throw Error("half-edge appears twice in vertex rotations");
      vertex_of_[static_cast<size_t>(he)] = v;
    }
  for (int e = 0; e < m; ++e) {
    for (int he : {edges_[static_cast<size_t>(e)].h1, edges_[static_cast<size_t>(e)].h2}) {
      if (he < 0 || he >= h) throw Error("half-edge id out of range");
      if (edge_of_[static_cast<size_t>(he)] != -1)
        throw Error("half-edge appears twice in edge records");
      edge_of_[static_cast<size_t>(he)] = e;
    }
  }
  for (int i = 0; i < h; ++i)
    if (vertex_of_[static_cast<size_t>(i)] == -1 || edge_of_[static_cast<size_t>(i)] == -1)
      throw Error("half-edge missing from rotations or edge records");
  // Underlying graph must be connected.
  if (vertex_count() == 0) throw Error("ribbon graph needs at least one vertex");
  UnionFind uf(vertex_count());
  for (const RibbonEdge& e : edges_) uf.unite(vertex_of(e.h1), vertex_of(e.h2));
  for (int v = 1; v < vertex_count(); ++v)
    if (uf.find(v) != uf.find(0)) throw Error("underlying graph is disconnected");
}

bool RibbonGraph::is_loop(int edge) const {
  const RibbonEdge& e = edges_[static_cast<size_t>(edge)];
  return vertex_of(e.h1) == vertex_of(e.h2);
}

int boundary_components(const RibbonGraph& g, Mask s) {
  if (s & ~((g.edge_count() == 0 ? 0 : (Mask{1} << g.edge_count()) - 1)))
    throw Error("edge subset outside edge set");
  // Corner points: 2h is the corner entered just before half-edge h in the
  // rotation, 2h+1 the corner left just after it. The boundary of the
  // subgraph decomposes into vertex corner arcs and ribbon sides; each is an
  // unordered segment joining two corner points, so boundary circles are the
  // connected components of the segment graph.
  int count = 0;
  UnionFind uf(4 * g.edge_count());
  for (const auto& rot : g.rotations()) {
    std::vector<int> retained;
    for (int he : rot)
      if (s & (Mask{1} << g.edge_of(he))) retained.push_back(he);
    if (retained.empty()) {
      ++count;  // bare vertex disk: its whole circle is one boundary circle
      continue;
    }
    const size_t k = retained.size();
    for (size_t i = 0; i < k; ++i) {
      int h = retained[i];
      int next = retained[(i + 1) % k];
      uf.unite(2 * h + 1, 2 * next);  // corner arc from after-h to before-next
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(s & (Mask{1} << e))) continue;
    const RibbonEdge& re = g.edges()[static_cast<size_t>(e)];
    if (!re.twisted) {
      uf.unite(2 * re.h1 + 1, 2 * re.h2);
      uf.unite(2 * re.h2 + 1, 2 * re.h1);
    } else {
      uf.unite(2 * re.h1 + 1, 2 * re.h2 + 1);
      uf.unite(2 * re.h1, 2 * re.h2);
    }
  }
  std::vector<int> roots;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(s & (Mask{1} << e))) continue;
    const RibbonEdge& re = g.edges()[static_cast<size_t>(e)];
    for (int c : {2 * re.h1, 2 * re.h1 + 1, 2 * re.h2, 2 * re.h2 + 1})
      roots.push_back(uf.find(c));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return count + static_cast<int>(roots.size());
}

DeltaMatroid delta_matroid_of_ribbon_graph(const RibbonGraph& g) {
  const int m = g.edge_count();
  const Mask full = m == 0 ? 0 : (Mask{1} << m) - 1;
  std::vector<Mask> feasible;
  for (Mask sset = 0;; ++sset) {
    if (boundary_components(g, sset) == 1) feasible.push_back(sset);
    if (sset == full) break;
  }
  // Quasi-tree families are delta-matroids (and binary); re-checked in tests.
  return trusted_delta_matroid(SetSystem(m, std::move(feasible)));
}

bool is_orientable(const RibbonGraph& g) {
  // Choose a reversal flag per vertex so every edge becomes untwisted; an
  // edge forces flag(u) xor flag(v) = twisted(e). Loops with a twist are
  // immediately fatal. Propagate over any spanning structure and check.
  const int n = g.vertex_count();
  std::vector<int> flag(static_cast<size_t>(n), -1);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (other, parity)
  for (const RibbonEdge& e : g.edges()) {
    int u = g.vertex_of(e.h1), v = g.vertex_of(e.h2);
    adj[static_cast<size_t>(u)].push_back({v, e.twisted ? 1 : 0});
    adj[static_cast<size_t>(v)].push_back({u, e.twisted ? 1 : 0});
  }
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (flag[static_cast<size_t>(start)] != -1) continue;
    flag[static_cast<size_t>(start)] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, parity] : adj[static_cast<size_t>(u)]) {
        int want = flag[static_cast<size_t>(u)] ^ parity;
        if (flag[static_cast<size_t>(v)] == -1) {
          flag[static_cast<size_t>(v)] = want;
          stack.push_back(v);
        } else if (flag[static_cast<size_t>(v)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

FramedGraph intersection_graph(const RibbonGraph& chord_diagram) {
  if (chord_diagram.vertex_count() != 1)
    throw Error("chord diagram must have exactly one vertex");
  for (const RibbonEdge& e : chord_diagram.edges())
    if (e.twisted) throw Error("chord diagram must be untwisted");
  const auto& rot = chord_diagram.rotations()[0];
  const int m = chord_diagram.edge_count();
  std::vector<std::pair<int, int>> pos(static_cast<size_t>(m), {-1, -1});
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    int e = chord_diagram.edge_of(rot[static_cast<size_t>(i)]);
    if (pos[static_cast<size_t>(e)].first < 0)
      pos[static_cast<size_t>(e)].first = i;
    else
      pos[static_cast<size_t>(e)].second = i;
  }
  FramedGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a1, a2] = pos[static_cast<size_t>(i)];
      auto [b1, b2] = pos[static_cast<size_t>(j)];
      bool inside1 = a1 < b1 && b1 < a2;
      bool inside2 = a1 < b2 && b2 < a2;
      if (inside1 != inside2) g.set_edge(i, j, true);
    }
  return g;
}

RibbonGraph two_vertex_family(int n, int k, const TwoVertexLayout& layout) {
  if (k < 2 || k > n) throw Error("two-vertex family needs 2 <= k <= n");
  // Edge i has half-edges 2i and 2i+1. Non-loops put 2i at vertex 0.
  std::vector<int> uses(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> rotations(2);
  auto place = [&](const std::vector<int>& seq, int vertex) {
    for (int e : seq) {
      if (e < 0 || e >= n) throw Error("layout names an edge outside 0..n-1");
      int occurrence = uses[static_cast<size_t>(e)]++;
      int half;
      if (e < k) {
        if (occurrence > 1) throw Error("non-loop edge placed more than twice");
        half = (vertex == 0) ? 2 * e : 2 * e + 1;
      } else {
        if (occurrence > 1) throw Error("loop edge placed more than twice");
        half = 2 * e + occurrence;
      }
      rotations[static_cast<size_t>(vertex)].push_back(half);
    }
  };
  place(layout.rotation_a, 0);
  place(layout.rotation_b, 1);
  for (int e = 0; e < k; ++e) {
    bool in_a = std::find(layout.rotation_a.begin(), layout.rotation_a.end(), e) !=
                layout.rotation_a.end();
    bool in_b = std::find(layout.rotation_b.begin(), layout.rotation_b.end(), e) !=
                layout.rotation_b.end();
    if (!in_a || !in_b || uses[static_cast<size_t>(e)] != 2)
      throw Error("non-loop edge must appear once in each rotation");
  }
  for (int e = k; e < n; ++e) {
    if (uses[static_cast<size_t>(e)] != 2) throw Error("loop edge must appear twice");
    bool in_a = std::find(layout.rotation_a.begin(), layout.rotation_a.end(), e) !=
                layout.rotation_a.end();
    bool in_b = std::find(layout.rotation_b.begin(), layout.rotation_b.end(), e) !=
                layout.rotation_b.end();
    if (in_a && in_b) throw Error("loop edge must stay at a single vertex");
  }
  std::vector<RibbonEdge> edges;
  for (int e = 0; e < n; ++e) edges.push_back({2 * e, 2 * e + 1, false});
  return RibbonGraph(std::move(rotations), std::move(edges));
}

std::vector<RibbonGraph> all_chord_diagrams(int chords) {
  std::vector<RibbonGraph> out;
  const int n = chords;
  std::vector<int> partner(static_cast<size_t>(2 * n), -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (partner[static_cast<size_t>(i)] < 0) {
        first = i;
        break;
      }
    if (first < 0) {
      std::vector<int> rotation(static_cast<size_t>(2 * n));
      std::iota(rotation.begin(), rotation.end(), 0);
      std::vector<RibbonEdge> edges;
      for (int i = 0; i < 2 * n; ++i)
        if (partner[static_cast<size_t>(i)] > i)
          edges.push_back({i, partner[static_cast<size_t>(i)], false});
      out.push_back(RibbonGraph({rotation}, std::move(edges)));
      return;
    }
    for (int j = first + 1; j < 2 * n; ++j) {
      if (partner[static_cast<size_t>(j)] >= 0) continue;
      partner[static_cast<size_t>(first)] = j;
      partner[static_cast<size_t>(j)] = first;
      rec();
      partner[static_cast<size_t>(first)] = -1;
      partner[static_cast<size_t>(j)] = -1;
    }
  };
  if (n == 0) {
    out.push_back(RibbonGraph({{}}, {}));
  } else {
    rec();
  }
  return out;
}

namespace {

// Appends every graph obtained from the half-edge placement by choosing
// rotations (first element of each vertex pinned) and twist patterns.
void emit_rotations_and_twists(const std::vector<std::vector<int>>& placement, int edges,
                               std::vector<RibbonGraph>* out) {
  std::vector<std::vector<std::vector<int>>> rotation_choices;
  for (const auto& at_vertex : placement) {
    std::vector<std::vector<int>> choices;
    if (at_vertex.empty()) {
      choices.push_back({});
    } else {
      std::vector<int> rest(at_vertex.begin() + 1, at_vertex.end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<int> rot{at_vertex[0]};
        rot.insert(rot.end(), rest.begin(), rest.end());
        choices.push_back(std::move(rot));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    rotation_choices.push_back(std::move(choices));
  }
  std::vector<size_t> pick(placement.size(), 0);
  while (true) {
    std::vector<std::vector<int>> rotations;
    for (size_t v = 0; v < placement.size(); ++v)
      rotations.push_back(rotation_choices[v][pick[v]]);
    for (Mask twists = 0; twists < (Mask{1} << edges); ++twists) {
      std::vector<RibbonEdge> es;
      for (int e = 0; e < edges; ++e)
        es.push_back({2 * e, 2 * e + 1, (twists & (Mask{1} << e)) != 0});
      out->push_back(RibbonGraph(rotations, std::move(es)));
    }
    size_t v = 0;
    while (v < placement.size() && ++pick[v] == rotation_choices[v].size()) pick[v++] = 0;
    if (v == placement.size()) break;
  }
}

}  // namespace

std::vector<RibbonGraph> all_ribbon_graphs(int vertices, int edges) {
  if (vertices < 1 || vertices > 2) throw Error("ribbon sweep supports 1 or 2 vertices");
  std::vector<RibbonGraph> out;
  if (vertices == 1) {
    std::vector<int> at_v;
    for (int e = 0; e < edges; ++e) {
      at_v.push_back(2 * e);
      at_v.push_back(2 * e + 1);
    }
    emit_rotations_and_twists({at_v}, edges, &out);
    return out;
  }
  // Two vertices: each edge is a loop at one of them or a connector; at
  // least one connector keeps the graph connected.
  std::vector<int> type(static_cast<size_t>(edges), 0);  // 0 connector, 1 loop@0, 2 loop@1
  while (true) {
    bool has_connector = false;
    for (int t : type)
      if (t == 0) has_connector = true;
    if (has_connector) {
      std::vector<std::vector<int>> placement(2);
      for (int e = 0; e < edges; ++e) {
        if (type[static_cast<size_t>(e)] == 0) {
          placement[0].push_back(2 * e);
          placement[1].push_back(2 * e + 1);
        } else {
          int v = type[static_cast<size_t>(e)] - 1;
          placement[static_cast<size_t>(v)].push_back(2 * e);
          placement[static_cast<size_t>(v)].push_back(2 * e + 1);
        }
      }
      emit_rotations_and_twists(placement, edges, &out);
    }
    size_t i = 0;
    while (i < type.size() && ++type[i] == 3) type[i++] = 0;
    if (i == type.size()) break;
  }
  return out;
}

std::vector<TwoVertexLayout> all_two_vertex_layouts(int n, int k) {
  if (k < 2 || k > n) throw Error("two-vertex family needs 2 <= k <= n");
  std::vector<TwoVertexLayout> out;
  const int loops = n - k;
  // Loop assignment: bit i set means loop k+i sits at vertex 0.
  for (Mask assign = 0; assign < (Mask{1} << loops); ++assign) {
    std::vector<int> rest_a, rest_b;
    for (int e = 1; e < k; ++e) {
      rest_a.push_back(e);
      rest_b.push_back(e);
    }
    for (int i = 0; i < loops; ++i) {
      auto& dst = (assign & (Mask{1} << i)) ? rest_a : rest_b;
      dst.push_back(k + i);
      dst.push_back(k + i);
    }
    std::sort(rest_a.begin(), rest_a.end());
    std::sort(rest_b.begin(), rest_b.end());
    // Pin edge 0 first in both rotations to factor out cyclic symmetry.
    std::vector<std::vector<int>> perms_a, perms_b;
    do {
      perms_a.push_back(rest_a);
    } while (std::next_permutation(rest_a.begin(), rest_a.end()));
    do {
      perms_b.push_back(rest_b);
    } while (std::next_permutation(rest_b.begin(), rest_b.end()));
    for (const auto& pa : perms_a)
      for (const auto& pb : perms_b) {
        TwoVertexLayout layout;
        layout.rotation_a.push_back(0);
        layout.rotation_a.insert(layout.rotation_a.end(), pa.begin(), pa.end());
        layout.rotation_b.push_back(0);
        layout.rotation_b.insert(layout.rotation_b.end(), pb.begin(), pb.end());
        out.push_back(std::move(layout));
      }
  }
  return out;
}

}  // namespace deltachroma
