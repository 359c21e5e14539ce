#pragma once

// Simple undirected graphs over integer vertex ids, spanning forests,
// cuts and fundamental cycles. Everything is a value; operations are
// free functions and iterate in ascending-id order so results are
// deterministic.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct UnknownEndpointError : Error { using Error::Error; };
struct UnknownVertexError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct EdgeInForestError : Error { using Error::Error; };
struct CrossComponentError : Error { using Error::Error; };

struct Edge {
  int u = -1, v = -1;  // normalized: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge mk_edge(int a, int b) {
  if (a == b) throw SelfLoopError("self loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline int edge_other(const Edge& e, int x) { return e.u == x ? e.v : e.u; }
inline bool edge_has(const Edge& e, int x) { return e.u == x || e.v == x; }

class Graph {
 public:
  Graph() = default;

  static Graph build(const std::vector<int>& vertex_ids,
                     const std::vector<std::pair<int, int>>& edge_pairs) {
    Graph g;
    g.verts_ = vertex_ids;
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
    if (g.verts_.size() != vertex_ids.size())
      throw DuplicateEdgeError("duplicate vertex id in vertex list");
    for (auto [a, b] : edge_pairs) {
      Edge e = mk_edge(a, b);
      if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
        throw UnknownEndpointError("edge {" + std::to_string(a) + "," +
                                   std::to_string(b) + "} has undeclared endpoint");
      g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
      throw DuplicateEdgeError("duplicate edge in edge list");
    g.rebuild_adj();
    return g;
  }

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int n() const { return (int)verts_.size(); }
  int m() const { return (int)edges_.size(); }

  bool has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }
  bool has_edge(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), mk_edge(a, b));
  }
  int edge_index(int a, int b) const {
    Edge e = mk_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return (int)(it - edges_.begin());
  }
  int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

  int vertex_pos(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return (int)(it - verts_.begin());
  }

  const std::vector<int>& neighbors(int v) const {
    int i = vertex_pos(v);
    if (i < 0) throw UnknownVertexError("unknown vertex " + std::to_string(v));
    return adj_[i];
  }
  int degree(int v) const { return (int)neighbors(v).size(); }

  Graph induced(const std::vector<int>& w) const {
    for (int v : w)
      if (!has_vertex(v))
        throw UnknownVertexError("induced: unknown vertex " + std::to_string(v));
    std::vector<int> ws = w;
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : edges_)
      if (std::binary_search(ws.begin(), ws.end(), e.u) &&
          std::binary_search(ws.begin(), ws.end(), e.v))
        es.push_back({e.u, e.v});
    return build(ws, es);
  }

  Graph without_vertices(const std::vector<int>& removed) const {
    std::vector<int> rs = removed;
    std::sort(rs.begin(), rs.end());
    std::vector<int> keep;
    for (int v : verts_)
      if (!std::binary_search(rs.begin(), rs.end(), v)) keep.push_back(v);
    return induced(keep);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_adj() {
    adj_.assign(verts_.size(), {});
    for (const Edge& e : edges_) {
      adj_[vertex_pos(e.u)].push_back(e.v);
      adj_[vertex_pos(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::vector<int> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(const std::vector<int>& vertex_ids,
                         const std::vector<std::pair<int, int>>& edge_pairs) {
  return Graph::build(vertex_ids, edge_pairs);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
  return g.induced(w);
}

namespace detail {

// Union-find over vertex positions.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

}  // namespace detail

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
  detail::Dsu dsu(g.n());
  for (const Edge& e : g.edges())
    dsu.unite(g.vertex_pos(e.u), g.vertex_pos(e.v));
  std::map<int, std::vector<int>> comp;
  for (int i = 0; i < g.n(); ++i)
    comp[dsu.find(i)].push_back(g.vertices()[i]);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : comp) out.push_back(std::move(vs));
  return out;
}

// Empty and single-vertex graphs count as connected.
inline bool is_connected(const Graph& g) {
  return components(g).size() <= 1;
}

// Connectivity of g minus a vertex subset, without materializing the
// induced subgraph.
inline bool connected_after_removal(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n(), 0);
  for (int v : removed) {
    int i = g.vertex_pos(v);
    if (i < 0) throw UnknownVertexError("removal of unknown vertex");
    gone[i] = 1;
  }
  int start = -1, remain = 0;
  for (int i = 0; i < g.n(); ++i)
    if (!gone[i]) { ++remain; if (start < 0) start = i; }
  if (remain <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int i = stack.back(); stack.pop_back();
    ++cnt;
    for (int w : g.neighbors(g.vertices()[i])) {
      int j = g.vertex_pos(w);
      if (!gone[j] && !seen[j]) { seen[j] = 1; stack.push_back(j); }
    }
  }
  return cnt == remain;
}

struct Cut {
  std::vector<int> members;  // sorted
  int size() const { return (int)members.size(); }
  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut&, const Cut&) = default;
};

// All vertex subsets of size exactly l whose removal disconnects g.
inline std::vector<Cut> enumerate_cuts(const Graph& g, int l) {
  if (!is_connected(g)) throw DisconnectedError("enumerate_cuts: graph disconnected");
  std::vector<Cut> cuts;
  if (l < 1 || l > g.n()) return cuts;
  std::vector<int> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  const auto& vs = g.vertices();
  while (true) {
    std::vector<int> cand(l);
    for (int i = 0; i < l; ++i) cand[i] = vs[idx[i]];
    if (!connected_after_removal(g, cand)) cuts.push_back(Cut{cand});
    int i = l - 1;
    while (i >= 0 && idx[i] == g.n() - l + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
  return cuts;
}

// No cut of size at most l-1 exists. Complete graphs have no cuts at all,
// so K_m is l-connected for every l (cut-based reading of the definition).
inline bool is_l_connected(const Graph& g, int l) {
  if (!is_connected(g)) throw DisconnectedError("is_l_connected: graph disconnected");
  for (int j = 1; j <= l - 1; ++j)
    if (!enumerate_cuts(g, j).empty()) return false;
  return true;
}

struct SpanningForest {
  std::vector<Edge> tree_edges;    // sorted
  std::optional<int> root;         // primary root after root_orient
  std::map<int, int> parent;       // vertex -> parent vertex (roots absent)
  std::vector<int> roots;          // one per component after root_orient

  bool has_tree_edge(int a, int b) const {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), mk_edge(a, b));
  }
};

// Greedy maximal spanning forest. With a priority list the forest is the
// greedy one under that order; otherwise ascending edge order.
inline SpanningForest spanning_forest(
    const Graph& g, const std::optional<std::vector<Edge>>& edge_priority = std::nullopt) {
  std::vector<Edge> order;
  if (edge_priority) {
    order = *edge_priority;
    std::vector<Edge> rest;
    for (const Edge& e : g.edges())
      if (std::find(order.begin(), order.end(), e) == order.end()) rest.push_back(e);
    order.insert(order.end(), rest.begin(), rest.end());
  } else {
    order = g.edges();
  }
  detail::Dsu dsu(g.n());
  SpanningForest f;
  for (const Edge& e : order) {
    if (g.edge_index(e) < 0) throw UnknownEndpointError("priority edge not in graph");
    if (dsu.unite(g.vertex_pos(e.u), g.vertex_pos(e.v))) f.tree_edges.push_back(e);
  }
  std::sort(f.tree_edges.begin(), f.tree_edges.end());
  return f;
}

namespace detail {

// Parent/depth arrays for one forest, rooted per component. Used by the
// fundamental-cycle and path machinery.
struct ForestIndex {
  std::vector<int> parent;  // by vertex position, -1 at roots
  std::vector<int> depth;
  std::vector<int> comp;    // component id by vertex position

  ForestIndex(const Graph& g, const SpanningForest& f, std::optional<int> root = std::nullopt) {
    int n = g.n();
    parent.assign(n, -1);
    depth.assign(n, 0);
    comp.assign(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : f.tree_edges) {
      adj[g.vertex_pos(e.u)].push_back(g.vertex_pos(e.v));
      adj[g.vertex_pos(e.v)].push_back(g.vertex_pos(e.u));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    int c = 0;
    auto bfs = [&](int s) {
      std::vector<int> q{s};
      comp[s] = c;
      for (size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        for (int y : adj[x])
          if (comp[y] < 0) {
            comp[y] = c;
            parent[y] = x;
            depth[y] = depth[x] + 1;
            q.push_back(y);
          }
      }
      ++c;
    };
    if (root && g.vertex_pos(*root) >= 0) bfs(g.vertex_pos(*root));
    for (int i = 0; i < n; ++i)
      if (comp[i] < 0) bfs(i);
  }
};

}  // namespace detail

// Orient every tree edge away from r in r's component; other components are
// rooted at their minimum vertex id.
inline SpanningForest root_orient(const Graph& g, const SpanningForest& t, int r) {
  if (!g.has_vertex(r)) throw UnknownVertexError("root_orient: unknown root");
  detail::ForestIndex fi(g, t, r);
  SpanningForest out = t;
  out.parent.clear();
  out.roots.clear();
  out.root = r;
  for (int i = 0; i < g.n(); ++i) {
    if (fi.parent[i] >= 0)
      out.parent[g.vertices()[i]] = g.vertices()[fi.parent[i]];
    else
      out.roots.push_back(g.vertices()[i]);
  }
  return out;
}

// Unique simple path between x and y in the forest, as an edge sequence
// from x to y. Empty when x == y.
inline std::vector<Edge> tree_path(const Graph& g, const SpanningForest& t, int x, int y) {
  int xi = g.vertex_pos(x), yi = g.vertex_pos(y);
  if (xi < 0 || yi < 0) throw UnknownVertexError("tree_path: unknown endpoint");
  if (x == y) return {};
  detail::ForestIndex fi(g, t);
  if (fi.comp[xi] != fi.comp[yi])
    throw CrossComponentError("tree_path: endpoints in different components");
  std::vector<int> up_x, up_y;
  int a = xi, b = yi;
  while (fi.depth[a] > fi.depth[b]) { up_x.push_back(a); a = fi.parent[a]; }
  while (fi.depth[b] > fi.depth[a]) { up_y.push_back(b); b = fi.parent[b]; }
  while (a != b) {
    up_x.push_back(a); a = fi.parent[a];
    up_y.push_back(b); b = fi.parent[b];
  }
  up_x.push_back(a);  // meeting vertex
  std::vector<Edge> path;
  for (size_t i = 0; i + 1 < up_x.size(); ++i)
    path.push_back(mk_edge(g.vertices()[up_x[i]], g.vertices()[up_x[i + 1]]));
  for (size_t i = up_y.size(); i-- > 0;) {
    int child = up_y[i];
    int par = (i + 1 < up_y.size()) ? up_y[i + 1] : a;
    path.push_back(mk_edge(g.vertices()[par], g.vertices()[child]));
  }
  return path;
}

struct CycleSets {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
};

// Fundamental cycle of a non-tree edge: the tree path between its endpoints
// plus the edge itself.
inline CycleSets fundamental_cycle(const Graph& g, const SpanningForest& t, const Edge& e) {
  if (g.edge_index(e) < 0) throw UnknownEndpointError("fundamental_cycle: edge not in graph");
  if (t.has_tree_edge(e.u, e.v)) throw EdgeInForestError("fundamental_cycle: edge is in the forest");
  std::vector<Edge> path;
  try {
    path = tree_path(g, t, e.u, e.v);
  } catch (const CrossComponentError&) {
    throw CrossComponentError("fundamental_cycle: endpoints in different forest components");
  }
  CycleSets c;
  c.edges = path;
  c.edges.push_back(e);
  std::sort(c.edges.begin(), c.edges.end());
  std::set<int> vs;
  for (const Edge& pe : c.edges) { vs.insert(pe.u); vs.insert(pe.v); }
  c.vertices.assign(vs.begin(), vs.end());
  return c;
}

namespace detail {

// Biconnected components via iterative DFS lowpoints. Returns edge groups;
// cut vertices are those in more than one group (or DFS roots with >= 2
// children). Deterministic: sorted adjacency.
struct Biconnected {
  std::vector<std::vector<Edge>> block_edges;  // each sorted
  std::vector<int> cut_vertices;               // sorted

  explicit Biconnected(const Graph& g) {
    int n = g.n();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> stack;
    int timer = 0;

    struct Frame { int v; size_t ei; };
    for (int s = 0; s < n; ++s) {
      if (num[s] >= 0) continue;
      std::vector<Frame> st{{s, 0}};
      num[s] = low[s] = timer++;
      while (!st.empty()) {
        auto& [v, ei] = st.back();
        const auto& nb = g.neighbors(g.vertices()[v]);
        if (ei < nb.size()) {
          int w = g.vertex_pos(nb[ei]);
          ++ei;
          if (num[w] < 0) {
            stack.push_back(mk_edge(g.vertices()[v], g.vertices()[w]));
            parent[w] = v;
            ++child_count[v];
            num[w] = low[w] = timer++;
            st.push_back({w, 0});
          } else if (w != parent[v] && num[w] < num[v]) {
            stack.push_back(mk_edge(g.vertices()[v], g.vertices()[w]));
            low[v] = std::min(low[v], num[w]);
          }
        } else {
          st.pop_back();
          if (!st.empty()) {
            int p = st.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= num[p]) {
              // p closes a block
              Edge top = mk_edge(g.vertices()[p], g.vertices()[v]);
              std::vector<Edge> blk;
              while (!stack.empty()) {
                Edge e = stack.back();
                stack.pop_back();
                blk.push_back(e);
                if (e == top) break;
              }
              std::sort(blk.begin(), blk.end());
              block_edges.push_back(std::move(blk));
              if (parent[p] >= 0 || child_count[p] >= 2) is_cut[p] = 1;
            }
          }
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (is_cut[i]) cut_vertices.push_back(g.vertices()[i]);
    std::sort(block_edges.begin(), block_edges.end());
  }
};

}  // namespace detail

}  // namespace kop
