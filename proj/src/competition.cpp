#include "stepcomp/competition.hpp"

#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace stepcomp {

StepPair::StepPair(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j < 1) throw std::invalid_argument("step bounds must be at least 1");
}

namespace {

// Distances from source with vertex `avoid` removed, truncated at `bound`;
// -1 marks out of reach. Equivalent to bounded_distance(delete_vertex(d,
// avoid), source, bound) without copying the digraph.
std::vector<int> distances_avoiding(const Digraph& d, Vertex source, int bound, Vertex avoid) {
  std::vector<int> dist(d.vertex_count(), -1);
  dist[source] = 0;
  std::queue<Vertex> queue;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    if (dist[x] == bound) continue;
    for (Vertex y : d.out_neighbors(x)) {
      if (y == avoid || dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      queue.push(y);
    }
  }
  return dist;
}

}  // namespace

std::optional<CompeteWitness> ij_compete(const Digraph& d, Vertex u, Vertex v, StepPair steps) {
  if (u < 0 || u >= d.vertex_count() || v < 0 || v >= d.vertex_count())
    throw std::out_of_range("ij_compete: vertex out of range");
  if (u == v) throw std::invalid_argument("ij_compete: vertices must be distinct");
  int bound = steps.longer();
  auto du = distances_avoiding(d, u, bound, v);
  auto dv = distances_avoiding(d, v, bound, u);
  std::optional<CompeteWitness> best;
  for (Vertex w = 0; w < d.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    int a = du[w], b = dv[w];
    if (a < 1 || b < 1) continue;
    bool direct = a <= steps.i && b <= steps.j;
    if (!direct && !(a <= steps.j && b <= steps.i)) continue;
    if (!best || a + b < best->len_from_u + best->len_from_v)
      best = CompeteWitness{w, a, b, !direct};
  }
  return best;
}

Graph competition_graph(const Digraph& d, StepPair steps) {
  int n = d.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (ij_compete(d, u, v, steps)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::optional<std::pair<Vertex, Vertex>> first_noncompeting_pair(const Digraph& d,
                                                                 StepPair steps) {
  int n = d.vertex_count();
  if (n < 2) throw std::invalid_argument("competitiveness needs at least two vertices");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!ij_compete(d, u, v, steps)) return std::make_pair(u, v);
  return std::nullopt;
}

bool is_competitive(const Digraph& d, StepPair steps) {
  return !first_noncompeting_pair(d, steps).has_value();
}

namespace {

// BFS distances in g, optionally with one edge {skip_a, skip_b} removed;
// -1 = unreachable.
std::vector<int> graph_distances(const Graph& g, Vertex source, Vertex skip_a = -1,
                                 Vertex skip_b = -1) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::queue<Vertex> queue;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a)) continue;
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      queue.push(y);
    }
  }
  return dist;
}

std::optional<Edge> find_bridge(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> entry(n, -1), low(n, 0);
  std::optional<Edge> bridge;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    entry[v] = low[v] = timer++;
    bool parent_edge_used = false;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent && !parent_edge_used) {  // multi-edges cannot occur
        parent_edge_used = true;
        continue;
      }
      if (entry[w] >= 0) {
        low[v] = std::min(low[v], entry[w]);
      } else {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > entry[v] && !bridge) bridge = Edge{std::min(v, w), std::max(v, w)};
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (entry[v] < 0) dfs(v, -1);
  return bridge;
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

NecessaryReport check_necessary(const Graph& g, StepPair steps) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("check_necessary: need at least two vertices");
  NecessaryReport report;

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      report.min_degree = {false, "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(g.degree(v))};
      break;
    }
  }

  if (n < 5)
    report.size_bounds = {false, "|V| = " + std::to_string(n) + " < 5"};
  else if (g.edge_count() < 2 * n)
    report.size_bounds = {false, "|E| = " + std::to_string(g.edge_count()) +
                                     " < 2|V| = " + std::to_string(2 * n)};

  int limit = steps.total();
  for (Vertex u = 0; u < n && report.avoiding_walks.pass; ++u) {
    auto plain = graph_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      int dist = g.has_edge(u, v) ? graph_distances(g, u, u, v)[v] : plain[v];
      if (dist < 0 || dist > limit) {
        report.avoiding_walks = {false, "pair " + pair_text(u, v) +
                                            " has no avoiding walk of length <= " +
                                            std::to_string(limit)};
        break;
      }
    }
  }

  for (Vertex u = 0; u < n && report.diameter.pass; ++u) {
    auto dist = graph_distances(g, u);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        report.diameter = {false, "vertex " + std::to_string(v) + " unreachable from " +
                                      std::to_string(u)};
        break;
      }
      if (dist[v] > limit) {
        report.diameter = {false, "distance " + pair_text(u, v) + " = " +
                                      std::to_string(dist[v]) + " > " + std::to_string(limit)};
        break;
      }
    }
  }

  auto from0 = graph_distances(g, 0);
  bool connected = true;
  for (Vertex v = 0; v < n; ++v)
    if (from0[v] < 0) {
      report.edge_connectivity = {false, "graph is disconnected"};
      connected = false;
      break;
    }
  if (connected) {
    if (auto bridge = find_bridge(g))
      report.edge_connectivity = {false,
                                  "edge " + pair_text(bridge->first, bridge->second) +
                                      " is a bridge"};
  }

  return report;
}

Graph reduce_degree_two(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  for (;;) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && adj[v].size() == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    for (Vertex w : adj[pick]) adj[w].erase(pick);
    adj[pick].clear();
    alive[pick] = 0;
  }
  std::vector<int> remap(n, -1);
  int kept = 0;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) remap[v] = kept++;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v])
      for (Vertex w : adj[v])
        if (v < w) edges.emplace_back(remap[v], remap[w]);
  return Graph(kept, std::move(edges));
}

}  // namespace stepcomp
