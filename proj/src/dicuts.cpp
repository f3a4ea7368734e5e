#include "dijoin/dicuts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace dijoin {
namespace {

// Renumbers arbitrary labels so that component ids follow smallest members.
Components normalise(std::vector<int> raw) {
  std::map<int, int> renamed;
  Components c;
  c.label.resize(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = renamed.emplace(raw[v], c.count);
    if (inserted) ++c.count;
    c.label[v] = it->second;
  }
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Undirected incidence lists sorted by edge id.
std::vector<std::vector<std::pair<EdgeId, VertexId>>> incidence(
    const Digraph& d) {
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(d.vertex_count());
  for (const Edge& e : d.edges()) {
    adj[index(e.tail)].emplace_back(e.id, e.head);
    adj[index(e.head)].emplace_back(e.id, e.tail);
  }
  return adj;
}

}  // namespace

Components weak_components(const Digraph& d) {
  UnionFind uf(d.vertex_count());
  for (const Edge& e : d.edges()) {
    uf.unite(static_cast<int>(index(e.tail)), static_cast<int>(index(e.head)));
  }
  std::vector<int> raw(d.vertex_count());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    raw[v] = uf.find(static_cast<int>(v));
  }
  return normalise(std::move(raw));
}

bool is_weakly_connected(const Digraph& d) {
  return weak_components(d).count <= 1;
}

Components strong_components(const Digraph& d) {
  // Iterative Tarjan.
  const std::size_t n = d.vertex_count();
  std::vector<int> order(n, -1), low(n, 0), raw(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // vertex, next out
  int counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      auto outs = d.out_edges(static_cast<VertexId>(v));
      if (next < outs.size()) {
        std::size_t w = index(d.edge(outs[next++]).head);
        if (order[w] < 0) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw[w] = static_cast<int>(v);
        } while (w != v);
      }
      std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto& parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return normalise(std::move(raw));
}

bool is_acyclic(const Digraph& d) {
  return static_cast<std::size_t>(strong_components(d).count) ==
         d.vertex_count();
}

std::vector<Dicut> enumerate_dicuts(const Digraph& d,
                                    const EnumerateOptions& options) {
  const std::size_t n = d.vertex_count();
  Components scc = strong_components(d);
  const auto k = static_cast<std::size_t>(scc.count);

  std::vector<std::vector<int>> successors(k);
  std::vector<int> pending(k, 0);  // unprocessed successors, for ordering
  for (const Edge& e : d.edges()) {
    int a = scc.label[index(e.tail)];
    int b = scc.label[index(e.head)];
    if (a != b) successors[a].push_back(b);
  }
  std::vector<std::vector<int>> predecessors(k);
  for (std::size_t a = 0; a < k; ++a) {
    auto& s = successors[a];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    pending[a] = static_cast<int>(s.size());
    for (int b : s) predecessors[b].push_back(static_cast<int>(a));
  }
  // Sinks first: every component appears after all of its successors.
  std::vector<int> order;
  for (std::size_t a = 0; a < k; ++a) {
    if (pending[a] == 0) order.push_back(static_cast<int>(a));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int p : predecessors[order[i]]) {
      if (--pending[p] == 0) order.push_back(p);
    }
  }

  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t v = 0; v < n; ++v) members[scc.label[v]].push_back(v);

  std::vector<char> included(k, 0);
  std::vector<Dicut> result;
  std::size_t visited = 0;

  auto emit = [&] {
    if (++visited > options.max_closed_sets) {
      throw Error(ErrorCode::kTooLarge, "dicut enumeration exceeds cap of " +
                                            std::to_string(options.max_closed_sets) +
                                            " closed sets");
    }
    Dicut b;
    for (std::size_t v = 0; v < n; ++v) {
      if (included[scc.label[v]]) b.in_shore.push_back(static_cast<VertexId>(v));
    }
    if (b.in_shore.empty() || b.in_shore.size() == n) return;
    for (const Edge& e : d.edges()) {
      if (!included[scc.label[index(e.tail)]] &&
          included[scc.label[index(e.head)]]) {
        b.edges.push_back(e.id);
      }
    }
    if (b.edges.empty() && !options.include_empty) return;
    result.push_back(std::move(b));
  };

  std::function<void(std::size_t)> descend = [&](std::size_t pos) {
    if (pos == k) {
      emit();
      return;
    }
    int c = order[pos];
    included[c] = 0;
    descend(pos + 1);
    bool closed = std::all_of(successors[c].begin(), successors[c].end(),
                              [&](int s) { return included[s] != 0; });
    if (closed) {
      included[c] = 1;
      descend(pos + 1);
      included[c] = 0;
    }
  };
  descend(0);

  std::sort(result.begin(), result.end(),
            [](const Dicut& a, const Dicut& b) { return a.in_shore < b.in_shore; });
  if (options.dedupe_by_edges) {
    std::vector<Dicut> unique;
    std::vector<EdgeSet> seen;
    for (auto& b : result) {
      if (std::find(seen.begin(), seen.end(), b.edges) != seen.end()) continue;
      seen.push_back(b.edges);
      unique.push_back(std::move(b));
    }
    result = std::move(unique);
  }
  return result;
}

bool is_dibond(const Digraph& d, const Dicut& b) {
  if (b.edges.empty()) return false;
  Components weak = weak_components(d);
  int touched = weak.label[index(d.edge(b.edges.front()).tail)];
  for (EdgeId e : b.edges) {
    if (weak.label[index(d.edge(e).tail)] != touched) return false;
  }
  // Within the touched component both shores must induce weakly connected
  // subdigraphs.
  auto in_y = membership(d.vertex_count(), b.in_shore);
  UnionFind uf(d.vertex_count());
  for (const Edge& e : d.edges()) {
    if (in_y[index(e.tail)] == in_y[index(e.head)]) {
      uf.unite(static_cast<int>(index(e.tail)), static_cast<int>(index(e.head)));
    }
  }
  int root_in = -1;
  int root_out = -1;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (weak.label[v] != touched) continue;
    int& root = in_y[v] ? root_in : root_out;
    int r = uf.find(static_cast<int>(v));
    if (root < 0) {
      root = r;
    } else if (root != r) {
      return false;
    }
  }
  return true;
}

std::vector<Dicut> enumerate_dibonds(const Digraph& d,
                                     const EnumerateOptions& options) {
  EnumerateOptions opts = options;
  opts.include_empty = false;
  opts.dedupe_by_edges = true;
  std::vector<Dicut> all = enumerate_dicuts(d, opts);
  std::vector<Dicut> result;
  for (auto& b : all) {
    if (is_dibond(d, b)) result.push_back(std::move(b));
  }
  return result;
}

Dicut dicut_from_inshore(const Digraph& d, VertexSet y) {
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (y.empty() || y.size() >= d.vertex_count() ||
      index(y.back()) >= d.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "in-shore must be a non-trivial vertex subset");
  }
  auto in_y = membership(d.vertex_count(), y);
  Dicut b;
  for (const Edge& e : d.edges()) {
    bool tail_in = in_y[index(e.tail)];
    bool head_in = in_y[index(e.head)];
    if (tail_in && !head_in) {
      throw Error(ErrorCode::kNotADicut, "edge " + d.edge_name(e.id) +
                                             " leaves the proposed in-shore");
    }
    if (!tail_in && head_in) b.edges.push_back(e.id);
  }
  b.in_shore = std::move(y);
  return b;
}

VertexSet Contraction::project(const VertexSet& s) const {
  VertexSet out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(projection[index(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Dicut Contraction::project(const Dicut& b) const {
  Dicut out{b.edges, project(b.in_shore)};
  return out;
}

Contraction contract(const Digraph& d, const std::vector<int>& label) {
  if (label.size() != d.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "label count mismatch");
  }
  Contraction c;
  c.projection.resize(d.vertex_count());
  std::map<int, VertexId> created;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    auto [it, inserted] =
        created.emplace(label[v], static_cast<VertexId>(created.size()));
    if (inserted) names.emplace_back();
    auto& name = names[index(it->second)];
    if (!name.empty()) name += '+';
    name += d.vertex_name(static_cast<VertexId>(v));
    c.projection[v] = it->second;
  }
  for (auto& name : names) c.graph.add_vertex(std::move(name));
  for (const Edge& e : d.edges()) {
    c.graph.add_edge(e.id, c.projection[index(e.tail)],
                     c.projection[index(e.head)], d.edge_name(e.id));
  }
  return c;
}

Contraction identify(const Digraph& d, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "empty vertex set");
  std::vector<int> label(d.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  int target = static_cast<int>(index(s.front()));
  for (VertexId v : s) label[index(v)] = target;
  return contract(d, label);
}

Contraction quotient(const Digraph& d, const std::vector<Dicut>& cls) {
  std::vector<std::vector<char>> sides(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    sides[i] = membership(d.vertex_count(), cls[i].in_shore);
  }
  std::map<std::vector<char>, int> signature_ids;
  std::vector<int> label(d.vertex_count());
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    std::vector<char> signature(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) signature[i] = sides[i][v];
    auto [it, inserted] = signature_ids.emplace(
        std::move(signature), static_cast<int>(signature_ids.size()));
    label[v] = it->second;
  }
  return contract(d, label);
}

EdgeSet bridges(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  auto adj = incidence(d);
  std::vector<int> order(n, -1), low(n, 0);
  EdgeSet result;
  int counter = 0;
  struct Frame {
    std::size_t vertex;
    EdgeId via;
    bool has_via;
    std::size_t next;
  };
  std::vector<Frame> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    order[root] = low[root] = counter++;
    frames.push_back({root, EdgeId{0}, false, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.vertex].size()) {
        auto [e, w] = adj[f.vertex][f.next++];
        if (f.has_via && e == f.via) continue;
        if (order[index(w)] < 0) {
          order[index(w)] = low[index(w)] = counter++;
          frames.push_back({index(w), e, true, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], order[index(w)]);
        }
        continue;
      }
      Frame done = f;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) result.push_back(done.via);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

RobbinsDijoins robbins_two_dijoins(const Digraph& d) {
  if (!is_weakly_connected(d)) {
    throw Error(ErrorCode::kNotWeaklyConnected,
                "a strongly connected orientation needs a connected graph");
  }
  if (EdgeSet b = bridges(d); !b.empty()) {
    throw Error(ErrorCode::kNotBridgeless, "edge " + d.edge_name(b.front()) +
                                               " is a bridge");
  }
  if (strong_components(d).count <= 1) {
    throw Error(ErrorCode::kNoDicut, "digraph is strongly connected");
  }

  // DFS of the underlying multigraph: tree edges point away from the root,
  // every other edge points back towards the earlier-discovered endpoint.
  const std::size_t n = d.vertex_count();
  auto adj = incidence(d);
  std::vector<int> order(n, -1);
  std::vector<char> tree(d.edge_id_bound(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  int counter = 0;
  order[0] = counter++;
  frames.emplace_back(0, 0);
  while (!frames.empty()) {
    auto& [v, next] = frames.back();
    if (next < adj[v].size()) {
      auto [e, w] = adj[v][next++];
      if (order[index(w)] < 0) {
        order[index(w)] = counter++;
        tree[index(e)] = 1;
        frames.emplace_back(index(w), 0);
      }
      continue;
    }
    frames.pop_back();
  }

  RobbinsDijoins result;
  for (const Edge& e : d.edges()) {
    bool forward = order[index(e.tail)] < order[index(e.head)];
    bool oriented_as_is = tree[index(e.id)] ? forward : !forward;
    (oriented_as_is ? result.agree : result.disagree).push_back(e.id);
  }
  return result;
}

}  // namespace dijoin
