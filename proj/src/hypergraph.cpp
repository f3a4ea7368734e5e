#include "dijoin/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <string>

namespace dijoin {
namespace {

void normalise(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Hyperedges as dense indices into the ground vector.
std::vector<std::vector<int>> dense_edges(const Hypergraph& h) {
  std::vector<std::vector<int>> out;
  out.reserve(h.hyperedges.size());
  for (const auto& edge : h.hyperedges) {
    std::vector<int> dense;
    dense.reserve(edge.size());
    for (int x : edge) {
      auto it = std::lower_bound(h.ground.begin(), h.ground.end(), x);
      dense.push_back(static_cast<int>(it - h.ground.begin()));
    }
    out.push_back(std::move(dense));
  }
  return out;
}

std::size_t colours_seen(const std::vector<int>& edge,
                         const std::vector<int>& colour) {
  std::vector<int> seen;
  seen.reserve(edge.size());
  for (int x : edge) seen.push_back(colour[x]);
  normalise(seen);
  return seen.size();
}

struct Elimination {
  std::vector<int> order;                   // dense elements, removal order
  std::vector<std::vector<int>> neighbours;  // 2-edge partners at removal
  std::vector<int> odd_cycle;               // dense, set on failure
};

// Odd cycle of a non-bipartite graph restricted to `alive`, or empty.
std::vector<int> find_odd_cycle(const std::vector<std::vector<int>>& adj,
                                const std::vector<char>& alive) {
  const std::size_t n = adj.size();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (!alive[root] || side[root] >= 0) continue;
    side[root] = 0;
    std::vector<int> queue{static_cast<int>(root)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : adj[u]) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          std::vector<int> left{u}, right{v};
          int a = u;
          int b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();  // common ancestor already in `left`
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

// Lowest alive vertex that is not a cut vertex of the graph on `alive`.
int lowest_non_cut_vertex(const std::vector<std::vector<int>>& adj,
                          const std::vector<char>& alive) {
  const std::size_t n = adj.size();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int counter = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    order[u] = low[u] = counter++;
    int children = 0;
    for (int v : adj[u]) {
      if (v == parent) continue;
      if (order[v] >= 0) {
        low[u] = std::min(low[u], order[v]);
        continue;
      }
      ++children;
      dfs(v, u);
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= order[u]) cut[u] = 1;
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && order[v] < 0) dfs(static_cast<int>(v), -1);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && !cut[v]) return static_cast<int>(v);
  }
  return -1;
}

Elimination eliminate(std::size_t n, const std::vector<std::vector<int>>& edges) {
  Elimination el;
  std::vector<char> alive(n, 1);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& edge : edges) {
      int a = -1;
      int b = -1;
      int count = 0;
      for (int x : edge) {
        if (!alive[x]) continue;
        if (++count == 1) {
          a = x;
        } else if (count == 2) {
          b = x;
        }
      }
      if (count == 2) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
    for (auto& list : adj) normalise(list);

    int x = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && adj[v].size() <= 1) {
        x = static_cast<int>(v);
        break;
      }
    }
    if (x < 0) {
      el.odd_cycle = find_odd_cycle(adj, alive);
      if (!el.odd_cycle.empty()) return el;
      x = lowest_non_cut_vertex(adj, alive);
    }
    el.order.push_back(x);
    el.neighbours.push_back(adj[x]);
    alive[x] = 0;
  }
  return el;
}

std::optional<std::vector<int>> exhaustive_two_colour(
    std::size_t n, const std::vector<std::vector<int>>& edges) {
  // Hyperedges are checked once their largest element is coloured.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].size() >= 2) {
      closing[*std::max_element(edges[i].begin(), edges[i].end())].push_back(i);
    }
  }
  std::vector<int> colour(n, -1);
  std::function<bool(std::size_t)> assign = [&](std::size_t x) {
    if (x == n) return true;
    for (int c = 0; c < 2; ++c) {
      if (x == 0 && c == 1) break;
      colour[x] = c;
      bool ok = std::all_of(closing[x].begin(), closing[x].end(),
                            [&](std::size_t i) {
                              return colours_seen(edges[i], colour) > 1;
                            });
      if (ok && assign(x + 1)) return true;
    }
    colour[x] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return colour;
}

}  // namespace

Hypergraph Hypergraph::make(std::vector<int> ground,
                            std::vector<std::vector<int>> hyperedges) {
  normalise(ground);
  for (auto& edge : hyperedges) {
    normalise(edge);
    if (edge.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty hyperedge");
    }
    if (!is_subset(edge, ground)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "hyperedge is not a subset of the ground set");
    }
  }
  return Hypergraph{std::move(ground), std::move(hyperedges)};
}

Hypergraph Hypergraph::from_edges(std::vector<std::vector<int>> hyperedges) {
  std::vector<int> ground;
  for (const auto& edge : hyperedges) {
    ground.insert(ground.end(), edge.begin(), edge.end());
  }
  return make(std::move(ground), std::move(hyperedges));
}

std::size_t Hypergraph::min_edge_size() const {
  std::size_t best = 0;
  for (const auto& edge : hyperedges) {
    if (best == 0 || edge.size() < best) best = edge.size();
  }
  return best;
}

Hypergraph Hypergraph::induced(const std::vector<int>& subset) const {
  std::vector<int> y = subset;
  normalise(y);
  std::vector<std::vector<int>> edges;
  for (const auto& edge : hyperedges) {
    std::vector<int> cut;
    std::set_intersection(edge.begin(), edge.end(), y.begin(), y.end(),
                          std::back_inserter(cut));
    if (cut.empty()) continue;
    if (std::find(edges.begin(), edges.end(), cut) == edges.end()) {
      edges.push_back(std::move(cut));
    }
  }
  return make(std::move(y), std::move(edges));
}

bool Hypergraph::is_transversal(const std::vector<int>& sorted_set) const {
  return std::all_of(hyperedges.begin(), hyperedges.end(),
                     [&](const auto& edge) { return intersects(edge, sorted_set); });
}

bool is_valid_colouring(const Hypergraph& h, const Colouring& c) {
  if (c.colour.size() != h.ground.size() || c.k <= 0) return false;
  for (int x : c.colour) {
    if (x < 0 || x >= c.k) return false;
  }
  for (const auto& edge : dense_edges(h)) {
    if (edge.size() >= 2 && colours_seen(edge, c.colour) < 2) return false;
  }
  return true;
}

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& cycle) {
  const std::size_t n = cycle.length();
  if (n == 0 || cycle.edges.size() != n) return false;
  auto xs = cycle.elements;
  normalise(xs);
  if (xs.size() != n) return false;
  auto es = cycle.edges;
  std::sort(es.begin(), es.end());
  if (std::unique(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cycle.edges[i] >= h.hyperedges.size()) return false;
    const auto& edge = h.hyperedges[cycle.edges[i]];
    if (!contains(edge, cycle.elements[i]) ||
        !contains(edge, cycle.elements[(i + 1) % n])) {
      return false;
    }
  }
  return true;
}

bool is_improper(const Hypergraph& h, const BergeCycle& cycle) {
  const std::size_t n = cycle.length();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& edge = h.hyperedges[cycle.edges[i]];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (contains(edge, cycle.elements[j])) return true;
    }
  }
  return false;
}

BalanceVerdict check_balanced_exhaustive(const Hypergraph& h,
                                         const BalanceCaps& caps) {
  const std::size_t n = h.ground.size();
  const std::size_t m = h.hyperedges.size();
  if (n > caps.max_ground || m > caps.max_edges || n > 64 || m > 64) {
    throw Error(ErrorCode::kTooLarge,
                "balance check limited to " + std::to_string(caps.max_ground) +
                    " elements and " + std::to_string(caps.max_edges) +
                    " hyperedges");
  }
  using Mask = std::uint64_t;
  auto bit = [](std::size_t i) { return Mask{1} << i; };
  std::vector<Mask> edge_mask(m, 0);
  auto dense = dense_edges(h);
  for (std::size_t j = 0; j < m; ++j) {
    for (int x : dense[j]) edge_mask[j] |= bit(static_cast<std::size_t>(x));
  }

  std::vector<int> elements;
  std::vector<std::size_t> edges;
  Mask cycle = 0;
  Mask used = 0;
  Mask forbidden = 0;  // elements of the hyperedges h_1 .. h_{i-1}

  std::function<bool(std::size_t)> extend = [&](std::size_t last) -> bool {
    const std::size_t first = static_cast<std::size_t>(elements.front());
    const std::size_t len = elements.size();
    for (std::size_t j = 0; j < m; ++j) {
      if ((used & bit(j)) || !(edge_mask[j] & bit(last))) continue;
      Mask meet = edge_mask[j] & cycle;
      if (len >= 3 && len % 2 == 1 && meet == (bit(last) | bit(first))) {
        edges.push_back(j);
        return true;
      }
      if (meet != bit(last)) continue;
      Mask candidates = edge_mask[j] & ~cycle & ~forbidden;
      for (std::size_t y = first + 1; y < n; ++y) {
        if (!(candidates & bit(y))) continue;
        Mask saved_forbidden = forbidden;
        elements.push_back(static_cast<int>(y));
        edges.push_back(j);
        cycle |= bit(y);
        used |= bit(j);
        // h_j may no longer gain elements once the walk moves past it.
        Mask next_forbidden = forbidden | edge_mask[j];
        forbidden = next_forbidden;
        if (extend(y)) return true;
        forbidden = saved_forbidden;
        cycle &= ~bit(y);
        used &= ~bit(j);
        elements.pop_back();
        edges.pop_back();
      }
    }
    return false;
  };

  for (std::size_t start = 0; start < n; ++start) {
    elements = {static_cast<int>(start)};
    edges.clear();
    cycle = bit(start);
    used = 0;
    forbidden = 0;
    if (extend(start)) {
      BergeCycle witness;
      for (int x : elements) witness.elements.push_back(h.ground[x]);
      witness.edges = edges;
      return BalanceVerdict{false, std::move(witness)};
    }
  }
  return BalanceVerdict{true, std::nullopt};
}

TwoColourResult two_colour(const Hypergraph& h) {
  const std::size_t n = h.ground.size();
  auto edges = dense_edges(h);
  TwoColourResult result;

  Elimination el = eliminate(n, edges);
  std::vector<int> colour(n, -1);
  bool failed = !el.odd_cycle.empty();
  for (std::size_t i = el.order.size(); !failed && i-- > 0;) {
    int x = el.order[i];
    const auto& nbrs = el.neighbours[i];
    int c = nbrs.empty() ? 0 : 1 - colour[nbrs.front()];
    for (int y : nbrs) {
      if (colour[y] != 1 - c) {
        failed = true;
        result.unextendable = h.ground[x];
        break;
      }
    }
    colour[x] = c;
  }
  if (failed) {
    for (int x : el.odd_cycle) result.odd_cycle.push_back(h.ground[x]);
    if (n <= 24) {
      if (auto exhaustive = exhaustive_two_colour(n, edges)) {
        result.colouring = Colouring{2, std::move(*exhaustive)};
        result.via_fallback = true;
        result.odd_cycle.clear();
        result.unextendable.reset();
      }
    }
    return result;
  }
  result.colouring = Colouring{2, std::move(colour)};
  if (!is_valid_colouring(h, *result.colouring)) {
    throw Error(ErrorCode::kInternal, "elimination produced an invalid colouring");
  }
  return result;
}

TransversalPacking pack_transversals(const Hypergraph& h) {
  if (h.hyperedges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hypergraph has no hyperedges");
  }
  const std::size_t k = h.min_edge_size();
  TransversalPacking packing;
  if (k == 1) {
    packing.transversals.push_back(h.ground);
    return packing;
  }

  TwoColourResult initial = two_colour(h);
  if (!initial.ok()) {
    throw Error(ErrorCode::kNotTwoColourable, "hypergraph is not 2-colourable");
  }
  std::vector<int> colour = initial.colouring->colour;
  auto edges = dense_edges(h);
  auto score = [&] {
    std::size_t sum = 0;
    for (const auto& edge : edges) sum += colours_seen(edge, colour);
    return sum;
  };
  packing.progress.push_back(score());

  const auto target = static_cast<int>(k);
  for (;;) {
    auto deficient = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
      return colours_seen(e, colour) < k;
    });
    if (deficient == edges.end()) break;

    std::vector<int> count(k, 0);
    for (int x : *deficient) ++count[colour[x]];
    int p = static_cast<int>(std::find_if(count.begin(), count.end(),
                                          [](int c) { return c >= 2; }) -
                             count.begin());
    int q = static_cast<int>(std::find(count.begin(), count.end(), 0) -
                             count.begin());
    if (p >= target || q >= target) {
      throw Error(ErrorCode::kInternal, "no recolouring pair for a deficient edge");
    }

    std::vector<int> classes;
    for (std::size_t x = 0; x < h.ground.size(); ++x) {
      if (colour[x] == p || colour[x] == q) classes.push_back(h.ground[x]);
    }
    Hypergraph sub = h.induced(classes);
    TwoColourResult local = two_colour(sub);
    if (!local.ok()) {
      throw Error(ErrorCode::kNotTwoColourable,
                  "induced subhypergraph on two colour classes is not "
                  "2-colourable; the input is not balanced");
    }
    for (std::size_t i = 0; i < sub.ground.size(); ++i) {
      auto it = std::lower_bound(h.ground.begin(), h.ground.end(), sub.ground[i]);
      colour[static_cast<std::size_t>(it - h.ground.begin())] =
          local.colouring->colour[i] == 0 ? p : q;
    }

    std::size_t next = score();
    if (next <= packing.progress.back()) {
      throw Error(ErrorCode::kInternal, "recolouring did not increase the score");
    }
    packing.progress.push_back(next);
  }

  packing.transversals.assign(k, {});
  for (std::size_t x = 0; x < h.ground.size(); ++x) {
    packing.transversals[colour[x]].push_back(h.ground[x]);
  }
  for (const auto& t : packing.transversals) {
    if (!h.is_transversal(t)) {
      throw Error(ErrorCode::kInternal, "colour class is not a transversal");
    }
  }
  return packing;
}

Hypergraph dicut_hypergraph(const Digraph& d, const std::vector<Dicut>& cls) {
  if (cls.empty()) throw Error(ErrorCode::kEmptyClass, "class has no dicuts");
  std::vector<int> ground;
  for (const Edge& e : d.edges()) ground.push_back(static_cast<int>(e.id));
  std::vector<std::vector<int>> edges;
  for (const Dicut& b : cls) {
    if (b.edges.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "class contains an empty dicut");
    }
    std::vector<int> edge;
    for (EdgeId e : b.edges) edge.push_back(static_cast<int>(e));
    if (std::find(edges.begin(), edges.end(), edge) == edges.end()) {
      edges.push_back(std::move(edge));
    }
  }
  return Hypergraph::make(std::move(ground), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<int>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> edge;
    std::istringstream fields(line);
    for (std::string field; std::getline(fields, field, ',');) {
      auto begin = field.find_first_not_of(" \t\r");
      auto end = field.find_last_not_of(" \t\r");
      if (begin == std::string::npos) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": empty element");
      }
      int value = 0;
      const char* first = field.data() + begin;
      const char* last = field.data() + end + 1;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": bad element '" +
                        field + "'");
      }
      edge.push_back(value);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_edges(std::move(edges));
}

}  // namespace dijoin
