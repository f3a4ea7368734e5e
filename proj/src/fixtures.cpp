#include "dijoin/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <unordered_set>

#include "dijoin/dicuts.hpp"

namespace dijoin {
namespace {

Fixture with_unit_capacity(std::string name, Digraph d, DicutClass cls) {
  Fixture f{std::move(name), std::move(d), {}, std::move(cls)};
  f.capacity = Capacity(f.graph);
  return f;
}

Fixture schrijver() {
  Digraph d;
  VertexId v[6];
  VertexId w[6];
  for (int i = 0; i < 6; ++i) {
    v[i] = d.add_vertex("v" + std::to_string(i));
    w[i] = d.add_vertex("w" + std::to_string(i));
  }
  std::vector<EdgeId> dashed;
  for (int x : {0, 2, 4}) {
    const int y = x + 1;
    const int z = (x + 2) % 6;  // the drawing's node 6 is node 0
    dashed.push_back(*d.add_edge(w[x], v[x]));
    dashed.push_back(*d.add_edge(w[y], v[y]));
    d.add_edge(w[y], v[x]);
    dashed.push_back(*d.add_edge(v[y], v[x]));
    d.add_edge(v[y], v[z]);
    dashed.push_back(*d.add_edge(w[y], w[x]));
    d.add_edge(w[y], w[z]);
  }
  Fixture f{"schrijver", std::move(d), {}, DicutClass::of(ClassKind::kDibonds)};
  f.capacity = Capacity(f.graph);
  for (EdgeId e : dashed) f.capacity.set(e, 0);
  return f;
}

Fixture diamond() {
  Digraph d;
  VertexId a = d.add_vertex("a");
  VertexId b = d.add_vertex("b");
  VertexId c = d.add_vertex("c");
  VertexId t = d.add_vertex("d");
  d.add_edge(a, b, "ab");
  d.add_edge(a, c, "ac");
  d.add_edge(b, t, "bd");
  d.add_edge(c, t, "cd");
  return with_unit_capacity("diamond", std::move(d), DicutClass::of(ClassKind::kAll));
}

Fixture path3() {
  Digraph d;
  VertexId a = d.add_vertex("a");
  VertexId b = d.add_vertex("b");
  VertexId c = d.add_vertex("c");
  d.add_edge(a, b, "e1");
  d.add_edge(b, c, "e2");
  return with_unit_capacity("path3", std::move(d), DicutClass::of(ClassKind::kAll));
}

Fixture parallel2() {
  Digraph d;
  VertexId u = d.add_vertex("u");
  VertexId v = d.add_vertex("v");
  d.add_edge(u, v, "e1");
  d.add_edge(u, v, "e2");
  return with_unit_capacity("parallel2", std::move(d),
                            DicutClass::of(ClassKind::kDibonds));
}

std::optional<int> ladder_size(std::string_view name) {
  if (!name.starts_with("ladder")) return std::nullopt;
  name.remove_prefix(6);
  if (name.starts_with("(") && name.ends_with(")")) {
    name = name.substr(1, name.size() - 2);
  } else if (name.starts_with("-")) {
    name.remove_prefix(1);
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return n;
}

// Canonical form of a small multi-digraph: the smallest adjacency-count
// string over vertex orders that respect an iterated degree refinement.
class Canonicaliser {
 public:
  std::string operator()(int n, const std::vector<std::pair<int, int>>& edges) {
    n_ = n;
    count_.assign(n * n, 0);
    for (auto [t, h] : edges) ++count_[t * n + h];

    std::vector<long long> colour(n, 0);
    for (int round = 0; round <= n; ++round) {
      std::vector<std::vector<long long>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].push_back(colour[v]);
        std::vector<long long> outs, ins;
        for (int u = 0; u < n; ++u) {
          for (int k = 0; k < count_[v * n + u]; ++k) outs.push_back(colour[u]);
          for (int k = 0; k < count_[u * n + v]; ++k) ins.push_back(colour[u]);
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), outs.begin(), outs.end());
        sig[v].push_back(-2);
        sig[v].insert(sig[v].end(), ins.begin(), ins.end());
      }
      std::vector<std::vector<long long>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<long long> next(n);
      for (int v = 0; v < n; ++v) {
        next[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
      }
      if (next == colour) break;
      colour = next;
    }

    // Vertices grouped by colour; orders permute within groups only.
    order_.resize(n);
    for (int v = 0; v < n; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return colour[a] < colour[b]; });
    groups_.clear();
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && colour[order_[j]] == colour[order_[i]]) ++j;
      groups_.push_back({i, j});
      i = j;
    }
    best_.clear();
    search(0);
    return best_;
  }

 private:
  void search(std::size_t g) {
    if (g == groups_.size()) {
      std::string code(n_ * n_, '\0');
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          code[i * n_ + j] = static_cast<char>('0' + count_[order_[i] * n_ + order_[j]]);
        }
      }
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    auto [lo, hi] = groups_[g];
    std::sort(order_.begin() + lo, order_.begin() + hi);
    do {
      search(g + 1);
    } while (std::next_permutation(order_.begin() + lo, order_.begin() + hi));
  }

  int n_ = 0;
  std::vector<int> count_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> groups_;
  std::string best_;
};

struct Shape {
  int n;
  std::vector<std::pair<int, int>> edges;
};

Digraph build(const Shape& s) {
  Digraph d;
  for (int v = 0; v < s.n; ++v) d.add_vertex();
  for (auto [t, h] : s.edges) {
    d.add_edge(static_cast<VertexId>(t), static_cast<VertexId>(h));
  }
  return d;
}

}  // namespace

Digraph ladder(int n) {
  if (n < 1 || n > 12) {
    throw Error(ErrorCode::kInvalidArgument, "ladder size must be in 1..12");
  }
  Digraph d;
  std::vector<VertexId> top, bottom;
  for (int z = 0; z < n; ++z) {
    top.push_back(d.add_vertex("t" + std::to_string(z)));
    bottom.push_back(d.add_vertex("b" + std::to_string(z)));
  }
  for (int z = 0; z + 1 < n; ++z) {
    d.add_edge(top[z], top[z + 1], "top" + std::to_string(z));
  }
  for (int z = 1; z < n; ++z) {
    d.add_edge(bottom[z], bottom[z - 1], "bottom" + std::to_string(z));
  }
  for (int z = 0; z < n; ++z) {
    d.add_edge(top[z], bottom[z], "rung" + std::to_string(z));
  }
  return d;
}

Fixture fixture(std::string_view name) {
  if (name == "schrijver") return schrijver();
  if (name == "diamond") return diamond();
  if (name == "path3") return path3();
  if (name == "parallel2") return parallel2();
  if (auto n = ladder_size(name)) {
    if (*n < 1 || *n > 12) {
      throw Error(ErrorCode::kUnknownFixture, "ladder size must be in 1..12");
    }
    return with_unit_capacity("ladder(" + std::to_string(*n) + ")", ladder(*n),
                              DicutClass::of(ClassKind::kAll));
  }
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture " + std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"schrijver", "diamond", "path3", "parallel2", "ladder(n)"};
}

std::vector<Digraph> exhaustive_catalogue(int max_edges, bool simple_only) {
  Canonicaliser canon;
  std::vector<Shape> level{{1, {}}};
  std::vector<Digraph> out;
  for (int m = 1; m <= max_edges; ++m) {
    std::unordered_set<std::string> seen;
    std::vector<Shape> next;
    auto offer = [&](Shape s) {
      if (simple_only) {
        std::set<std::pair<int, int>> pairs;
        for (auto [t, h] : s.edges) {
          if (!pairs.insert({std::min(t, h), std::max(t, h)}).second) return;
        }
      }
      std::string code = std::to_string(s.n) + ":" + canon(s.n, s.edges);
      if (seen.insert(std::move(code)).second) next.push_back(std::move(s));
    };
    // Every connected digraph arises by adding a non-bridge edge or a
    // pendant edge to a smaller connected one.
    for (const Shape& s : level) {
      for (int t = 0; t < s.n; ++t) {
        for (int h = 0; h < s.n; ++h) {
          if (t == h) continue;
          Shape grown = s;
          grown.edges.push_back({t, h});
          offer(std::move(grown));
        }
        for (int dir = 0; dir < 2; ++dir) {
          Shape grown = s;
          grown.n = s.n + 1;
          grown.edges.push_back(dir ? std::pair{s.n, t} : std::pair{t, s.n});
          offer(std::move(grown));
        }
      }
    }
    for (const Shape& s : next) out.push_back(build(s));
    level = std::move(next);
  }
  return out;
}

std::vector<Digraph> random_instances(std::size_t count, int max_vertices,
                                      int max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  while (out.size() < count) {
    int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    if (n - 1 > max_edges) continue;
    int m = std::uniform_int_distribution<int>(n - 1, max_edges)(rng);
    Shape s{n, {}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(s.edges.size()) < m) {
      int a = pick(rng);
      int b = pick(rng);
      if (a != b) s.edges.push_back({a, b});
    }
    Digraph d = build(s);
    if (is_weakly_connected(d)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace dijoin
