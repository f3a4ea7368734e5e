#pragma once

// Slow reference implementations used only by the tests. They follow the
// definitions literally and share no code with the library algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "dijoin/digraph.hpp"
#include "dijoin/hypergraph.hpp"

namespace brute {

using namespace dijoin;

inline VertexSet mask_to_set(std::uint32_t mask, std::size_t n) {
  VertexSet s;
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1) s.push_back(static_cast<VertexId>(v));
  }
  return s;
}

/// Every non-trivial vertex set Y with no edge leaving it and at least one
/// edge entering it, in lexicographic order of sorted Y.
inline std::vector<Dicut> dicuts(const Digraph& d, bool include_empty = false) {
  const std::size_t n = d.vertex_count();
  std::vector<Dicut> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool closed = true;
    EdgeSet in;
    for (const Edge& e : d.edges()) {
      bool t = mask >> index(e.tail) & 1;
      bool h = mask >> index(e.head) & 1;
      if (t && !h) closed = false;
      if (!t && h) in.push_back(e.id);
    }
    if (!closed || (in.empty() && !include_empty)) continue;
    out.push_back({in, mask_to_set(mask, n)});
  }
  std::sort(out.begin(), out.end(), [](const Dicut& a, const Dicut& b) {
    return a.in_shore < b.in_shore;
  });
  return out;
}

/// Distinct non-empty dicut edge sets containing no other one properly.
inline std::set<EdgeSet> dibond_edge_sets(const Digraph& d) {
  std::set<EdgeSet> all;
  for (const Dicut& b : dicuts(d)) all.insert(b.edges);
  std::set<EdgeSet> out;
  for (const EdgeSet& b : all) {
    bool minimal = true;
    for (const EdgeSet& other : all) {
      if (other != b && std::includes(b.begin(), b.end(), other.begin(), other.end())) {
        minimal = false;
      }
    }
    if (minimal) out.insert(b);
  }
  return out;
}

inline bool leq(const Bipartition& a, const Bipartition& b) {
  return std::includes(b.x.begin(), b.x.end(), a.x.begin(), a.x.end()) &&
         std::includes(a.y.begin(), a.y.end(), b.y.begin(), b.y.end());
}

/// The four comparisons of the bipartition order, both directions.
inline bool nested(const Bipartition& a, const Bipartition& b) {
  const Bipartition ar{a.y, a.x};
  const Bipartition br{b.y, b.x};
  for (const Bipartition* p : {&a, &ar}) {
    for (const Bipartition* q : {&b, &br}) {
      if (leq(*p, *q) || leq(*q, *p)) return true;
    }
  }
  return false;
}

/// Maximum number of edge sets, each edge e in at most cap[e] of them, that
/// all meet every set in `targets`. Tries every assignment of edges to
/// subsets of slots.
inline std::int64_t max_disjoint_hitting(const std::vector<int>& elements,
                                         const std::vector<std::int64_t>& cap,
                                         const std::vector<std::vector<int>>& targets,
                                         std::int64_t upper) {
  for (std::int64_t k = upper; k >= 1; --k) {
    const std::size_t m = elements.size();
    // Each element takes a subset of the k slots of size <= cap.
    std::vector<std::vector<std::uint32_t>> options(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::uint32_t s = 0; s < (1u << k); ++s) {
        if (std::popcount(s) <= cap[i]) options[i].push_back(s);
      }
    }
    std::vector<std::size_t> at(m, 0);
    while (true) {
      bool ok = true;
      for (const auto& t : targets) {
        std::uint32_t seen = 0;
        for (int x : t) {
          auto it = std::find(elements.begin(), elements.end(), x);
          if (it != elements.end()) seen |= options[it - elements.begin()][at[it - elements.begin()]];
        }
        if (seen != (1u << k) - 1) {
          ok = false;
          break;
        }
      }
      if (ok) return k;
      std::size_t i = 0;
      while (i < m && ++at[i] == options[i].size()) at[i++] = 0;
      if (i == m) break;
    }
  }
  return 0;
}

/// All 2-colourings by enumeration; true iff one is valid.
inline bool two_colourable(const Hypergraph& h) {
  const std::size_t n = h.ground.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& e : h.hyperedges) {
      if (e.size() < 2) continue;
      int ones = 0;
      for (int x : e) {
        auto pos = std::lower_bound(h.ground.begin(), h.ground.end(), x) - h.ground.begin();
        ones += mask >> pos & 1;
      }
      if (ones == 0 || ones == static_cast<int>(e.size())) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace brute
