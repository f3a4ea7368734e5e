#include "dijoin/reductions.hpp"

#include <algorithm>

#include "dijoin/dicuts.hpp"

namespace dijoin {

Dicut HatResult::map(const Dicut& b) const {
  Dicut out{{}, b.in_shore};
  for (EdgeId e : b.edges) {
    const auto& c = clones.at(index(e));
    out.edges.insert(out.edges.end(), c.begin(), c.end());
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EdgeSet HatResult::trace(const EdgeSet& hat_edges) const {
  EdgeSet out;
  for (EdgeId e : hat_edges) out.push_back(origin.at(index(e)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeSet> HatResult::lift(const std::vector<EdgeSet>& family) const {
  std::vector<std::size_t> next(clones.size(), 0);
  std::vector<EdgeSet> out;
  for (const EdgeSet& f : family) {
    EdgeSet lifted;
    for (EdgeId e : f) {
      const auto& c = clones.at(index(e));
      std::size_t& alpha = next[index(e)];
      if (alpha >= c.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edge used more often than its capacity");
      }
      lifted.push_back(c[alpha++]);
    }
    std::sort(lifted.begin(), lifted.end());
    out.push_back(std::move(lifted));
  }
  return out;
}

HatResult hat_transform(const Digraph& d, const Capacity& c,
                        const std::vector<Dicut>& cls, const HatCaps& caps) {
  c.check_defined_on(d);
  std::int64_t total = 0;
  for (const Edge& e : d.edges()) total += c[e.id];
  if (total > caps.max_clones) {
    throw Error(ErrorCode::kCapExceeded,
                "hat digraph would have " + std::to_string(total) + " edges");
  }

  HatResult r;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    r.graph.add_vertex(d.vertex_name(static_cast<VertexId>(v)));
  }
  r.clones.resize(d.edge_id_bound());
  for (const Edge& e : d.edges()) {
    for (std::int64_t alpha = 0; alpha < c[e.id]; ++alpha) {
      EdgeId clone = *r.graph.add_edge(
          e.tail, e.head, d.edge_name(e.id) + "#" + std::to_string(alpha));
      r.clones[index(e.id)].push_back(clone);
      r.origin.push_back(e.id);
    }
  }
  for (const Dicut& b : cls) r.cls.push_back(r.map(b));
  return r;
}

Dicut TildeResult::map(const Dicut& b) const {
  std::size_t inside = 0;
  for (VertexId v : b.in_shore) inside |= std::size_t{1} << index(v);
  VertexSet x = b.in_shore;
  // Submasks of the in-shore, including the empty set.
  for (std::size_t s = inside;; s = (s - 1) & inside) {
    x.push_back(subset_vertex[s]);
    if (s == 0) break;
  }
  std::sort(x.begin(), x.end());
  return dicut_from_inshore(graph, std::move(x));
}

TildeResult tilde_transform(const Digraph& d, const std::vector<Dicut>& cls) {
  const std::size_t n = d.vertex_count();
  if (n > kMaxTildeVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "tilde construction needs at most " +
                    std::to_string(kMaxTildeVertices) + " vertices");
  }
  TildeResult r;
  r.original_vertices = n;
  for (std::size_t v = 0; v < n; ++v) {
    r.graph.add_vertex(d.vertex_name(static_cast<VertexId>(v)));
  }
  for (const Edge& e : d.edges()) {
    r.graph.add_edge(e.id, e.tail, e.head, d.edge_name(e.id));
  }
  const std::size_t subsets = std::size_t{1} << n;
  r.subset_vertex.resize(subsets);
  for (std::size_t s = 0; s < subsets; ++s) {
    std::string name = "v{";
    for (std::size_t v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      if (name.size() > 2) name += ',';
      name += d.vertex_name(static_cast<VertexId>(v));
    }
    r.subset_vertex[s] = r.graph.add_vertex(name + "}");
  }
  std::vector<EdgeId> added;
  for (std::size_t s = 0; s < subsets; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      const std::string& from = r.graph.vertex_name(r.subset_vertex[s]);
      EdgeId id = *r.graph.add_edge(
          r.subset_vertex[s], static_cast<VertexId>(v),
          from + ">" + d.vertex_name(static_cast<VertexId>(v)));
      added.push_back(id);
    }
  }
  r.capacity = Capacity(r.graph, 1);
  for (EdgeId id : added) r.capacity.set(id, 0);
  for (const Dicut& b : cls) r.cls.push_back(r.map(b));
  return r;
}

EquivalenceReport capacitated_equivalence_check(const Digraph& d, const Capacity& c,
                                                const std::vector<Dicut>& cls,
                                                std::size_t max_tilde_vertices,
                                                const OracleCaps& caps) {
  EquivalenceReport report;
  report.direct = max_disjoint_dijoins(d, cls, &c, caps);
  HatResult hat = hat_transform(d, c, cls);
  report.hat = max_disjoint_dijoins(hat.graph, hat.cls, nullptr, caps);
  report.agree = report.direct.woodall == report.hat.woodall &&
                 report.direct.min_size == report.hat.min_size &&
                 report.direct.max_packing == report.hat.max_packing;
  if (d.vertex_count() <= max_tilde_vertices) {
    TildeResult tilde = tilde_transform(hat.graph, hat.cls);
    report.tilde =
        max_disjoint_dijoins(tilde.graph, tilde.cls, &tilde.capacity, caps);
    report.agree = report.agree && report.tilde->woodall == report.hat.woodall &&
                   report.tilde->min_size == report.hat.min_size &&
                   report.tilde->max_packing == report.hat.max_packing;
  }
  return report;
}

}  // namespace dijoin
