#include "dijoin/packing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "dijoin/classes.hpp"
#include "dijoin/dicuts.hpp"
#include "dijoin/hypergraph.hpp"
#include "dijoin/reductions.hpp"

namespace dijoin {
namespace {

std::string edge_list(const EdgeSet& edges) {
  std::string out = "{";
  for (EdgeId e : edges) {
    if (out.size() > 1) out += ',';
    out += std::to_string(index(e));
  }
  return out + "}";
}

void require_verified(const Digraph& d, const Packing& p, const Capacity* c) {
  PackingCheck check = verify_packing(d, p.cls, p, c);
  if (!check.ok) throw Error(ErrorCode::kInternal, "packing failed: " + check.violation);
}

std::vector<EdgeSet> transversal_dijoins(const Digraph& d,
                                         const std::vector<Dicut>& cls) {
  TransversalPacking tp = pack_transversals(dicut_hypergraph(d, cls));
  std::vector<EdgeSet> out;
  for (const auto& t : tp.transversals) {
    EdgeSet f;
    for (int e : t) f.push_back(static_cast<EdgeId>(e));
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t count_non_atomic(const Digraph& d, const std::vector<Dicut>& cls) {
  return static_cast<std::size_t>(std::count_if(
      cls.begin(), cls.end(),
      [&](const Dicut& b) { return !is_atomic_as_recorded(d, b); }));
}

// Class dicuts whose in-shore contains `side` or avoids it, carried over to
// the digraph with `side` identified.
std::vector<Dicut> carried_class(const Contraction& con, const std::vector<Dicut>& cls,
                                 const VertexSet& side) {
  std::vector<Dicut> out;
  for (const Dicut& b : cls) {
    if (is_subset(side, b.in_shore) || !intersects(side, b.in_shore)) {
      out.push_back(con.project(b));
    }
  }
  return out;
}

// Index of the dijoin holding each edge of `b`, asserting a bijection.
std::vector<std::size_t> colours_on(const std::vector<EdgeSet>& dijoins,
                                    const EdgeSet& b) {
  std::vector<std::size_t> out;
  std::vector<char> seen(dijoins.size(), 0);
  for (EdgeId e : b) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < dijoins.size(); ++i) {
      if (!contains(dijoins[i], e)) continue;
      if (at) throw Error(ErrorCode::kInternal, "edge in two dijoins");
      at = i;
    }
    if (!at || seen[*at]) {
      throw Error(ErrorCode::kInternal, "dicut is not colourful in a part");
    }
    seen[*at] = 1;
    out.push_back(*at);
  }
  return out;
}

std::vector<EdgeSet> pack_uniform(const Digraph& d, const std::vector<Dicut>& cls,
                                  std::int64_t m) {
  const std::size_t non_atomic = count_non_atomic(d, cls);
  if (non_atomic == 0) {
    // Single-vertex sides are pairwise nested.
    auto dijoins = transversal_dijoins(d, cls);
    if (static_cast<std::int64_t>(dijoins.size()) != m) {
      throw Error(ErrorCode::kInternal, "atomic class packed to the wrong size");
    }
    return dijoins;
  }

  const Dicut& b = *std::min_element(
      cls.begin(), cls.end(), [&](const Dicut& lhs, const Dicut& rhs) {
        bool la = is_atomic_as_recorded(d, lhs);
        bool ra = is_atomic_as_recorded(d, rhs);
        if (la != ra) return ra;
        return lhs.in_shore < rhs.in_shore;
      });
  const VertexSet& y = b.in_shore;
  const VertexSet x = complement(d, y);

  Contraction d1 = identify(d, y);
  Contraction d2 = identify(d, x);
  std::vector<Dicut> cls1 = carried_class(d1, cls, y);
  std::vector<Dicut> cls2 = carried_class(d2, cls, x);
  if (count_non_atomic(d1.graph, cls1) >= non_atomic ||
      count_non_atomic(d2.graph, cls2) >= non_atomic) {
    throw Error(ErrorCode::kInternal, "contraction did not reduce non-atomic dicuts");
  }

  std::vector<EdgeSet> f1 = pack_uniform(d1.graph, cls1, m);
  std::vector<EdgeSet> f2 = pack_uniform(d2.graph, cls2, m);
  std::vector<std::size_t> i_e = colours_on(f1, b.edges);
  std::vector<std::size_t> j_e = colours_on(f2, b.edges);

  std::vector<EdgeSet> out;
  for (std::size_t t = 0; t < b.edges.size(); ++t) {
    EdgeSet f;
    std::set_union(f1[i_e[t]].begin(), f1[i_e[t]].end(), f2[j_e[t]].begin(),
                   f2[j_e[t]].end(), std::back_inserter(f));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Dicut> dedupe_by_inshore(std::vector<Dicut> cls) {
  std::set<VertexSet> seen;
  std::vector<Dicut> out;
  for (Dicut& b : cls) {
    if (seen.insert(b.in_shore).second) out.push_back(std::move(b));
  }
  return out;
}

struct Component {
  Digraph graph;
  Capacity capacity;
  std::vector<VertexId> original;  // by component vertex
};

Component component_of(const Digraph& d, const Capacity& c, const Components& weak,
                       int label) {
  Component out;
  std::vector<int> local(d.vertex_count(), -1);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (weak.label[v] != label) continue;
    auto vid = static_cast<VertexId>(v);
    local[v] = index(out.graph.add_vertex(d.vertex_name(vid)));
    out.original.push_back(vid);
  }
  for (const Edge& e : d.edges()) {
    if (weak.label[index(e.tail)] != label) continue;
    out.graph.add_edge(e.id, static_cast<VertexId>(local[index(e.tail)]),
                       static_cast<VertexId>(local[index(e.head)]),
                       d.edge_name(e.id));
  }
  out.capacity = Capacity(out.graph);
  for (const Edge& e : out.graph.edges()) out.capacity.set(e.id, c[e.id]);
  return out;
}

}  // namespace

PackingCheck verify_packing(const Digraph& d, const std::vector<Dicut>& cls,
                            const Packing& p, const Capacity* c) {
  Capacity unit(d);
  const Capacity& cap = c ? *c : unit;
  PackingCheck out;
  auto fail = [&out](std::string message) {
    out.ok = false;
    out.violation = std::move(message);
    return out;
  };

  if (p.k != static_cast<std::int64_t>(p.dijoins.size())) {
    return fail("declared k = " + std::to_string(p.k) + " but " +
                std::to_string(p.dijoins.size()) + " dijoins given");
  }
  std::map<EdgeId, std::int64_t> used;
  for (std::size_t i = 0; i < p.dijoins.size(); ++i) {
    for (EdgeId e : p.dijoins[i]) {
      if (!d.has_edge(e)) {
        out.dijoin = i;
        out.edge = e;
        return fail("dijoin " + std::to_string(i) + " uses unknown edge " +
                    std::to_string(index(e)));
      }
      if (++used[e] > cap[e]) {
        out.dijoin = i;
        out.edge = e;
        return fail("edge " + d.edge_name(e) + " over-used by dijoin " +
                    std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < p.dijoins.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (!intersects(p.dijoins[i], cls[j].edges)) {
        out.dijoin = i;
        out.dicut = j;
        return fail("dijoin " + std::to_string(i) + " " +
                    edge_list(p.dijoins[i]) + " misses dicut " +
                    edge_list(cls[j].edges));
      }
    }
  }
  if (cls.empty()) return fail("empty class");
  std::int64_t min_capacity = std::numeric_limits<std::int64_t>::max();
  for (const Dicut& b : cls) min_capacity = std::min(min_capacity, cap.total(b.edges));
  if (min_capacity != p.k) {
    return fail("k = " + std::to_string(p.k) + " but the minimum class capacity is " +
                std::to_string(min_capacity));
  }
  return out;
}

Packing pack_nested(const Digraph& d, const std::vector<Dicut>& cls) {
  if (cls.empty()) throw Error(ErrorCode::kEmptyClass, "empty dicut class");
  if (!find_nested_representation(d, cls)) {
    throw Error(ErrorCode::kNotNested, "class has no nested representation");
  }
  Packing p;
  p.cls = cls;
  p.dijoins = transversal_dijoins(d, cls);
  p.k = static_cast<std::int64_t>(p.dijoins.size());
  require_verified(d, p, nullptr);
  return p;
}

Packing pack_corner_closed_uniform(const Digraph& d, const std::vector<Dicut>& cls,
                                   std::int64_t m) {
  if (cls.empty()) throw Error(ErrorCode::kEmptyClass, "empty dicut class");
  if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  for (const Dicut& b : cls) {
    if (static_cast<std::int64_t>(b.size()) != m) {
      throw Error(ErrorCode::kNotUniform, "class dicut " + edge_list(b.edges) +
                                              " does not have size " +
                                              std::to_string(m));
    }
  }
  std::vector<Dicut> unique = dedupe_by_inshore(cls);
  if (!is_corner_closed(d, unique)) {
    throw Error(ErrorCode::kNotCornerClosed, "class is not corner-closed");
  }
  Packing p;
  p.cls = cls;
  p.dijoins = pack_uniform(d, unique, m);
  p.k = m;
  require_verified(d, p, nullptr);
  return p;
}

Packing pack_min(const Digraph& d, const Capacity& c) {
  std::vector<Dicut> cls = min_dicut_class(d, c);
  const std::int64_t m = c.total(cls.front().edges);
  Packing p;
  p.cls = cls;
  if (m == 0) return p;

  p.dijoins.resize(m);
  Components weak = weak_components(d);
  for (int label = 0; label < weak.count; ++label) {
    Component comp = component_of(d, c, weak, label);
    if (enumerate_dicuts(comp.graph).empty()) continue;
    std::vector<Dicut> local = min_dicut_class(comp.graph, comp.capacity);
    if (comp.capacity.total(local.front().edges) != m) continue;

    std::vector<EdgeSet> dijoins;
    if (comp.capacity.is_unit(comp.graph)) {
      dijoins = pack_uniform(comp.graph, dedupe_by_inshore(local), m);
    } else {
      HatResult hat = hat_transform(comp.graph, comp.capacity, local);
      for (const EdgeSet& f :
           pack_uniform(hat.graph, dedupe_by_inshore(hat.cls), m)) {
        dijoins.push_back(hat.trace(f));
      }
    }
    for (std::int64_t i = 0; i < m; ++i) {
      EdgeSet merged;
      std::set_union(p.dijoins[i].begin(), p.dijoins[i].end(), dijoins[i].begin(),
                     dijoins[i].end(), std::back_inserter(merged));
      p.dijoins[i] = std::move(merged);
    }
  }
  p.k = m;
  require_verified(d, p, &c);
  return p;
}

}  // namespace dijoin
