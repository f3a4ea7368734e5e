#include "dijoin/classes.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dijoin/dicuts.hpp"

namespace dijoin {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::kAll: return "all";
    case ClassKind::kDibonds: return "dibonds";
    case ClassKind::kMin: return "min";
    case ClassKind::kAtomic: return "atomic";
    case ClassKind::kSourceSink: return "source-sink";
  }
  return "unknown";
}

std::optional<ClassKind> DicutClass::kind() const {
  if (const auto* k = std::get_if<ClassKind>(&value_)) return *k;
  return std::nullopt;
}

std::vector<Dicut> DicutClass::resolve(const Digraph& d,
                                       const Capacity* capacity) const {
  if (const auto* explicit_list = std::get_if<std::vector<Dicut>>(&value_)) {
    std::vector<Dicut> out;
    for (const Dicut& b : *explicit_list) {
      Dicut rebuilt = dicut_from_inshore(d, b.in_shore);
      if (rebuilt.edges.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "class contains an empty dicut");
      }
      if (!b.edges.empty() && rebuilt.edges != b.edges) {
        throw Error(ErrorCode::kInvalidArgument,
                    "dicut edges disagree with its in-shore");
      }
      out.push_back(std::move(rebuilt));
    }
    return out;
  }

  switch (std::get<ClassKind>(value_)) {
    case ClassKind::kAll:
      return enumerate_dicuts(d);
    case ClassKind::kDibonds:
      return enumerate_dibonds(d);
    case ClassKind::kMin:
      return min_dicut_class(d, capacity ? *capacity : Capacity(d));
    case ClassKind::kAtomic:
    case ClassKind::kSourceSink: {
      const bool atomic = std::get<ClassKind>(value_) == ClassKind::kAtomic;
      std::vector<Dicut> out;
      for (Dicut& b : enumerate_dicuts(d)) {
        DicutFlags f = classify_dicut(d, b);
        if (atomic ? f.atomic : f.source_sink) out.push_back(std::move(b));
      }
      return out;
    }
  }
  return {};
}

bool is_nested_pair(const Bipartition& a, const Bipartition& b) {
  auto ground = [](const Bipartition& p) {
    VertexSet all = p.x;
    all.insert(all.end(), p.y.begin(), p.y.end());
    std::sort(all.begin(), all.end());
    return all;
  };
  if (ground(a) != ground(b)) {
    throw Error(ErrorCode::kMismatchedVertexSets,
                "bipartitions of different vertex sets");
  }
  // Each of the four comparisons reduces to one empty corner.
  return !intersects(a.x, b.y) || !intersects(a.y, b.x) ||
         !intersects(a.y, b.y) || !intersects(a.x, b.x);
}

std::optional<NestedRepresentation> find_nested_representation(
    const Digraph& d, const std::vector<Dicut>& cls, const NestingCaps& caps) {
  NestedRepresentation rep;
  Components weak = weak_components(d);
  if (weak.count <= 1) {
    for (const Dicut& b : cls) rep.sides.push_back(representation(d, b));
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!is_nested_pair(rep.sides[i], rep.sides[j])) return std::nullopt;
      }
    }
    return rep;
  }

  // Per dicut: the forced part of the in-shore (split components) and the
  // components that may sit on either side.
  struct Choice {
    VertexSet forced_in;
    std::vector<int> free;
    std::size_t recorded = 0;  // bitmask over `free`
  };
  std::vector<std::vector<VertexId>> members(weak.count);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    members[weak.label[v]].push_back(static_cast<VertexId>(v));
  }
  std::vector<Choice> choices;
  for (const Dicut& b : cls) {
    auto in_y = membership(d.vertex_count(), b.in_shore);
    Choice c;
    for (int comp = 0; comp < weak.count; ++comp) {
      std::size_t inside = 0;
      for (VertexId v : members[comp]) inside += in_y[index(v)] ? 1 : 0;
      if (inside == 0 || inside == members[comp].size()) {
        if (inside != 0) c.recorded |= std::size_t{1} << c.free.size();
        c.free.push_back(comp);
      } else {
        for (VertexId v : members[comp]) {
          if (in_y[index(v)]) c.forced_in.push_back(v);
        }
      }
    }
    if (c.free.size() >= 8 * sizeof(std::size_t) - 1) {
      throw Error(ErrorCode::kTooLarge, "too many weak components");
    }
    choices.push_back(std::move(c));
  }

  auto build = [&](const Choice& c, std::size_t mask) {
    VertexSet y = c.forced_in;
    for (std::size_t i = 0; i < c.free.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        y.insert(y.end(), members[c.free[i]].begin(), members[c.free[i]].end());
      }
    }
    std::sort(y.begin(), y.end());
    return Bipartition{complement(d, y), std::move(y)};
  };

  std::size_t nodes = 0;
  rep.sides.resize(cls.size());
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == cls.size()) return true;
    const Choice& c = choices[i];
    const std::size_t options = std::size_t{1} << c.free.size();
    for (std::size_t t = 0; t < options; ++t) {
      if (++nodes > caps.max_nodes) {
        throw Error(ErrorCode::kTooLarge, "nested representation search cap");
      }
      Bipartition p = build(c, c.recorded ^ t);
      if (p.trivial()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = is_nested_pair(rep.sides[j], p);
      }
      if (!ok) continue;
      rep.sides[i] = std::move(p);
      if (place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return rep;
}

bool crossing(const Digraph& d, const Dicut& a, const Dicut& b) {
  return !is_nested_pair(representation(d, a), representation(d, b));
}

Dicut meet(const Digraph& d, const Dicut& a, const Dicut& b) {
  VertexSet y;
  std::set_intersection(a.in_shore.begin(), a.in_shore.end(),
                        b.in_shore.begin(), b.in_shore.end(),
                        std::back_inserter(y));
  if (y.empty()) throw Error(ErrorCode::kEmptyCorner, "in-shores are disjoint");
  return dicut_from_inshore(d, std::move(y));
}

Dicut join(const Digraph& d, const Dicut& a, const Dicut& b) {
  VertexSet y;
  std::set_union(a.in_shore.begin(), a.in_shore.end(), b.in_shore.begin(),
                 b.in_shore.end(), std::back_inserter(y));
  if (y.size() == d.vertex_count()) {
    throw Error(ErrorCode::kEmptyCorner, "out-shores are disjoint");
  }
  return dicut_from_inshore(d, std::move(y));
}

bool is_corner_closed(const Digraph& d, const std::vector<Dicut>& cls) {
  std::set<VertexSet> shores;
  for (const Dicut& b : cls) shores.insert(b.in_shore);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      if (!crossing(d, cls[i], cls[j])) continue;
      if (!shores.contains(meet(d, cls[i], cls[j]).in_shore) ||
          !shores.contains(join(d, cls[i], cls[j]).in_shore)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Dicut> corner_closure(const Digraph& d, std::vector<Dicut> cls,
                                  const ClosureCaps& caps) {
  std::set<VertexSet> shores;
  for (const Dicut& b : cls) shores.insert(b.in_shore);
  // Pairs (i, j) with j < done are already processed.
  for (std::size_t done = 0; done < cls.size(); ++done) {
    for (std::size_t i = 0; i < done; ++i) {
      if (!crossing(d, cls[i], cls[done])) continue;
      for (Dicut corner : {meet(d, cls[i], cls[done]), join(d, cls[i], cls[done])}) {
        if (corner.edges.empty() || shores.contains(corner.in_shore)) continue;
        if (cls.size() >= caps.max_class_size) {
          throw Error(ErrorCode::kCapExceeded, "corner closure exceeds cap");
        }
        shores.insert(corner.in_shore);
        cls.push_back(std::move(corner));
      }
    }
  }
  return cls;
}

std::vector<Dicut> min_dicut_class(const Digraph& d, const Capacity& c) {
  c.check_defined_on(d);
  std::vector<Dicut> all = enumerate_dicuts(d);
  if (all.empty()) throw Error(ErrorCode::kNoDicut, "digraph has no non-empty dicut");
  std::int64_t best = c.total(all.front().edges);
  for (const Dicut& b : all) best = std::min(best, c.total(b.edges));
  std::vector<Dicut> out;
  for (Dicut& b : all) {
    if (c.total(b.edges) == best) out.push_back(std::move(b));
  }
  return out;
}

bool is_atomic_as_recorded(const Digraph& d, const Dicut& b) {
  return b.in_shore.size() == 1 || b.in_shore.size() + 1 == d.vertex_count();
}

DicutFlags classify_dicut(const Digraph& d, const Dicut& b) {
  DicutFlags flags;
  for (std::size_t v = 0; v < d.vertex_count() && !b.edges.empty(); ++v) {
    auto vid = static_cast<VertexId>(v);
    auto outs = d.out_edges(vid);
    auto ins = d.in_edges(vid);
    if (outs.size() + ins.size() != b.edges.size()) continue;
    EdgeSet incident(outs.begin(), outs.end());
    incident.insert(incident.end(), ins.begin(), ins.end());
    std::sort(incident.begin(), incident.end());
    if (incident == b.edges) {
      flags.atomic = true;
      break;
    }
  }

  Components scc = strong_components(d);
  std::vector<char> has_in(scc.count, 0), has_out(scc.count, 0);
  for (const Edge& e : d.edges()) {
    int a = scc.label[index(e.tail)];
    int h = scc.label[index(e.head)];
    if (a != h) {
      has_out[a] = 1;
      has_in[h] = 1;
    }
  }
  // Dicuts never split a strong component, so one member decides.
  auto in_y = membership(d.vertex_count(), b.in_shore);
  bool source_in_y = false;
  bool sink_in_x = false;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    int comp = scc.label[v];
    if (!has_in[comp] && in_y[v]) source_in_y = true;
    if (!has_out[comp] && !in_y[v]) sink_in_x = true;
  }
  flags.source_sided = !source_in_y;
  flags.sink_sided = !sink_in_x;
  flags.source_sink = flags.source_sided || flags.sink_sided;
  return flags;
}

}  // namespace dijoin
