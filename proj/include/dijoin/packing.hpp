#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dijoin/digraph.hpp"

namespace dijoin {

/// Dijoins for a class, with the target count k (the minimum class
/// capacity). Dijoin i is colour i in the edge colouring view.
struct Packing {
  std::vector<EdgeSet> dijoins;
  std::vector<Dicut> cls;
  std::int64_t k = 0;
};

struct PackingCheck {
  bool ok = true;
  std::string violation;
  std::optional<std::size_t> dijoin;
  std::optional<std::size_t> dicut;  // index into the class
  std::optional<EdgeId> edge;
};

/// Disjointness (c-disjointness with a capacity), that every dijoin meets
/// every class dicut, and that k equals both the dijoin count and the
/// minimum class capacity. Reports the first violation.
PackingCheck verify_packing(const Digraph& d, const std::vector<Dicut>& cls,
                            const Packing& p, const Capacity* c = nullptr);

/// Packs a nested class through its dicut hypergraph. Throws kNotNested,
/// kEmptyClass.
Packing pack_nested(const Digraph& d, const std::vector<Dicut>& cls);

/// Packs a corner-closed class whose dicuts all have m edges, by contracting
/// the sides of non-atomic dicuts. Throws kNotUniform, kNotCornerClosed,
/// kEmptyClass.
Packing pack_corner_closed_uniform(const Digraph& d, const std::vector<Dicut>& cls,
                                   std::int64_t m);

/// c-disjoint dijoins for the class of minimum-capacity dicuts, as many as
/// the minimum capacity. A minimum of 0 gives the empty packing. Throws
/// kNoDicut.
Packing pack_min(const Digraph& d, const Capacity& c);

}  // namespace dijoin
