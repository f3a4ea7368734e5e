#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dijoin/classes.hpp"
#include "dijoin/digraph.hpp"
#include "dijoin/hypergraph.hpp"

namespace dijoin {

struct OracleCaps {
  /// Elements with positive multiplicity.
  std::size_t max_elements = 14;
  std::uint64_t max_nodes = std::uint64_t{1} << 34;
};

/// k slots, each meeting every set, where element i lies in at most
/// multiplicity[i] slots. Elements are searched in the given order; a slot
/// is opened only after all lower slots are in use. Returns the slots as
/// element lists, or nullopt if k is infeasible. Throws kCapExceeded.
std::optional<std::vector<std::vector<int>>> find_hitting_slots(
    const std::vector<int>& elements, const std::vector<std::int64_t>& multiplicity,
    const std::vector<std::vector<int>>& sets, std::int64_t k,
    const OracleCaps& caps = {});

struct WoodallReport {
  std::int64_t min_size = 0;
  std::int64_t max_packing = 0;
  bool woodall = false;
  std::vector<EdgeSet> witness;
  /// Number of dijoins found by a constructive algorithm, when one applies.
  std::optional<std::int64_t> constructive_k;
};

/// Largest family of (c-)disjoint class-dijoins by exhaustive search, trying
/// k = min class capacity downwards. Only positive-capacity edges are used.
WoodallReport max_disjoint_dijoins(const Digraph& d, const std::vector<Dicut>& cls,
                                   const Capacity* c = nullptr,
                                   const OracleCaps& caps = {});

/// The oracle plus, for nested classes (unit capacity) and for minimum
/// classes, the constructive packing. Disagreement throws kInternal.
WoodallReport check_woodall(const Digraph& d, const DicutClass& cls,
                            const Capacity* c = nullptr,
                            const OracleCaps& caps = {});

/// Maximum number of pairwise disjoint transversals.
std::vector<std::vector<int>> max_disjoint_transversals(
    const Hypergraph& h, const OracleCaps& caps = {});

}  // namespace dijoin
