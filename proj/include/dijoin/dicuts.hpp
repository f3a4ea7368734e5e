#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dijoin/digraph.hpp"

namespace dijoin {

/// Component label per vertex, labels numbered by smallest member.
struct Components {
  std::vector<int> label;
  int count = 0;
};

Components weak_components(const Digraph& d);
/// Strongly connected components, labels numbered by smallest member.
Components strong_components(const Digraph& d);
bool is_weakly_connected(const Digraph& d);
bool is_acyclic(const Digraph& d);

struct EnumerateOptions {
  /// Also report dicuts whose edge set is empty (weakly disconnected input).
  bool include_empty = false;
  /// Keep only the first in-shore for each distinct edge set.
  bool dedupe_by_edges = false;
  /// Hard limit on the number of out-closed sets visited.
  std::size_t max_closed_sets = std::size_t{1} << 20;
};

/// Every dicut of `d`, one per out-closed non-trivial in-shore, ordered
/// lexicographically by sorted in-shore.
std::vector<Dicut> enumerate_dicuts(const Digraph& d,
                                    const EnumerateOptions& options = {});

/// Minimal non-empty dicuts, one representative per edge set.
std::vector<Dicut> enumerate_dibonds(const Digraph& d,
                                     const EnumerateOptions& options = {});

bool is_dibond(const Digraph& d, const Dicut& b);

/// The dicut with in-shore `y`. Throws kNotADicut if an edge leaves `y`.
Dicut dicut_from_inshore(const Digraph& d, VertexSet y);

/// Result of identifying groups of vertices: the contracted digraph keeps the
/// ids of every surviving edge; loops are deleted.
struct Contraction {
  Digraph graph{Digraph::LoopPolicy::kDrop};
  /// Original vertex -> contracted vertex.
  std::vector<VertexId> projection;

  VertexSet project(const VertexSet& s) const;
  /// Carries a dicut of the original digraph over to the contracted one. The
  /// caller guarantees no class of the projection is split by its in-shore.
  Dicut project(const Dicut& b) const;
};

/// Identifies vertices with equal `label`; contracted vertices are numbered
/// by smallest member and named by joining member names with '+'.
Contraction contract(const Digraph& d, const std::vector<int>& label);

/// Identifies all vertices of `s` into one.
Contraction identify(const Digraph& d, const VertexSet& s);

/// D / ≡_cls: identifies vertices that no dicut of `cls` separates.
Contraction quotient(const Digraph& d, const std::vector<Dicut>& cls);

struct RobbinsDijoins {
  EdgeSet agree;
  EdgeSet disagree;
};

/// Splits E(d) by a strongly connected orientation of the underlying
/// multigraph. Both halves meet every non-empty dicut.
RobbinsDijoins robbins_two_dijoins(const Digraph& d);

/// Bridges of the underlying multigraph.
EdgeSet bridges(const Digraph& d);

}  // namespace dijoin
