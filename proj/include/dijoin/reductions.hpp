#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dijoin/digraph.hpp"
#include "dijoin/oracle.hpp"

namespace dijoin {

/// Capacities replaced by parallel edges: edge e becomes c(e) clones named
/// "<name>#<alpha>". Vertices are unchanged, so class dicuts keep their
/// in-shores.
struct HatResult {
  Digraph graph;
  std::vector<std::vector<EdgeId>> clones;  // by original edge id
  std::vector<EdgeId> origin;               // by hat edge id
  std::vector<Dicut> cls;                   // parallel to the input class

  Dicut map(const Dicut& b) const;
  /// Original edges of a set of hat edges.
  EdgeSet trace(const EdgeSet& hat_edges) const;
  /// Each set containing e takes the smallest clone of e not yet taken.
  /// Throws kInvalidArgument if e is used more than c(e) times.
  std::vector<EdgeSet> lift(const std::vector<EdgeSet>& family) const;
};

struct HatCaps {
  std::int64_t max_clones = 100000;
};

/// Throws kCapExceeded past the clone cap.
HatResult hat_transform(const Digraph& d, const Capacity& c,
                        const std::vector<Dicut>& cls, const HatCaps& caps = {});

/// A vertex v_S for every S ⊆ V with edges v_S -> s (s ∈ S) of capacity 0;
/// original edges keep capacity 1. A dicut B maps to the in-edges of
/// X_B = in-shore ∪ {v_S : S ⊆ in-shore}.
struct TildeResult {
  Digraph graph;
  Capacity capacity;
  std::vector<VertexId> subset_vertex;  // by bitmask over original vertices
  std::vector<Dicut> cls;               // parallel to the input class
  std::size_t original_vertices = 0;

  Dicut map(const Dicut& b) const;
};

inline constexpr std::size_t kMaxTildeVertices = 16;

/// Throws kTooManyVertices for more than 16 vertices.
TildeResult tilde_transform(const Digraph& d, const std::vector<Dicut>& cls);

struct EquivalenceReport {
  WoodallReport direct;
  WoodallReport hat;
  std::optional<WoodallReport> tilde;
  bool agree = false;
};

/// Oracle verdicts on (d, c, cls), on the hat instance and, for at most
/// `max_tilde_vertices` vertices, on the tilde instance of the hat digraph.
EquivalenceReport capacitated_equivalence_check(
    const Digraph& d, const Capacity& c, const std::vector<Dicut>& cls,
    std::size_t max_tilde_vertices = 10, const OracleCaps& caps = {});

}  // namespace dijoin
