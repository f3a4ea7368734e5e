#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dijoin/digraph.hpp"

namespace dijoin {

/// Finite hypergraph over integer elements. For a dicut hypergraph the
/// elements are edge ids.
struct Hypergraph {
  std::vector<int> ground;                  // sorted, unique
  std::vector<std::vector<int>> hyperedges;  // each sorted, unique, non-empty

  /// Validates and normalises. Hyperedges must be non-empty subsets of ground.
  static Hypergraph make(std::vector<int> ground,
                         std::vector<std::vector<int>> hyperedges);
  /// Ground taken as the union of the hyperedges.
  static Hypergraph from_edges(std::vector<std::vector<int>> hyperedges);

  std::size_t min_edge_size() const;
  /// H[Y]: ground Y, hyperedges h ∩ Y for those that meet Y (duplicates
  /// collapsed).
  Hypergraph induced(const std::vector<int>& subset) const;
  bool is_transversal(const std::vector<int>& sorted_set) const;
};

/// One colour per ground element, in ground order; colours are 0..k-1.
struct Colouring {
  int k = 0;
  std::vector<int> colour;
};

/// True iff no hyperedge of size >= 2 is monochromatic.
bool is_valid_colouring(const Hypergraph& h, const Colouring& c);

/// (x_1, h_1, ..., x_n, h_n, x_1) with hyperedges given by index.
struct BergeCycle {
  std::vector<int> elements;
  std::vector<std::size_t> edges;

  std::size_t length() const { return elements.size(); }
  bool odd() const { return length() % 2 == 1; }
};

/// Structural check of the Berge-cycle conditions.
bool is_berge_cycle(const Hypergraph& h, const BergeCycle& cycle);
/// Some h_i contains a cycle element other than x_i and x_{i+1}.
bool is_improper(const Hypergraph& h, const BergeCycle& cycle);

struct BalanceCaps {
  std::size_t max_ground = 16;
  std::size_t max_edges = 32;
};

struct BalanceVerdict {
  bool balanced = true;
  /// A proper odd Berge-cycle (length >= 3) when not balanced.
  std::optional<BergeCycle> witness;
};

/// Exhaustive search for a proper odd Berge-cycle. Throws kTooLarge past caps.
BalanceVerdict check_balanced_exhaustive(const Hypergraph& h,
                                         const BalanceCaps& caps = {});

struct TwoColourResult {
  std::optional<Colouring> colouring;
  /// Set on failure when the graph of 2-element hyperedges of an induced
  /// subhypergraph contains this odd cycle.
  std::vector<int> odd_cycle;
  /// Set on failure when the neighbours of this element were bichromatic.
  std::optional<int> unextendable;
  /// The constructive elimination failed and exhaustive search found one.
  bool via_fallback = false;

  bool ok() const { return colouring.has_value(); }
};

/// 2-colouring by vertex elimination: peel elements lying in at most one
/// 2-element hyperedge, otherwise remove the lowest non-cut-vertex of the
/// graph of 2-element hyperedges, then colour in reverse. Succeeds on every
/// balanced hypergraph. On failure, small inputs (<= 24 elements) are retried
/// exhaustively before a witness is returned.
TwoColourResult two_colour(const Hypergraph& h);

struct TransversalPacking {
  std::vector<std::vector<int>> transversals;
  /// Sum over hyperedges of the number of colours seen, per iteration of the
  /// recolouring loop (strictly increasing).
  std::vector<std::size_t> progress;
};

/// min |h| pairwise disjoint transversals of a balanced hypergraph. Every
/// ground element ends up in exactly one transversal. Throws
/// kNotTwoColourable if a recolouring step fails (the input is not balanced).
TransversalPacking pack_transversals(const Hypergraph& h);

/// Ground = E(d), one hyperedge per distinct class edge set.
Hypergraph dicut_hypergraph(const Digraph& d, const std::vector<Dicut>& cls);

/// One hyperedge per line, elements separated by commas; '#' starts a comment.
Hypergraph parse_hypergraph(std::string_view text);

}  // namespace dijoin
