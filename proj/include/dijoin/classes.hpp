#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dijoin/digraph.hpp"

namespace dijoin {

enum class ClassKind { kAll, kDibonds, kMin, kAtomic, kSourceSink };

const char* to_string(ClassKind kind);

/// A class of dicuts: either an explicit list or a symbolic description
/// resolved against a digraph (and a capacity, for kMin).
class DicutClass {
 public:
  static DicutClass of(ClassKind kind) { return DicutClass(kind); }
  static DicutClass of(std::vector<Dicut> dicuts) {
    return DicutClass(std::move(dicuts));
  }

  bool is_symbolic() const { return std::holds_alternative<ClassKind>(value_); }
  std::optional<ClassKind> kind() const;

  /// Non-empty dicuts of `d`. Explicit lists are validated against `d`.
  std::vector<Dicut> resolve(const Digraph& d,
                             const Capacity* capacity = nullptr) const;

 private:
  explicit DicutClass(ClassKind kind) : value_(kind) {}
  explicit DicutClass(std::vector<Dicut> dicuts) : value_(std::move(dicuts)) {}

  std::variant<ClassKind, std::vector<Dicut>> value_;
};

/// One of (X,Y), (Y,X) is comparable with one of (X',Y'), (Y',X') under
/// (X,Y) <= (X',Y') iff X ⊆ X' and Y ⊇ Y'.
bool is_nested_pair(const Bipartition& a, const Bipartition& b);

/// Representations of the class dicuts, in class order, pairwise nested.
/// Only representations that keep every head in the second side are used.
struct NestedRepresentation {
  std::vector<Bipartition> sides;
};

struct NestingCaps {
  std::size_t max_nodes = std::size_t{1} << 22;
};

/// Weakly connected digraphs have one such representation per dicut, so this
/// is a pairwise test. Otherwise the sides of untouched weak components are
/// searched by backtracking. Throws kTooLarge past the node cap.
std::optional<NestedRepresentation> find_nested_representation(
    const Digraph& d, const std::vector<Dicut>& cls,
    const NestingCaps& caps = {});

/// The recorded representations (out-shore, in-shore) cross.
bool crossing(const Digraph& d, const Dicut& a, const Dicut& b);

/// Dicut into in ∩ in'. Throws kEmptyCorner if that intersection is empty.
Dicut meet(const Digraph& d, const Dicut& a, const Dicut& b);
/// Dicut into in ∪ in'. Throws kEmptyCorner if the union is all of V.
Dicut join(const Digraph& d, const Dicut& a, const Dicut& b);

/// For every pair with crossing recorded representations, the class holds
/// dicuts with in-shores in ∩ in' and in ∪ in'.
bool is_corner_closed(const Digraph& d, const std::vector<Dicut>& cls);

struct ClosureCaps {
  std::size_t max_class_size = std::size_t{1} << 16;
};

/// Smallest corner-closed superset; input order first, additions appended in
/// discovery order. Corners with empty edge sets are not added.
std::vector<Dicut> corner_closure(const Digraph& d, std::vector<Dicut> cls,
                                  const ClosureCaps& caps = {});

/// Non-empty dicuts of minimum capacity. Throws kNoDicut if none exists.
std::vector<Dicut> min_dicut_class(const Digraph& d, const Capacity& c);

struct DicutFlags {
  bool atomic = false;
  bool source_sided = false;
  bool sink_sided = false;
  bool source_sink = false;
};

/// Atomic: some representation has a single-vertex side, i.e. the dicut is
/// exactly the edge set at a source or a sink. Source-sided: the in-shore
/// holds no source component; sink-sided: the out-shore holds no sink
/// component.
DicutFlags classify_dicut(const Digraph& d, const Dicut& b);

/// Side with a single vertex in the recorded representation.
bool is_atomic_as_recorded(const Digraph& d, const Dicut& b);

}  // namespace dijoin
