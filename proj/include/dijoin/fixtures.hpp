#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dijoin/classes.hpp"
#include "dijoin/digraph.hpp"

namespace dijoin {

struct Fixture {
  std::string name;
  Digraph graph;
  Capacity capacity;
  DicutClass cls = DicutClass::of(ClassKind::kAll);
};

/// schrijver, diamond, path3, parallel2, ladder(n) (also ladder-n, ladderN)
/// for 1 <= n <= 12. Throws kUnknownFixture.
Fixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

/// n columns of the ladder: top row (z,1) -> (z+1,1), bottom row
/// (z,-1) -> (z-1,-1), rungs (z,1) -> (z,-1).
Digraph ladder(int n);

/// Every weakly connected loopless digraph with 1..max_edges edges, one per
/// isomorphism class, ordered by edge count. `simple_only` drops parallel
/// and antiparallel edges.
std::vector<Digraph> exhaustive_catalogue(int max_edges, bool simple_only = false);

/// Weakly connected digraphs on 2..max_vertices vertices with at most
/// max_edges edges; endpoints and orientation uniform, rejection sampled.
std::vector<Digraph> random_instances(std::size_t count, int max_vertices,
                                      int max_edges, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

}  // namespace dijoin
