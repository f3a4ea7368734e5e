#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dijoin/digraph.hpp"

namespace dijoin {

struct DigraphFile {
  Digraph graph;
  Capacity capacity;
};

/// Line-oriented digraph text:
///
///   # comment
///   vertex <name>
///   edge <id> <tail> <head> [cap=<nonneg-int>]
///
/// Edge ids are names; numeric EdgeIds are assigned in file order. Vertices
/// named on an edge line are declared implicitly. A missing cap means 1.
DigraphFile parse_digraph(std::istream& in);
DigraphFile parse_digraph(std::string_view text);
DigraphFile read_digraph_file(const std::string& path);

/// Inverse of parse_digraph; `cap=` is written only where it differs from 1.
std::string write_digraph(const Digraph& d, const Capacity* capacity = nullptr);

}  // namespace dijoin
