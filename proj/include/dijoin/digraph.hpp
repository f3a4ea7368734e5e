#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dijoin/types.hpp"

namespace dijoin {

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
};

/// Finite loopless multi-digraph. Vertices are dense indices; edges carry
/// stable ids and are kept sorted by id.
class Digraph {
 public:
  enum class LoopPolicy { kReject, kDrop };

  explicit Digraph(LoopPolicy loops = LoopPolicy::kReject) : loops_(loops) {}

  VertexId add_vertex(std::string name = {});

  /// Adds an edge with the next free id. Returns nullopt if the edge is a
  /// loop and the policy drops loops; throws if the policy rejects them.
  std::optional<EdgeId> add_edge(VertexId tail, VertexId head,
                                 std::string name = {});
  std::optional<EdgeId> add_edge(EdgeId id, VertexId tail, VertexId head,
                                 std::string name = {});

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// One past the largest edge id ever present.
  std::size_t edge_id_bound() const { return slot_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  EdgeSet edge_ids() const;

  std::span<const EdgeId> out_edges(VertexId v) const { return out_[index(v)]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[index(v)]; }

  const std::string& vertex_name(VertexId v) const {
    return vertex_names_[index(v)];
  }
  const std::string& edge_name(EdgeId id) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  LoopPolicy loop_policy() const { return loops_; }

 private:
  LoopPolicy loops_;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_by_name_;
  std::vector<Edge> edges_;
  std::vector<std::string> edge_names_;  // parallel to edges_
  std::vector<int> slot_;                // edge id -> position in edges_, -1
  std::unordered_map<std::string, EdgeId> edge_by_name_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Finitary capacity, defined on every edge of its digraph.
class Capacity {
 public:
  Capacity() = default;
  /// Constant capacity on every edge of `d`.
  explicit Capacity(const Digraph& d, std::int64_t value = 1);

  std::int64_t operator[](EdgeId e) const { return values_.at(index(e)); }
  void set(EdgeId e, std::int64_t value);
  std::int64_t total(const EdgeSet& edges) const;
  bool is_unit(const Digraph& d) const;
  /// Throws unless every edge of `d` has a non-negative value.
  void check_defined_on(const Digraph& d) const;

 private:
  std::vector<std::int64_t> values_;  // indexed by edge id, -1 = undefined
};

struct Bipartition {
  VertexSet x;
  VertexSet y;

  bool trivial() const { return x.empty() || y.empty(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// A directed cut recorded with its in-shore. In a weakly disconnected
/// digraph the in-shore also fixes the side of each untouched component.
struct Dicut {
  EdgeSet edges;
  VertexSet in_shore;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Dicut&, const Dicut&) = default;
};

VertexSet complement(const Digraph& d, const VertexSet& s);
VertexSet out_shore(const Digraph& d, const Dicut& b);
/// (out-shore, in-shore).
Bipartition representation(const Digraph& d, const Dicut& b);

/// E_D(X, Y): edges with one end in X and the other in Y, either direction.
EdgeSet crossing_edges(const Digraph& d, const Bipartition& p);

/// Throws kInternal unless `b` satisfies the directedness invariants on `d`.
void check_dicut(const Digraph& d, const Dicut& b);

std::vector<char> membership(std::size_t n, const VertexSet& s);

}  // namespace dijoin
