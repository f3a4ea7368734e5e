#include "dijoin/digraph.hpp"

#include <algorithm>

namespace dijoin {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotADicut: return "NotADicut";
    case ErrorCode::kNotBridgeless: return "NotBridgeless";
    case ErrorCode::kNotWeaklyConnected: return "NotWeaklyConnected";
    case ErrorCode::kNoDicut: return "NoDicut";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotTwoColourable: return "NotTwoColourable";
    case ErrorCode::kMismatchedVertexSets: return "MismatchedVertexSets";
    case ErrorCode::kEmptyCorner: return "EmptyCorner";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kNotUniform: return "NotUniform";
    case ErrorCode::kNotCornerClosed: return "NotCornerClosed";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

VertexId Digraph::add_vertex(std::string name) {
  auto v = static_cast<VertexId>(vertex_names_.size());
  if (name.empty()) name = "v" + std::to_string(index(v));
  if (vertex_by_name_.contains(name)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vertex name " + name);
  }
  vertex_by_name_.emplace(name, v);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

std::optional<EdgeId> Digraph::add_edge(VertexId tail, VertexId head,
                                        std::string name) {
  return add_edge(static_cast<EdgeId>(slot_.size()), tail, head,
                  std::move(name));
}

std::optional<EdgeId> Digraph::add_edge(EdgeId id, VertexId tail,
                                        VertexId head, std::string name) {
  if (index(tail) >= vertex_count() || index(head) >= vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  if (static_cast<int>(id) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative edge id");
  }
  if (has_edge(id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge id " + std::to_string(index(id)));
  }
  if (tail == head) {
    if (loops_ == LoopPolicy::kDrop) return std::nullopt;
    throw Error(ErrorCode::kInvalidArgument,
                "loop at vertex " + vertex_name(tail));
  }
  if (name.empty()) name = "e" + std::to_string(index(id));
  if (edge_by_name_.contains(name)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate edge name " + name);
  }
  if (index(id) >= slot_.size()) slot_.resize(index(id) + 1, -1);

  auto pos = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  auto offset = pos - edges_.begin();
  edges_.insert(pos, Edge{id, tail, head});
  edge_names_.insert(edge_names_.begin() + offset, name);
  for (std::size_t i = static_cast<std::size_t>(offset); i < edges_.size();
       ++i) {
    slot_[index(edges_[i].id)] = static_cast<int>(i);
  }
  edge_by_name_.emplace(std::move(name), id);

  auto insert_sorted = [](std::vector<EdgeId>& list, EdgeId e) {
    list.insert(std::lower_bound(list.begin(), list.end(), e), e);
  };
  insert_sorted(out_[index(tail)], id);
  insert_sorted(in_[index(head)], id);
  return id;
}

bool Digraph::has_edge(EdgeId id) const {
  return index(id) < slot_.size() && slot_[index(id)] >= 0;
}

const Edge& Digraph::edge(EdgeId id) const {
  if (!has_edge(id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge with id " + std::to_string(index(id)));
  }
  return edges_[static_cast<std::size_t>(slot_[index(id)])];
}

const std::string& Digraph::edge_name(EdgeId id) const {
  edge(id);
  return edge_names_[static_cast<std::size_t>(slot_[index(id)])];
}

EdgeSet Digraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_by_name_.find(std::string(name));
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Digraph::find_edge(std::string_view name) const {
  auto it = edge_by_name_.find(std::string(name));
  if (it == edge_by_name_.end()) return std::nullopt;
  return it->second;
}

Capacity::Capacity(const Digraph& d, std::int64_t value)
    : values_(d.edge_id_bound(), -1) {
  if (value < 0) throw Error(ErrorCode::kInvalidArgument, "negative capacity");
  for (const Edge& e : d.edges()) values_[index(e.id)] = value;
}

void Capacity::set(EdgeId e, std::int64_t value) {
  if (value < 0) throw Error(ErrorCode::kInvalidArgument, "negative capacity");
  if (index(e) >= values_.size()) values_.resize(index(e) + 1, -1);
  values_[index(e)] = value;
}

std::int64_t Capacity::total(const EdgeSet& edges) const {
  std::int64_t sum = 0;
  for (EdgeId e : edges) sum += (*this)[e];
  return sum;
}

bool Capacity::is_unit(const Digraph& d) const {
  return std::all_of(d.edges().begin(), d.edges().end(),
                     [&](const Edge& e) { return (*this)[e.id] == 1; });
}

void Capacity::check_defined_on(const Digraph& d) const {
  for (const Edge& e : d.edges()) {
    if (index(e.id) >= values_.size() || values_[index(e.id)] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "capacity undefined on edge " + d.edge_name(e.id));
    }
  }
}

std::vector<char> membership(std::size_t n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (VertexId v : s) in[index(v)] = 1;
  return in;
}

VertexSet complement(const Digraph& d, const VertexSet& s) {
  VertexSet out;
  auto it = s.begin();
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    auto v = static_cast<VertexId>(i);
    if (it != s.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

VertexSet out_shore(const Digraph& d, const Dicut& b) {
  return complement(d, b.in_shore);
}

Bipartition representation(const Digraph& d, const Dicut& b) {
  return Bipartition{out_shore(d, b), b.in_shore};
}

EdgeSet crossing_edges(const Digraph& d, const Bipartition& p) {
  auto in_y = membership(d.vertex_count(), p.y);
  auto in_x = membership(d.vertex_count(), p.x);
  EdgeSet result;
  for (const Edge& e : d.edges()) {
    if ((in_x[index(e.tail)] && in_y[index(e.head)]) ||
        (in_y[index(e.tail)] && in_x[index(e.head)])) {
      result.push_back(e.id);
    }
  }
  return result;
}

void check_dicut(const Digraph& d, const Dicut& b) {
  auto in_y = membership(d.vertex_count(), b.in_shore);
  EdgeSet expected;
  for (const Edge& e : d.edges()) {
    bool tail_in = in_y[index(e.tail)];
    bool head_in = in_y[index(e.head)];
    if (tail_in && !head_in) {
      throw Error(ErrorCode::kInternal,
                  "edge " + d.edge_name(e.id) + " leaves the in-shore");
    }
    if (!tail_in && head_in) expected.push_back(e.id);
  }
  if (expected != b.edges) {
    throw Error(ErrorCode::kInternal, "dicut edges do not match its in-shore");
  }
}

}  // namespace dijoin
