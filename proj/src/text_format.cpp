#include "dijoin/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dijoin {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

DigraphFile parse_digraph(std::istream& in) {
  Digraph d;
  struct PendingCap {
    EdgeId edge;
    std::int64_t value;
  };
  std::vector<PendingCap> caps;

  auto vertex = [&d](const std::string& name) {
    if (auto v = d.find_vertex(name)) return *v;
    return d.add_vertex(name);
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) fail(line_no, "expected: vertex <name>");
      if (d.find_vertex(tok[1])) fail(line_no, "duplicate vertex " + tok[1]);
      d.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 5) {
        fail(line_no, "expected: edge <id> <tail> <head> [cap=<n>]");
      }
      if (d.find_edge(tok[1])) fail(line_no, "duplicate edge id " + tok[1]);
      std::int64_t cap = 1;
      if (tok.size() == 5) {
        const std::string& c = tok[4];
        if (!c.starts_with("cap=")) fail(line_no, "unknown attribute " + c);
        auto [ptr, ec] = std::from_chars(c.data() + 4, c.data() + c.size(), cap);
        if (ec != std::errc() || ptr != c.data() + c.size() || cap < 0) {
          fail(line_no, "capacity must be a non-negative integer");
        }
      }
      VertexId tail = vertex(tok[2]);
      VertexId head = vertex(tok[3]);
      if (tail == head) fail(line_no, "loop edge " + tok[1]);
      EdgeId id = *d.add_edge(tail, head, tok[1]);
      caps.push_back({id, cap});
    } else {
      fail(line_no, "unknown directive " + tok[0]);
    }
  }
  Capacity capacity(d);
  for (const auto& c : caps) capacity.set(c.edge, c.value);
  return DigraphFile{std::move(d), std::move(capacity)};
}

DigraphFile parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

DigraphFile read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return parse_digraph(in);
}

std::string write_digraph(const Digraph& d, const Capacity* capacity) {
  std::ostringstream out;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    out << "vertex " << d.vertex_name(static_cast<VertexId>(v)) << '\n';
  }
  for (const Edge& e : d.edges()) {
    out << "edge " << d.edge_name(e.id) << ' ' << d.vertex_name(e.tail) << ' '
        << d.vertex_name(e.head);
    if (capacity && (*capacity)[e.id] != 1) {
      out << " cap=" << (*capacity)[e.id];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dijoin
