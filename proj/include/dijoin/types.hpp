#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dijoin {

/// Dense vertex index of a Digraph. Contraction renumbers vertices.
enum class VertexId : int {};
/// Edge identifier. Stable under contraction and vertex identification.
enum class EdgeId : int {};

constexpr std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(EdgeId e) { return static_cast<std::size_t>(e); }

/// Sorted, duplicate-free.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free.
using EdgeSet = std::vector<EdgeId>;

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kNotADicut,
  kNotBridgeless,
  kNotWeaklyConnected,
  kNoDicut,
  kEmptyClass,
  kTooLarge,
  kNotTwoColourable,
  kMismatchedVertexSets,
  kEmptyCorner,
  kNotNested,
  kNotUniform,
  kNotCornerClosed,
  kTooManyVertices,
  kCapExceeded,
  kUnknownFixture,
  kInternal,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Sorted-vector set helpers shared across modules.
template <typename T>
bool intersects(const std::vector<T>& a, const std::vector<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

template <typename T>
bool is_subset(const std::vector<T>& a, const std::vector<T>& b) {
  auto j = b.begin();
  for (const T& x : a) {
    while (j != b.end() && *j < x) ++j;
    if (j == b.end() || *j != x) return false;
    ++j;
  }
  return true;
}

template <typename T>
bool contains(const std::vector<T>& sorted, const T& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return it != sorted.end() && *it == x;
}

}  // namespace dijoin
