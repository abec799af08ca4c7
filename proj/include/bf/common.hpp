#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bf {

using VertexId = std::int32_t;
using Weight = double;

// Sentinel for "no arc / no edge". Never stored as a real weight.
inline constexpr Weight kInf = std::numeric_limits<Weight>::infinity();

inline bool is_present(Weight w) { return w != kInf; }

// Input files or malformed text (CLI exit 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph-structure problems: inconsistent barrier data, disconnected input
// where connectivity is required, invalid forest encodings (CLI exit 3).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bf
