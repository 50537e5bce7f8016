#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "tokslide/error.hpp"

namespace tokslide {

using Cost = std::int64_t;

// Marks a forbidden pairing.
inline constexpr Cost kForbidden = std::numeric_limits<Cost>::max();

// Largest finite entry accepted; keeps every partial sum far from overflow.
inline constexpr Cost kMaxFiniteCost = Cost{1} << 32;

class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, Cost fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cost at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Cost value);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cost> data_;
};

struct Assignment {
  // (row, col) pairs sorted by row.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Cost total = 0;
};

class InfeasibleAssignment : public Error {
 public:
  using Error::Error;
};

/// Minimum-cost assignment saturating the smaller side (Hungarian method with
/// potentials, O(min^2 * max)). Throws InfeasibleAssignment when every
/// saturating assignment uses a forbidden entry, and InputError when either
/// side is empty.
Assignment min_cost_assignment(const CostMatrix& costs);

}  // namespace tokslide
