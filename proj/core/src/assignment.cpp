#include "tokslide/assignment.hpp"

#include <algorithm>
#include <string>

namespace tokslide {

void CostMatrix::set(std::size_t r, std::size_t c, Cost value) {
  if (value < 0) throw InputError("negative assignment cost");
  if (value != kForbidden && value > kMaxFiniteCost) throw InputError("assignment cost too large");
  data_.at(r * cols_ + c) = value;
}

namespace {

// Rows <= cols. Forbidden entries are replaced by a penalty larger than any
// sum of finite entries, so the optimum avoids them whenever possible.
Assignment solve_wide(std::size_t n, std::size_t m, const std::vector<Cost>& a, Cost penalty) {
  auto cost = [&](std::size_t i, std::size_t j) {
    Cost c = a[(i - 1) * m + (j - 1)];
    return c == kForbidden ? penalty : c;
  };
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> u(n + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Cost> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      Cost delta = kInf;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Cost cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment out;
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) out.pairs.emplace_back(p[j] - 1, j - 1);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace

Assignment min_cost_assignment(const CostMatrix& costs) {
  const std::size_t rows = costs.rows();
  const std::size_t cols = costs.cols();
  if (rows == 0 || cols == 0) throw InputError("assignment needs at least one row and one column");

  const bool transpose = rows > cols;
  const std::size_t n = transpose ? cols : rows;
  const std::size_t m = transpose ? rows : cols;
  std::vector<Cost> a(n * m);
  Cost finite_sum = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Cost x = costs.at(r, c);
      if (x != kForbidden) finite_sum += x;
      if (transpose) {
        a[c * m + r] = x;
      } else {
        a[r * m + c] = x;
      }
    }
  }
  const Cost penalty = finite_sum + 1;

  Assignment result = solve_wide(n, m, a, penalty);
  if (transpose) {
    for (auto& pr : result.pairs) std::swap(pr.first, pr.second);
    std::sort(result.pairs.begin(), result.pairs.end());
  }
  for (const auto& [r, c] : result.pairs) {
    Cost x = costs.at(r, c);
    if (x == kForbidden) {
      throw InfeasibleAssignment("no saturating assignment avoids forbidden pairs");
    }
    result.total += x;
  }
  return result;
}

}  // namespace tokslide
