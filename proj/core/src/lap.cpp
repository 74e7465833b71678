#include "edgefog/lap.hpp"

#include <algorithm>
#include <limits>

namespace edgefog {

CostMatrix::CostMatrix(int n_in, std::vector<double> entries_in)
    : n(n_in), entries(std::move(entries_in)) {
  if (n <= 0) throw DimensionMismatch("cost matrix must be at least 1x1");
  if (entries.size() != static_cast<size_t>(n) * n)
    throw DimensionMismatch("cost matrix must be square");
}

CostMatrix build_processing_matrix(const Instance& inst) {
  std::vector<double> e(static_cast<size_t>(inst.n) * inst.n);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      e[static_cast<size_t>(i) * inst.n + j] =
          inst.job_size[i] / inst.device_power[j];
  return CostMatrix(inst.n, std::move(e));
}

LapResult solve_lap(const CostMatrix& m) {
  const int n = m.n;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Shortest augmenting paths with dual potentials (u over rows, v over
  // columns), one augmentation per row.  Arrays are 1-based; index 0 is the
  // virtual column that hosts the row currently being inserted.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> row_of_col(n + 1, 0);  // matched row per column
  std::vector<int> way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = row_of_col[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  LapResult res;
  res.col_of_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) res.col_of_row[row_of_col[j] - 1] = j - 1;

  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i) terms[i] = m.at(i, res.col_of_row[i]);
  std::sort(terms.begin(), terms.end());
  res.value = 0.0;
  for (double t : terms) res.value += t;
  return res;
}

}  // namespace edgefog
