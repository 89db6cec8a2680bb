#pragma once

#include <stdexcept>
#include <vector>

namespace carlitz {

// solution of a linear system over F_p: one particular solution plus a
// kernel basis, or solvable == false
struct FpSolution {
  bool solvable = false;
  std::vector<int> x;
  std::vector<std::vector<int>> kernel;
};

// rows[i] has `cols` entries; rhs has rows.size() entries
inline FpSolution fplin_solve(int p, std::vector<std::vector<int>> rows, std::vector<int> rhs,
                              int cols) {
  auto inv_mod = [p](int a) {
    int t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
      int q = r / nr;
      int tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return ((t % p) + p) % p;
  };
  size_t m = rows.size();
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int col = 0; col < cols && rank < m; ++col) {
    size_t sel = m;
    for (size_t i = rank; i < m; ++i)
      if (rows[i][col] % p != 0) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(rows[rank], rows[sel]);
    std::swap(rhs[rank], rhs[sel]);
    int iv = inv_mod(rows[rank][col]);
    for (int j = col; j < cols; ++j) rows[rank][j] = (rows[rank][j] * iv) % p;
    rhs[rank] = (rhs[rank] * iv) % p;
    for (size_t i = 0; i < m; ++i) {
      if (i == rank) continue;
      int f = ((rows[i][col] % p) + p) % p;
      if (f == 0) continue;
      for (int j = col; j < cols; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
      rhs[i] = ((rhs[i] - f * rhs[rank]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < m; ++i)
    if (((rhs[i] % p) + p) % p != 0) return {};
  FpSolution out;
  out.solvable = true;
  out.x.assign(cols, 0);
  for (size_t i = 0; i < rank; ++i) out.x[pivot_col[i]] = ((rhs[i] % p) + p) % p;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<int> v(cols, 0);
    v[free_col] = 1;
    for (size_t i = 0; i < rank; ++i)
      v[pivot_col[i]] = ((-rows[i][free_col]) % p + p) % p;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace carlitz
