#include "acm/linalg.hpp"

namespace acm {

std::vector<int> row_reduce(FpMatrix& m, int cols, const PrimeField& k) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Coeff inv = k.inv(m[row][static_cast<std::size_t>(c)]);
    for (auto& x : m[row]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      Coeff f = m[i][static_cast<std::size_t>(c)];
      if (i == row || f == 0) continue;
      for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) {
        m[i][j] = k.sub(m[i][j], k.mul(f, m[row][j]));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int rank(FpMatrix m, int cols, const PrimeField& k) {
  return static_cast<int>(row_reduce(m, cols, k).size());
}

FpMatrix nullspace(FpMatrix m, int cols, const PrimeField& k) {
  std::vector<int> pivots = row_reduce(m, cols, k);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  FpMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Coeff> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = k.neg(m[r][static_cast<std::size_t>(free)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace acm
