#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace multideal::detail {

std::size_t rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Integer> cofactor_kernel(const IntMatrix& rows) {
  const std::size_t r = rows.size();
  const std::size_t cols = r + 1;
  std::vector<Integer> out(cols);
  for (std::size_t skip = 0; skip < cols; ++skip) {
    IntMatrix minor(r, std::vector<Integer>(r));
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != cols) throw std::logic_error("cofactor_kernel: bad shape");
      for (std::size_t j = 0, k = 0; j < cols; ++j)
        if (j != skip) minor[i][k++] = rows[i][j];
    }
    Integer d = determinant(std::move(minor));
    out[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return out;
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace multideal::detail
