#pragma once

// Reference computations kept apart from the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

inline int rank(std::vector<std::vector<Q>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// HH_n(Q[x]/x^2) from the 2-periodic bimodule resolution
//   A (x) A <- A (x) A <- ...,  maps x(x)1 - 1(x)x and x(x)1 + 1(x)x alternately.
// After tensoring with A over A^e the complex is A <- A <- A <- ... with
// maps 0 (odd n) and multiplication by 2x (even n >= 2).
inline std::map<int, int> dual_numbers_hh(int max_degree) {
  // basis 1, x; left multiplication by x
  const std::vector<std::vector<Q>> lx = {{0, 0}, {1, 0}};
  auto map_at = [&](int n) {  // d_n : C_n -> C_{n-1}
    std::vector<std::vector<Q>> m(2, std::vector<Q>(2, 0));
    const int s = n % 2 ? -1 : 1;  // x(x)1 -/+ 1(x)x, x central
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[i][j] = lx[i][j] + s * lx[i][j];
    return m;
  };
  std::map<int, int> out;
  for (int n = 0; n <= max_degree; ++n) {
    const int ker = n == 0 ? 2 : 2 - rank(map_at(n));
    const int im = rank(map_at(n + 1));
    out[n] = ker - im;
  }
  return out;
}

}  // namespace oracle
