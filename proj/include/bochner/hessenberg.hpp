#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace bochner {

/*
 * Determinants of the leading principal submatrices H_0..H_m of an upper
 * Hessenberg matrix, by expanding along the last column:
 *
 *   det H_s = h(s,s) det H_{s-1}
 *           + sum_{j<s} (-1)^{s-j} h(j,s) h(j+1,j) ... h(s,s-1) det H_{j-1}
 *
 * Indices are 1-based; det H_0 = 1. `entry(r, c)` is only queried for
 * r <= c + 1, so entries below the subdiagonal need not be defined.
 * O(m^2) entry products.
 */
template <class T, class Entry>
std::vector<T> hessenberg_minors(int m, Entry&& entry) {
  std::vector<T> det;
  det.reserve(static_cast<std::size_t>(m) + 1);
  det.emplace_back(1);
  for (int s = 1; s <= m; ++s) {
    T acc = entry(s, s) * det[static_cast<std::size_t>(s - 1)];
    T chain(1);
    for (int j = s - 1; j >= 1; --j) {
      chain *= entry(j + 1, j);
      T term = entry(j, s) * chain * det[static_cast<std::size_t>(j - 1)];
      if ((s - j) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    det.push_back(std::move(acc));
  }
  return det;
}

template <class T, class Entry>
T hessenberg_determinant(int m, Entry&& entry) {
  return hessenberg_minors<T>(m, std::forward<Entry>(entry)).back();
}

}  // namespace bochner
