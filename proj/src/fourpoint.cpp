#include "eslab/fourpoint.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace eslab {

double four_point_delta(const std::vector<double>& dist, size_t n) {
  if (dist.size() != n * n) throw std::invalid_argument("bad matrix size");
  auto D = [&](size_t i, size_t j) { return dist[i * n + j]; };
  double best = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l) {
          std::array<double, 3> s{D(i, j) + D(k, l), D(i, k) + D(j, l),
                                  D(i, l) + D(j, k)};
          std::sort(s.begin(), s.end());
          double v = std::max(0.0, (s[2] + s[0] - 2.0 * s[1]) / 2.0);
          best = std::max(best, v);
        }
  return best;
}

} // namespace eslab
