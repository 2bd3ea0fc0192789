#pragma once
// four-point hyperbolicity defect of a finite metric sample

#include <vector>

namespace eslab {

// max over quadruples of the clamped excess of the largest pair-sum
// over the middle one, halved.  dist is a symmetric n x n matrix (row-major).
double four_point_delta(const std::vector<double>& dist, size_t n);

} // namespace eslab
