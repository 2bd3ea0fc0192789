#pragma once
// adaptive Dormand-Prince 5(4) for small complex linear systems

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>

namespace eslab {

using cx = std::complex<double>;
using State4 = std::array<cx, 4>;

struct StiffnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// integrates y' = f(t, y) over [0, 1] with local error <= tol per unit t
State4 rk45(const std::function<State4(double, const State4&)>& f, State4 y0,
            double tol);

} // namespace eslab
