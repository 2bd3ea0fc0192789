#include "eslab/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace eslab {

std::vector<std::complex<double>> poly_roots(const Poly<std::complex<double>>& p) {
  using cx = std::complex<double>;
  std::vector<cx> c = p.c;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  size_t n = c.size() - 1;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (size_t i = 0; i + 1 < n; ++i) A(i + 1, i) = 1.0;
  for (size_t i = 0; i < n; ++i) A(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
  std::vector<cx> roots(n);
  for (size_t i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  // one Newton polish per root
  Poly<cx> d = p.deriv();
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      cx dv = d.eval(r);
      if (std::abs(dv) < 1e-300) break;
      cx step = p.eval(r) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
  }
  return roots;
}

std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double tol) {
  std::vector<std::pair<std::complex<double>, int>> out;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::complex<double> sum = roots[i];
    int cnt = 1;
    used[i] = true;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < tol * (1.0 + std::abs(roots[i]))) {
        sum += roots[j];
        ++cnt;
        used[j] = true;
      }
    }
    out.push_back({sum / double(cnt), cnt});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

} // namespace eslab
