#include "eslab/moebius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eslab {

static constexpr double kParabolicTol = 1e-8;

Moebius Moebius::normalized() const {
  cx s = std::sqrt(det());
  if (s == cx{0}) throw std::domain_error("singular matrix");
  return Moebius{a / s, b / s, c / s, d / s};
}

cx Moebius::boundary(cx z) const {
  cx den = c * z + d;
  if (den == cx{0}) return cx{std::numeric_limits<double>::infinity(), 0.0};
  return (a * z + b) / den;
}

Pt3 Moebius::apply(const Pt3& p) const {
  // closed form for the Poincare extension of z -> (az+b)/(cz+d), det = 1
  cx w = c * p.z + d;
  double D = std::norm(w) + std::norm(c) * p.t * p.t;
  cx znew = ((a * p.z + b) * std::conj(w) + a * std::conj(c) * p.t * p.t) / D;
  return Pt3{znew, p.t / D};
}

Moebius identity() { return Moebius{}; }

Moebius parabolic_translation(cx c) { return Moebius{1, c, 0, 1}; }

Moebius diagonal(cx lambda) { return Moebius{lambda, 0, 0, cx{1} / lambda}; }

Moebius from_trace_axis(cx tr, cx p, cx q) {
  // conjugate diag(lambda, 1/lambda) by the map sending 0 -> p, inf -> q
  cx disc = std::sqrt(tr * tr - 4.0);
  cx lam = (tr + disc) / 2.0;
  if (std::abs(lam) < 1.0) lam = (tr - disc) / 2.0;
  cx s = std::sqrt(q - p);
  Moebius conj{q / s, p / s, cx{1} / s, cx{1} / s}; // 0 -> p, inf -> q, det 1
  return (conj * diagonal(lam) * conj.inverse()).normalized();
}

Classification classify(const Moebius& m) {
  Classification out;
  cx t2 = m.tr() * m.tr(); // sign-stable under -I
  double abstr = std::sqrt(std::abs(t2));
  out.near_parabolic = std::abs(abstr - 2.0) < kParabolicTol;

  bool real_t2 = std::abs(t2.imag()) < 1e-14;
  if (out.near_parabolic) {
    // resolution limit: cannot separate parabolic from nearly so
    cx t = std::sqrt(t2);
    if (std::abs(m.b) < 1e-14 && std::abs(m.c) < 1e-14 &&
        std::abs(m.a - m.d) < 1e-14)
      out.kind = IsomClass::Identity;
    else
      out.kind = IsomClass::Parabolic;
    (void)t;
  } else if (real_t2 && t2.real() >= 0.0 && t2.real() < 4.0) {
    out.kind = IsomClass::Elliptic;
    double c = std::sqrt(t2.real()) / 2.0;
    out.rotation_angle = 2.0 * std::acos(std::min(1.0, c));
  } else {
    out.kind = IsomClass::Loxodromic;
    cx tr = std::sqrt(t2);
    cx disc = std::sqrt(t2 - 4.0);
    cx lam = (tr + disc) / 2.0;
    if (std::abs(lam) < 1.0) lam = (tr - disc) / 2.0;
    out.translation_length = 2.0 * std::log(std::abs(lam));
    out.rotation_angle = 2.0 * std::arg(lam);
  }

  // axis endpoints: fixed points of the boundary action
  if (out.kind == IsomClass::Loxodromic || out.kind == IsomClass::Elliptic) {
    if (std::abs(m.c) > 1e-300) {
      cx disc = std::sqrt((m.d - m.a) * (m.d - m.a) + 4.0 * m.b * m.c);
      cx r1 = (m.a - m.d + disc) / (2.0 * m.c);
      cx r2 = (m.a - m.d - disc) / (2.0 * m.c);
      out.axis_endpoints = std::array<cx, 2>{r1, r2};
    } else if (std::abs(m.a - m.d) > 1e-300) {
      cx inf{std::numeric_limits<double>::infinity(), 0.0};
      out.axis_endpoints = std::array<cx, 2>{m.b / (m.d - m.a), inf};
    }
  }
  return out;
}

double translation_length(const Moebius& m) {
  Classification c = classify(m);
  if (c.near_parabolic) return 0.0;
  return c.translation_length;
}

Moebius evaluate_word(const std::vector<Moebius>& gens, const std::vector<int>& word) {
  Moebius m = identity();
  int count = 0;
  for (int idx : word) {
    if (idx == 0 || std::abs(idx) > (int)gens.size())
      throw std::out_of_range("word letter out of range");
    const Moebius& g = gens[std::abs(idx) - 1];
    m = m * (idx > 0 ? g : g.inverse());
    if (++count % 64 == 0) m = m.normalized();
  }
  return m;
}

} // namespace eslab
