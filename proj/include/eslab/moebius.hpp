#pragma once
// SL2(C) matrices acting on the upper half-space model of H^3.

#include <complex>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eslab {

using cx = std::complex<double>;

struct Pt3 {
  // boundary coordinate z = x+iy, height t > 0
  cx z{0.0, 0.0};
  double t = 1.0;
};

struct Moebius {
  cx a{1}, b{0}, c{0}, d{1};

  cx det() const { return a * d - b * c; }
  cx tr() const { return a + d; }

  Moebius inverse() const { return Moebius{d, -b, -c, a}; } // assumes det == 1

  // normalize so det == 1 (assumes det nonzero)
  Moebius normalized() const;

  Moebius operator*(const Moebius& o) const {
    return Moebius{a * o.a + b * o.c, a * o.b + b * o.d,
                   c * o.a + d * o.c, c * o.b + d * o.d};
  }

  // Mobius action on the boundary sphere (infinity maps through)
  cx boundary(cx z) const;

  // isometric action on upper half-space
  Pt3 apply(const Pt3& p) const;
};

Moebius identity();
Moebius parabolic_translation(cx c);              // z -> z + c
Moebius diagonal(cx lambda);                      // diag(lambda, 1/lambda)
Moebius from_trace_axis(cx tr, cx fix1, cx fix2); // loxodromic with given fixed points

enum class IsomClass { Identity, Parabolic, Elliptic, Loxodromic };

struct Classification {
  IsomClass kind;
  double translation_length = 0.0; // 0 unless loxodromic
  double rotation_angle = 0.0;     // holonomy twist along the axis
  bool near_parabolic = false;     // | |tr| - 2 | below resolution threshold
  std::optional<std::array<cx, 2>> axis_endpoints; // boundary fixed points, when an axis exists
};

// classification uses tr^2 so it is stable under the SL2 sign ambiguity
Classification classify(const Moebius& m);

double translation_length(const Moebius& m);

// product of a word in the generators; renormalizes det periodically
Moebius evaluate_word(const std::vector<Moebius>& gens, const std::vector<int>& word);

} // namespace eslab
