#pragma once
// polynomials and rational functions over a field, with an exact
// Gaussian-rational instantiation for symbolic identities

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

namespace eslab {

using Rat = boost::multiprecision::cpp_rational;

// complex numbers with exact rational parts
struct GQ {
  Rat re{0}, im{0};
  GQ() = default;
  GQ(int n) : re(n) {}
  GQ(Rat r) : re(std::move(r)) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  GQ operator+(const GQ& o) const { return {re + o.re, im + o.im}; }
  GQ operator-(const GQ& o) const { return {re - o.re, im - o.im}; }
  GQ operator-() const { return {-re, -im}; }
  GQ operator*(const GQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GQ operator/(const GQ& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GQ& o) const { return !(*this == o); }
  bool is_zero() const { return re == 0 && im == 0; }
};

inline bool poly_is_zero(const std::complex<double>& v) {
  return v == std::complex<double>{0.0, 0.0};
}
inline bool poly_is_zero(const GQ& v) { return v.is_zero(); }

template <class T>
struct Poly {
  std::vector<T> c; // ascending powers

  Poly() = default;
  Poly(std::initializer_list<T> v) : c(v) { trim(); }
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }

  static Poly X() { return Poly{T(0), T(1)}; }

  void trim() {
    while (!c.empty() && poly_is_zero(c.back())) c.pop_back();
  }
  int degree() const { return (int)c.size() - 1; } // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  T coeff(size_t k) const { return k < c.size() ? c[k] : T(0); }

  T eval(const T& x) const {
    T r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  Poly deriv() const {
    Poly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * T((int)i));
    d.trim();
    return d;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), T(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), T(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) - o.coeff(i);
    r.trim();
    return r;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, T(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    r.trim();
    return r;
  }
  Poly operator*(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
  }

  // p(x + z0), Taylor shift by repeated synthetic division by (x - z0)
  Poly shifted(const T& z0) const {
    std::vector<T> cur = c;
    std::vector<T> res;
    while (!cur.empty()) {
      std::vector<T> quot(cur.size() - 1, T(0));
      T rem(0);
      for (size_t i = cur.size(); i-- > 0;) {
        T v = cur[i] + rem * z0;
        if (i > 0) quot[i - 1] = v;
        rem = v;
      }
      res.push_back(rem);
      cur = std::move(quot);
    }
    Poly r;
    r.c = std::move(res);
    r.trim();
    return r;
  }

  bool operator==(const Poly& o) const {
    Poly a = *this, b = o;
    a.trim();
    b.trim();
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!poly_is_zero(a.c[i] - b.c[i])) return false;
    return true;
  }
};

template <class T>
struct RatFn {
  Poly<T> num, den{T(1)};

  RatFn() = default;
  RatFn(Poly<T> n, Poly<T> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
  }
  static RatFn from_poly(Poly<T> p) { return RatFn{std::move(p), Poly<T>{T(1)}}; }

  bool is_zero() const { return num.is_zero(); }
  T eval(const T& x) const { return num.eval(x) / den.eval(x); }

  RatFn operator+(const RatFn& o) const {
    return RatFn{num * o.den + o.num * den, den * o.den};
  }
  RatFn operator-(const RatFn& o) const {
    return RatFn{num * o.den - o.num * den, den * o.den};
  }
  RatFn operator*(const RatFn& o) const { return RatFn{num * o.num, den * o.den}; }
  RatFn operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero function");
    return RatFn{num * o.den, den * o.num};
  }
  RatFn operator*(const T& s) const { return RatFn{num * s, den}; }

  RatFn deriv() const {
    return RatFn{num.deriv() * den - num * den.deriv(), den * den};
  }

  // equality as rational functions, by cross multiplication; exact for exact T
  bool equals(const RatFn& o) const { return num * o.den == o.num * den; }
};

// q''/(2q) - (5/8)(q'/q)^2: the correction term of the flat metric of q dz^2
// relative to a Moebius flat base
template <class T>
RatFn<T> beta_of(const RatFn<T>& q) {
  if (q.is_zero()) throw std::domain_error("degenerate differential");
  RatFn<T> q1 = q.deriv(), q2 = q1.deriv();
  RatFn<T> L = q1 / q;
  return q2 / q * (T(1) / T(2)) - L * L * (T(5) / T(8));
}

// Laurent coefficient of (z - z0)^{idx} for idx < 0 (0 when the pole is milder)
template <class T>
T laurent_coeff(const RatFn<T>& f, const T& z0, int idx) {
  Poly<T> n = f.num.shifted(z0), d = f.den.shifted(z0);
  size_t vn = 0, vd = 0;
  while (vn < n.c.size() && poly_is_zero(n.c[vn])) ++vn;
  while (vd < d.c.size() && poly_is_zero(d.c[vd])) ++vd;
  if (d.is_zero()) throw std::domain_error("zero denominator");
  int m = (int)vd - (int)vn; // pole order
  int k_needed = idx + m;    // series index carrying the requested coefficient
  if (k_needed < 0) return T(0);
  std::vector<T> nn(n.c.begin() + vn, n.c.end());
  std::vector<T> dd(d.c.begin() + vd, d.c.end());
  // power series of nn/dd by forward substitution
  std::vector<T> s(k_needed + 1, T(0));
  for (int k = 0; k <= k_needed; ++k) {
    T acc = k < (int)nn.size() ? nn[k] : T(0);
    for (int j = 0; j < k; ++j) {
      T dk = (k - j) < (int)dd.size() ? dd[k - j] : T(0);
      acc = acc - s[j] * dk;
    }
    s[k] = acc / dd[0];
  }
  return s[k_needed];
}

template <class T>
T residue_at(const RatFn<T>& f, const T& z0) {
  return laurent_coeff(f, z0, -1);
}

// numeric roots of a complex polynomial (companion matrix eigenvalues)
std::vector<std::complex<double>> poly_roots(const Poly<std::complex<double>>& p);

// group numerically coincident roots into (location, multiplicity) pairs
std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double tol = 1e-7);

} // namespace eslab
