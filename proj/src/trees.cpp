#include "eslab/trees.hpp"

#include "eslab/develop.hpp"
#include "eslab/fourpoint.hpp"
#include "eslab/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eslab {

double scale_at(const std::vector<Moebius>& sigma, const Pt3& x) {
  if (sigma.empty()) throw std::invalid_argument("empty generator set");
  double r = 0.0;
  for (auto& g : sigma) r = std::max(r, dist(x, g.apply(x)));
  return r;
}

// boundary fixed points of an isometry, for elementarity detection
static std::vector<cx> fixed_points(const Moebius& m) {
  auto cls = classify(m);
  auto mark = [](cx w) { // finite marker for the boundary point at infinity
    return std::isfinite(w.real()) && std::isfinite(w.imag()) ? w : cx{1e30, 1e30};
  };
  if (cls.axis_endpoints)
    return {mark((*cls.axis_endpoints)[0]), mark((*cls.axis_endpoints)[1])};
  if (cls.kind == IsomClass::Identity) return {};
  // parabolic: single fixed point (a - d +- 0) / 2c, or infinity
  if (std::abs(m.c) < 1e-14) return {cx{1e30, 1e30}}; // marker for infinity
  return {(m.a - m.d) / (2.0 * m.c)};
}

// number of boundary points fixed by every non-identity generator; a single
// common fixed point means the displacement infimum need not be achieved
static int common_fixed_points(const std::vector<Moebius>& sigma) {
  std::vector<std::vector<cx>> fps;
  for (auto& g : sigma) {
    auto f = fixed_points(g);
    if (!f.empty()) fps.push_back(f);
  }
  if (fps.empty()) return 2;
  int count = 0;
  for (cx cand : fps[0]) {
    bool common = true;
    for (auto& f : fps)
      if (std::none_of(f.begin(), f.end(), [&](cx w) {
            return std::abs(w - cand) < 1e-8 * (1.0 + std::abs(cand));
          }))
        common = false;
    if (common) ++count;
  }
  return count;
}

std::pair<Pt3, double> approximate_center(const std::vector<Moebius>& sigma,
                                          const Pt3& guess, double C) {
  if (sigma.empty()) throw std::invalid_argument("empty generator set");
  if (common_fixed_points(sigma) == 1)
    throw std::domain_error("parabolic-type action: no approximate center");
  // search box: one-letter orbit hull, dilated by 2
  double lo = guess.t, hi = guess.t, xr = 0.0;
  cx ctr = guess.z;
  std::vector<Pt3> orbit{guess};
  for (auto& g : sigma) orbit.push_back(g.apply(guess));
  cx mean{0.0};
  for (auto& p : orbit) mean += p.z;
  mean /= double(orbit.size());
  for (auto& p : orbit) {
    lo = std::min(lo, p.t);
    hi = std::max(hi, p.t);
    xr = std::max(xr, std::abs(p.z - mean));
  }
  ctr = mean;
  xr = 2.0 * std::max(xr, 0.5 * (hi - lo));
  double ulo = std::log(lo) - std::log(2.0 * hi / lo + 2.0);
  double uhi = std::log(hi) + std::log(2.0 * hi / lo + 2.0);
  Pt3 best = guess;
  double bestR = scale_at(sigma, guess);
  const int n = 6;
  for (int round = 0; round < 5; ++round) {
    double uc = std::log(best.t);
    double uspan = (uhi - ulo) / 2.0;
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j)
        for (int k = -n; k <= n; ++k) {
          Pt3 p{best.z + xr * cx{double(i), double(j)} / double(n),
                std::exp(uc + uspan * k / double(n))};
          double r = scale_at(sigma, p);
          if (r < bestR) {
            bestR = r;
            best = p;
          }
        }
    xr /= n / 1.5;
    uhi = uc + uspan / (n / 1.5);
    ulo = uc - uspan / (n / 1.5);
  }
  (void)C;
  return {best, bestR};
}

// periods of a one-polygon torus: the two gluing translations
static std::pair<cx, cx> torus_periods(const HalfTranslationSurface& s) {
  if (s.polys.size() != 1 || s.gluings.size() != 2)
    throw std::invalid_argument("need a one-polygon torus");
  std::array<cx, 2> p;
  for (int i = 0; i < 2; ++i) {
    if (s.gluings[i].sign != 1)
      throw std::invalid_argument("need translation gluings");
    p[i] = s.gluings[i].offset;
  }
  for (auto& v : p)
    if (v.real() < -1e-12 || (std::abs(v.real()) < 1e-12 && v.imag() < 0.0))
      v = -v;
  if (std::abs(std::arg(p[0])) > std::abs(std::arg(p[1]))) std::swap(p[0], p[1]);
  return {p[0], p[1]};
}

HeightFunction dual_length_function(const HalfTranslationSurface& s, cx scale,
                                    const std::vector<std::array<int, 2>>& classes) {
  auto [u, v] = torus_periods(s);
  cx root = std::sqrt(scale);
  HeightFunction h;
  for (auto& c : classes)
    h.values[c] = std::abs((root * (double(c[0]) * u + double(c[1]) * v)).imag());
  return h;
}

void TreeMapSample::validate(double tol) const {
  size_t n = source.size();
  if (target_dist.size() != n) throw std::invalid_argument("matrix size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (target_dist[i].size() != n) throw std::invalid_argument("matrix not square");
    if (std::abs(target_dist[i][i]) > tol)
      throw std::invalid_argument("nonzero diagonal");
    for (size_t j = 0; j < n; ++j) {
      if (std::abs(target_dist[i][j] - target_dist[j][i]) > tol)
        throw std::invalid_argument("asymmetric distances");
      for (size_t k = 0; k < n; ++k)
        if (target_dist[i][j] > target_dist[i][k] + target_dist[k][j] + tol)
          throw std::invalid_argument("triangle inequality violated");
    }
  }
}

static double flat_height(cx root, cx a, cx b) {
  return std::abs((root * (b - a)).imag());
}

StraightnessReport straightness_check(const TreeMapSample& sample, cx scale,
                                      const std::vector<std::pair<int, int>>& segments,
                                      double tol,
                                      const std::vector<CriticalPoint>& zeros) {
  sample.validate(std::max(tol, 1e-9));
  cx root = std::sqrt(scale);
  StraightnessReport rep;
  for (auto [i, j] : segments) {
    StraightnessItem it;
    it.i = i;
    it.j = j;
    cx a = sample.source[i], b = sample.source[j];
    it.d = sample.target_dist[i][j];
    // zero on the open segment?
    const CriticalPoint* hit = nullptr;
    for (auto& z : zeros) {
      cx ab = b - a;
      double len = std::abs(ab);
      if (len == 0.0) continue;
      double t = ((z.z - a) * std::conj(ab)).real() / (len * len);
      double off = std::abs(z.z - (a + t * ab));
      if (t > 1e-9 && t < 1.0 - 1e-9 && off < 1e-9 * (1.0 + len)) {
        hit = &z;
        break;
      }
    }
    if (hit && hit->order != 1) {
      it.skipped = true;
      it.pass = true;
      rep.items.push_back(it);
      continue;
    }
    if (hit) {
      // push off to either side of the simple zero; both reroutes must agree
      cx dir = (b - a) / std::abs(b - a);
      cx perp = dir * cx{0.0, 1.0} * (1e-6 * (1.0 + std::abs(b - a)));
      double h1 = flat_height(root, a, hit->z + perp) +
                  flat_height(root, hit->z + perp, b);
      double h2 = flat_height(root, a, hit->z - perp) +
                  flat_height(root, hit->z - perp, b);
      it.pushed = true;
      it.h = 0.5 * (h1 + h2);
      if (std::abs(h1 - h2) > tol + 1e-5) {
        it.skipped = true;
        it.pass = true;
        rep.items.push_back(it);
        continue;
      }
    } else {
      it.h = flat_height(root, a, b);
    }
    it.err = std::abs(it.d - it.h);
    it.pass = it.err <= tol;
    rep.all_pass = rep.all_pass && it.pass;
    rep.items.push_back(it);
  }
  return rep;
}

TranslationFamily cylinder_family(int nmax) {
  TranslationFamily f;
  for (int n = 1; n <= nmax; ++n) f.periods.push_back(cx{0.0, double(n)});
  return f;
}

TranslationFamily torus_family(const std::vector<std::array<int, 2>>& classes) {
  TranslationFamily f;
  for (auto& c : classes) f.periods.push_back(cx{double(c[0]), double(c[1])});
  return f;
}

double diag_pair_distance(cx w, double x0) {
  double u = std::abs(w.real());
  if (w.real() < 0.0) w = -w; // distance only depends on |r| vs 1/|r| symmetry
  if (u < 30.0) {
    cx r = std::exp(w);
    double a = std::abs(r - 1.0 / r);
    double b = std::abs(r) - 1.0 / std::abs(r);
    return std::acosh(1.0 + (x0 * x0 * a * a + b * b) / 2.0);
  }
  double g = x0 * x0 * std::norm(1.0 - std::exp(-2.0 * w)) + 1.0;
  return 2.0 * u + std::log(g);
}

double stable_log_trace(cx mu) {
  if (mu.real() < 0.0) mu = -mu; // cosh is even
  double u = mu.real();
  cx z = std::exp(-2.0 * mu); // |z| <= 1
  return u + std::log(std::abs(1.0 + z) + 2.0 * std::exp(-u));
}

static cx log_multiplier(double t, cx period) {
  return cx{0.0, 1.0} * std::sqrt(2.0 * t) * period / 2.0;
}

SurveyReport ms_limit_survey(const TranslationFamily& fam,
                             const std::vector<double>& ts) {
  SurveyReport rep;
  for (cx p : fam.periods) rep.limit_heights.push_back(std::abs(p.imag()));
  rep.limit_heights = projectivize(rep.limit_heights);
  double x0 = fam.base_offset;
  for (double t : ts) {
    SurveyRow row;
    row.t = t;
    std::vector<cx> mus;
    for (cx p : fam.periods) {
      cx mu = log_multiplier(t, p);
      mus.push_back(mu);
      row.log_traces.push_back(stable_log_trace(mu));
      row.lengths.push_back(2.0 * std::abs(mu.real()));
    }
    row.proj = projectivize(row.log_traces);
    // scale from one-letter words: shortest nonzero periods
    double minlen = 1e300;
    for (cx p : fam.periods) minlen = std::min(minlen, std::abs(p));
    row.scale = 0.0;
    for (cx p : fam.periods)
      if (std::abs(p) < minlen * 1.5 + 1e-12)
        row.scale = std::max(row.scale, diag_pair_distance(log_multiplier(t, p), x0));
    // orbit metric over {id} + words, rescaled by the scale
    size_t n = fam.periods.size() + 1;
    std::vector<double> m(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        cx mi = i ? mus[i - 1] : cx{0.0};
        cx mj = j ? mus[j - 1] : cx{0.0};
        m[i * n + j] = diag_pair_distance(mi - mj, x0) / row.scale;
      }
    row.delta = four_point_delta(m, n);
    rep.rows.push_back(row);
  }
  // sup gap at the largest t
  auto& last = rep.rows.back();
  for (size_t i = 0; i < last.proj.size(); ++i)
    rep.sup_norm_gap =
        std::max(rep.sup_norm_gap, std::abs(last.proj[i] - rep.limit_heights[i]));
  // log-log regression of delta against t
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (auto& r : rep.rows) {
    if (r.delta <= 0.0) continue;
    double X = std::log(r.t), Y = std::log(r.delta);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++k;
  }
  if (k >= 2) rep.delta_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  // drift of l / sqrt(t) over the top decade, positive-height words
  auto& prev = *std::find_if(rep.rows.begin(), rep.rows.end(), [&](const SurveyRow& r) {
    return r.t >= rep.rows.back().t / 10.0 - 1e-9;
  });
  for (size_t i = 0; i < fam.periods.size(); ++i) {
    if (std::abs(fam.periods[i].imag()) < 1e-12) continue;
    double a = prev.lengths[i] / std::sqrt(prev.t);
    double b = last.lengths[i] / std::sqrt(last.t);
    rep.length_drift = std::max(rep.length_drift, std::abs(a - b) / b);
  }
  return rep;
}

GrowthReport growth_survey(const TranslationFamily& fam,
                           const std::vector<double>& ts) {
  GrowthReport g;
  std::vector<double> X, Y;
  g.c = 1e300;
  for (double t : ts) {
    double mx = 0.0;
    for (cx p : fam.periods) {
      cx mu = log_multiplier(t, p);
      mx = std::max(mx, stable_log_trace(mu));
      if (std::abs(p.imag()) > 1e-12) {
        double ratio = 2.0 * std::abs(mu.real()) / std::sqrt(t);
        g.c = std::min(g.c, ratio);
        g.C = std::max(g.C, ratio);
      }
    }
    X.push_back(std::sqrt(t));
    Y.push_back(mx); // log(|tr| + 2) ~ log(1 + max trace coordinate size)
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < X.size(); ++i) {
    sx += X[i];
    sy += Y[i];
    sxx += X[i] * X[i];
    sxy += X[i] * Y[i];
  }
  double n = double(X.size());
  g.A = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  g.B = (sy - g.A * sx) / n;
  for (size_t i = 0; i < X.size(); ++i)
    g.fit_residual = std::max(
        g.fit_residual, std::abs(Y[i] - g.A * X[i] - g.B) / (1.0 + std::abs(Y[i])));
  double tmax = ts.back();
  for (cx p : fam.periods)
    g.ratio_at_tmax.push_back(2.0 * std::abs(log_multiplier(tmax, p).real()) /
                              std::sqrt(tmax));
  return g;
}

static ScaledMoebius renormalize(Moebius m, double k) {
  double mx = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (mx > 0.0) {
    m.a /= mx;
    m.b /= mx;
    m.c /= mx;
    m.d /= mx;
    k += std::log(mx);
  }
  return {m, k};
}

ScaledMoebius scaled_evaluate(const std::vector<Moebius>& gens,
                              const std::vector<int>& word) {
  // free reduction: adjacent inverse pairs cancel exactly, and evaluating
  // them numerically destroys the small rows of extreme products
  std::vector<int> red;
  for (int letter : word) {
    if (!red.empty() && red.back() == -letter)
      red.pop_back();
    else
      red.push_back(letter);
  }
  ScaledMoebius acc = renormalize(Moebius{}, 0.0);
  for (int letter : red) {
    Moebius g = gens.at(std::abs(letter) - 1);
    if (letter < 0) g = g.inverse();
    acc = renormalize(acc.m * g, acc.log_scale);
  }
  return acc;
}

double displacement_at(const ScaledMoebius& w, const Pt3& x) {
  // frame G with G . (0,0,1) = x
  double rh = std::sqrt(x.t);
  Moebius G{cx{rh}, x.z / rh, cx{0.0}, cx{1.0 / rh}};
  Moebius M = G.inverse() * w.m * G;
  double S = std::norm(M.a) + std::norm(M.b) + std::norm(M.c) + std::norm(M.d);
  // cosh d = e^{2 log_scale} S / 2  for a true determinant of 1
  double lc = 2.0 * w.log_scale + std::log(S / 2.0);
  if (lc < 30.0) return std::acosh(std::max(1.0, std::exp(lc)));
  return lc + std::log(2.0);
}

FreeFamilyReport free_family_delta(const std::vector<double>& ts,
                                   const std::vector<std::vector<int>>& words,
                                   const Pt3& base) {
  FreeFamilyReport rep;
  double r2 = std::sqrt(0.5);
  Moebius C{cx{r2}, cx{-r2}, cx{r2}, cx{r2}}; // 0 -> -1, infinity -> 1
  for (double t : ts) {
    double u = std::sqrt(t / 2.0);
    Moebius A{cx{std::exp(u)}, cx{0.0}, cx{0.0}, cx{std::exp(-u)}};
    Moebius B = C * A * C.inverse();
    std::vector<Moebius> gens{A, B};
    size_t n = words.size();
    std::vector<double> m(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<int> rel; // word_i^{-1} word_j
        for (auto it = words[i].rbegin(); it != words[i].rend(); ++it)
          rel.push_back(-*it);
        rel.insert(rel.end(), words[j].begin(), words[j].end());
        m[i * n + j] = displacement_at(scaled_evaluate(gens, rel), base);
      }
    double R = std::max(displacement_at(scaled_evaluate(gens, {1}), base),
                        displacement_at(scaled_evaluate(gens, {2}), base));
    for (auto& v : m) v /= R;
    rep.ts.push_back(t);
    rep.deltas.push_back(four_point_delta(m, n));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (size_t i = 0; i < rep.ts.size(); ++i) {
    if (rep.deltas[i] <= 0.0) continue;
    double X = std::log(rep.ts[i]), Y = std::log(rep.deltas[i]);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++k;
  }
  if (k >= 2) rep.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return rep;
}

} // namespace eslab
