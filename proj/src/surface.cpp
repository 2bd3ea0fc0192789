#include "eslab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <queue>
#include <set>

namespace eslab {

namespace {

constexpr double kPi = std::numbers::pi;

// affine map z -> s z + c with s = +-1
struct Aff {
  int s = 1;
  cx c{0.0};
  cx operator()(cx z) const { return double(s) * z + c; }
  Aff after(const Aff& inner) const { // this(inner(z))
    return Aff{s * inner.s, double(s) * inner.c + c};
  }
  Aff inverse() const { return Aff{s, -double(s) * c}; }
};

// gluing as a forward map on the from side
Aff gluing_map(const Gluing& g) { return Aff{g.sign, g.offset}; }

struct EdgePartner {
  EdgeRef edge;
  Aff map; // coordinates of `edge.poly` expressed from the queried side
};

// crossing edge (p,e) from inside: partner polygon embeds via the returned map
std::optional<EdgePartner> partner_of(const HalfTranslationSurface& s, int p, int e) {
  for (auto& g : s.gluings) {
    if (g.from.poly == p && g.from.edge == e)
      return EdgePartner{g.to, gluing_map(g).inverse()};
    if (g.to.poly == p && g.to.edge == e) return EdgePartner{g.from, gluing_map(g)};
  }
  return std::nullopt;
}

double interior_angle(const HalfTranslationSurface& s, int p, int v) {
  cx a = s.vertex(p, v);
  cx u_out = s.vertex(p, v + 1) - a;
  cx u_in = s.vertex(p, v - 1) - a;
  double ang = std::arg(u_in / u_out);
  if (ang <= 1e-12) ang += 2.0 * kPi;
  return ang;
}

// walk the corners around vertex (p, v) in ccw order; returns the cyclic list
std::vector<std::pair<int, int>> corner_walk(const HalfTranslationSurface& s, int p,
                                             int v) {
  std::vector<std::pair<int, int>> walk;
  int cp = p, cv = v;
  for (int guard = 0; guard < 4096; ++guard) {
    walk.push_back({cp, cv});
    int n = s.nedges(cp);
    int e_in = ((cv - 1) % n + n) % n; // edge arriving at the corner vertex
    auto pr = partner_of(s, cp, e_in);
    if (!pr) throw std::invalid_argument("unglued edge in corner walk");
    cp = pr->edge.poly;
    cv = pr->edge.edge; // image vertex is the start of the partner edge
    if (cp == p && cv == v) return walk;
  }
  throw std::invalid_argument("corner walk does not close");
}

bool point_in_poly(const std::vector<cx>& P, cx z, double tol) {
  // boundary counts as inside (tol-thickened); otherwise even-odd rule
  size_t n = P.size();
  for (size_t i = 0; i < n; ++i) {
    cx a = P[i], b = P[(i + 1) % n];
    cx ab = b - a;
    double L2 = std::norm(ab);
    double t = std::clamp(((z - a) * std::conj(ab)).real() / L2, 0.0, 1.0);
    if (std::abs(z - (a + t * ab)) < tol) return true;
  }
  bool in = false;
  for (size_t i = 0; i < n; ++i) {
    cx a = P[i], b = P[(i + 1) % n];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
      double x = a.real() + (z.imag() - a.imag()) / (b.imag() - a.imag()) *
                                (b.real() - a.real());
      if (x > z.real()) in = !in;
    }
  }
  return in;
}

} // namespace

double HalfTranslationSurface::total_area() const {
  double A = 0.0;
  for (auto& P : polys) {
    double a = 0.0;
    for (size_t i = 0; i < P.size(); ++i) {
      cx u = P[i], v = P[(i + 1) % P.size()];
      a += u.real() * v.imag() - v.real() * u.imag();
    }
    A += a / 2.0;
  }
  return A;
}

void HalfTranslationSurface::validate(double tol) {
  // every edge glued exactly once, with matching lengths and endpoint images
  std::set<std::pair<int, int>> seen;
  for (auto& g : gluings) {
    for (auto er : {g.from, g.to}) {
      if (er.poly < 0 || er.poly >= (int)polys.size() || er.edge < 0 ||
          er.edge >= nedges(er.poly))
        throw std::invalid_argument("gluing references missing edge");
      if (!seen.insert({er.poly, er.edge}).second)
        throw std::invalid_argument("edge glued twice");
    }
    cx fa = vertex(g.from.poly, g.from.edge);
    cx fb = vertex(g.from.poly, g.from.edge + 1);
    cx ta = vertex(g.to.poly, g.to.edge);
    cx tb = vertex(g.to.poly, g.to.edge + 1);
    if (std::abs(std::abs(fb - fa) - std::abs(tb - ta)) > tol)
      throw std::invalid_argument("identified edges have different lengths");
    Aff g1 = gluing_map(g);
    if (std::abs(g1(fa) - tb) > tol || std::abs(g1(fb) - ta) > tol)
      throw std::invalid_argument("gluing map does not match edge endpoints");
  }
  for (int p = 0; p < (int)polys.size(); ++p)
    for (int e = 0; e < nedges(p); ++e)
      if (!seen.count({p, e})) throw std::invalid_argument("unglued edge");

  if (total_area() <= tol) throw std::invalid_argument("nonpositive area");

  cones.clear();
  std::set<std::pair<int, int>> done;
  for (int p = 0; p < (int)polys.size(); ++p)
    for (int v = 0; v < (int)polys[p].size(); ++v) {
      if (done.count({p, v})) continue;
      ConeClass cc;
      cc.corners = corner_walk(*this, p, v);
      for (auto& c : cc.corners) {
        done.insert(c);
        cc.angle += interior_angle(*this, c.first, c.second);
      }
      double units = cc.angle / kPi;
      long q = std::lround(units);
      if (std::abs(units - double(q)) > 1e-8 || q < 2)
        throw std::invalid_argument("cone angle is not (k+2)pi with k >= 0");
      cc.k = int(q - 2);
      cones.push_back(std::move(cc));
    }
}

HalfTranslationSurface square_torus() {
  HalfTranslationSurface s;
  s.polys = {{cx{0, 0}, cx{1, 0}, cx{1, 1}, cx{0, 1}}};
  s.gluings = {{{0, 0}, {0, 2}, 1, cx{0, 1}}, {{0, 1}, {0, 3}, 1, cx{-1, 0}}};
  s.validate();
  return s;
}

HalfTranslationSurface regular_octagon_surface() {
  HalfTranslationSurface s;
  std::vector<cx> v;
  double R = 0.5 / std::sin(kPi / 8.0); // side length 1
  for (int k = 0; k < 8; ++k) {
    double a = kPi / 8.0 + k * kPi / 4.0;
    v.push_back(R * cx{std::cos(a), std::sin(a)});
  }
  s.polys = {v};
  for (int k = 0; k < 4; ++k) {
    cx offset = v[(k + 5) % 8] - v[k];
    s.gluings.push_back({{0, k}, {0, k + 4}, 1, offset});
  }
  s.validate();
  return s;
}

HalfTranslationSurface l_shaped_surface(double a, double b) {
  HalfTranslationSurface s;
  double t = a + b;
  s.polys = {{cx{0, 0}, cx{a, 0}, cx{t, 0}, cx{t, a}, cx{a, a}, cx{a, t},
              cx{0, t}, cx{0, a}}};
  s.gluings = {{{0, 0}, {0, 5}, 1, cx{0, t}},
               {{0, 1}, {0, 3}, 1, cx{0, a}},
               {{0, 2}, {0, 7}, 1, cx{-t, 0}},
               {{0, 4}, {0, 6}, 1, cx{-a, 0}}};
  s.validate();
  return s;
}

// ---------------------------------------------------------------- ray tracing

static bool same_point(const HalfTranslationSurface& s, const SurfacePoint& x,
                       const SurfacePoint& y, double tol) {
  if (x.poly == y.poly && std::abs(x.z - y.z) < tol) return true;
  // edge representatives may differ by one gluing
  for (auto& g : s.gluings) {
    Aff m = gluing_map(g);
    if (g.from.poly == x.poly && g.to.poly == y.poly &&
        std::abs(m(x.z) - y.z) < tol)
      return true;
    if (g.from.poly == y.poly && g.to.poly == x.poly &&
        std::abs(m(y.z) - x.z) < tol)
      return true;
  }
  return false;
}

RayResult trace_ray(const HalfTranslationSurface& s, SurfacePoint p, cx dir,
                    double max_len, double tol) {
  dir /= std::abs(dir);
  SurfacePoint start = p;
  cx dir0 = dir;
  double traveled = 0.0;
  RayResult out;
  for (int guard = 0; guard < 200000; ++guard) {
    auto& P = s.polys[p.poly];
    int n = (int)P.size();
    // nearest boundary crossing of the forward ray
    double best_t = std::numeric_limits<double>::infinity();
    int best_e = -1;
    double best_u = 0.0;
    for (int e = 0; e < n; ++e) {
      cx A = P[e], B = P[(e + 1) % n];
      cx ab = B - A;
      double denom = (dir * std::conj(ab)).imag(); // cross(ab, dir) sign flip
      if (std::abs(denom) < 1e-14 * std::abs(ab)) continue;
      double t = ((A - p.z) * std::conj(ab)).imag() / denom;
      if (t <= tol) continue;
      cx hit = p.z + t * dir;
      double u = ((hit - A) * std::conj(ab)).real() / std::norm(ab);
      if (u < -1e-12 || u > 1.0 + 1e-12) continue;
      if (t < best_t) {
        best_t = t;
        best_e = e;
        best_u = u;
      }
    }
    if (best_e < 0) {
      // ray points out of the polygon from its boundary: hop through the gluing
      int on_e = -1;
      for (int e = 0; e < n; ++e) {
        cx A = P[e], B = P[(e + 1) % n];
        cx ab = B - A;
        double L2 = std::norm(ab);
        double u = std::clamp(((p.z - A) * std::conj(ab)).real() / L2, 0.0, 1.0);
        if (std::abs(p.z - (A + u * ab)) < tol) {
          on_e = e;
          break;
        }
      }
      if (on_e < 0) throw std::runtime_error("ray found no exit");
      auto pr = partner_of(s, p.poly, on_e);
      Aff fwd = pr->map.inverse(); // current coords -> partner coords
      p = SurfacePoint{pr->edge.poly, fwd(p.z)};
      dir = double(fwd.s) * dir;
      continue;
    }
    // closure through the interior of the start polygon
    if (p.poly == start.poly && traveled > tol) {
      double tc = ((start.z - p.z) * std::conj(dir)).real();
      if (tc > -tol && tc < best_t + tol && traveled + tc <= max_len &&
          std::abs(start.z + cx{0.0} - (p.z + tc * dir)) < tol &&
          std::abs(dir - dir0) < 1e-7) {
        out.stop = RayResult::Stop::Closed;
        out.length = traveled + tc;
        out.end = start;
        out.end_dir = dir;
        return out;
      }
    }
    if (traveled + best_t >= max_len) {
      out.stop = RayResult::Stop::LengthCap;
      out.length = max_len;
      out.end = SurfacePoint{p.poly, p.z + (max_len - traveled) * dir};
      out.end_dir = dir;
      return out;
    }
    cx hit = p.z + best_t * dir;
    cx A = P[best_e], B = P[(best_e + 1) % n];
    double edge_len = std::abs(B - A);
    if (best_u * edge_len < tol || (1.0 - best_u) * edge_len < tol) {
      out.stop = RayResult::Stop::Cone;
      out.length = traveled + best_t;
      out.end = SurfacePoint{p.poly, best_u < 0.5 ? A : B};
      out.end_dir = dir;
      return out;
    }
    traveled += best_t;
    auto pr = partner_of(s, p.poly, best_e);
    Aff fwd = pr->map.inverse();
    p = SurfacePoint{pr->edge.poly, fwd(hit)};
    dir = double(fwd.s) * dir;
    if (same_point(s, p, start, tol) && std::abs(dir - dir0) < 1e-7) {
      out.stop = RayResult::Stop::Closed;
      out.length = traveled;
      out.end = start;
      out.end_dir = dir;
      return out;
    }
  }
  throw std::runtime_error("ray exceeded crossing budget");
}

// ----------------------------------------------------------------- geodesics

namespace {

struct Candidate {
  int target = -1;   // index into the node list
  double length = 0.0;
  cx vec{0.0};       // developed vector, frame of the source unfolding
  // corner data for cone endpoints, for the angle certificate
  int src_corner = -1, dst_corner = -1; // global corner ids, -1 for p/q
  cx src_dir{0.0};                      // outgoing direction in corner coords
  cx dst_dir{0.0};                      // away-from-vertex direction, corner coords
};

struct Unfolded {
  int poly;
  Aff T;
  std::vector<std::pair<cx, cx>> chain_edges; // crossed edges, frame coords
  std::vector<std::pair<int, Aff>> chain_polys;
  int depth;
};

struct TargetSpec {
  int poly;
  cx z;
  int node;       // node id in the geodesic graph
  int corner_id;  // global corner id when the target is a vertex, else -1
};

bool segment_visible(const HalfTranslationSurface& s, cx z0, cx y,
                     const Unfolded& u, double tol) {
  std::vector<double> ts;
  double prev = 0.0;
  for (auto& [A, B] : u.chain_edges) {
    cx ab = B - A, d = y - z0;
    double denom = (d * std::conj(ab)).imag();
    if (std::abs(denom) < 1e-14 * std::abs(ab) * std::abs(d)) return false;
    double t = ((A - z0) * std::conj(ab)).imag() / denom;
    cx hit = z0 + t * d;
    double uu = ((hit - A) * std::conj(ab)).real() / std::norm(ab);
    double el = std::abs(ab);
    if (t <= prev + 1e-12 || t >= 1.0 - 1e-12) return false;
    if (uu * el < tol || (1.0 - uu) * el < tol) return false; // grazes a vertex
    ts.push_back(t);
    prev = t;
  }
  ts.insert(ts.begin(), 0.0);
  ts.push_back(1.0);
  // sample each subsegment inside its unfolded polygon
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    auto& [pi, Ti] = u.chain_polys[i];
    std::vector<cx> poly_frame;
    for (cx v : s.polys[pi]) poly_frame.push_back(Ti(v));
    for (double f : {0.2, 0.5, 0.8}) {
      double t = ts[i] + (ts[i + 1] - ts[i]) * f;
      if (!point_in_poly(poly_frame, z0 + t * (y - z0), 1e-9)) return false;
    }
  }
  return true;
}

// all straight (single leg) connections from a source point to the targets
std::vector<Candidate> direct_legs(const HalfTranslationSurface& s, int p0, cx z0,
                                   int src_corner,
                                   const std::vector<TargetSpec>& targets,
                                   int max_depth, double cap) {
  std::vector<Candidate> found;
  std::deque<Unfolded> queue;
  std::set<std::tuple<int, int, long long, long long>> visited;
  auto key = [](int poly, const Aff& T) {
    return std::make_tuple(poly, T.s, llround(T.c.real() * 1e7),
                           llround(T.c.imag() * 1e7));
  };
  Unfolded root{p0, Aff{}, {}, {{p0, Aff{}}}, 0};
  queue.push_back(root);
  visited.insert(key(p0, Aff{}));
  while (!queue.empty()) {
    Unfolded u = queue.front();
    queue.pop_front();
    for (auto& tg : targets) {
      if (tg.poly != u.poly) continue;
      cx y = u.T(tg.z);
      double len = std::abs(y - z0);
      if (len < 1e-10 || len > cap) continue;
      if (!segment_visible(s, z0, y, u, 1e-9)) continue;
      Candidate c;
      c.target = tg.node;
      c.length = len;
      c.vec = y - z0;
      c.src_corner = src_corner;
      c.dst_corner = tg.corner_id;
      c.src_dir = (y - z0) / len;
      c.dst_dir = double(u.T.s) * (z0 - y) / len; // back into local coordinates
      found.push_back(c);
    }
    if (u.depth >= max_depth) continue;
    int n = s.nedges(u.poly);
    for (int e = 0; e < n; ++e) {
      cx A = u.T(s.vertex(u.poly, e)), B = u.T(s.vertex(u.poly, e + 1));
      // prune copies whose entry edge is out of reach
      cx ab = B - A;
      double t = std::clamp(((z0 - A) * std::conj(ab)).real() / std::norm(ab), 0.0,
                            1.0);
      if (std::abs(z0 - (A + t * ab)) > cap) continue;
      auto pr = partner_of(s, u.poly, e);
      if (!pr) continue;
      Aff T2 = u.T.after(pr->map);
      if (!visited.insert(key(pr->edge.poly, T2)).second) continue;
      Unfolded nu{pr->edge.poly, T2, u.chain_edges, u.chain_polys, u.depth + 1};
      nu.chain_edges.push_back({A, B});
      nu.chain_polys.push_back({pr->edge.poly, T2});
      queue.push_back(nu);
    }
  }
  return found;
}

} // namespace

FlatPath flat_geodesic(const HalfTranslationSurface& s, SurfacePoint p,
                       SurfacePoint q, int depth) {
  HalfTranslationSurface& sm = const_cast<HalfTranslationSurface&>(s);
  if (s.cones.empty()) sm.validate();

  // global corner ids and their cone class / angular offset within the class
  struct CornerInfo {
    int cls;
    double offset; // accumulated angle of earlier corners in the walk
    double angle;
  };
  std::map<std::pair<int, int>, int> corner_id;
  std::vector<CornerInfo> corners;
  std::vector<double> cone_total;
  for (int ci = 0; ci < (int)s.cones.size(); ++ci) {
    double off = 0.0;
    for (auto& c : s.cones[ci].corners) {
      corner_id[c] = (int)corners.size();
      double a = interior_angle(s, c.first, c.second);
      corners.push_back({ci, off, a});
      off += a;
    }
    cone_total.push_back(off);
  }

  // nodes: 0 = p, 1 = q, 2 + class index
  int ncls = (int)s.cones.size();
  int nn = 2 + ncls;
  std::vector<TargetSpec> targets;
  targets.push_back({q.poly, q.z, 1, -1});
  for (auto& [c, id] : corner_id)
    targets.push_back({c.first, s.vertex(c.first, c.second), 2 + corners[id].cls, id});

  double scale = std::sqrt(s.total_area());
  double cap = 8.0 * scale;

  std::vector<std::vector<Candidate>> adj(nn);
  adj[0] = direct_legs(s, p.poly, p.z, -1, targets, depth, cap);
  for (auto& [c, id] : corner_id) {
    auto legs = direct_legs(s, c.first, s.vertex(c.first, c.second), id, targets,
                            depth, cap);
    auto& bucket = adj[2 + corners[id].cls];
    bucket.insert(bucket.end(), legs.begin(), legs.end());
  }

  // Dijkstra from p to q through cone classes
  std::vector<double> dist(nn, std::numeric_limits<double>::infinity());
  std::vector<const Candidate*> via(nn, nullptr);
  std::vector<int> from(nn, -1);
  using QE = std::pair<double, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
  dist[0] = 0.0;
  pq.push({0.0, 0});
  while (!pq.empty()) {
    auto [dcur, u] = pq.top();
    pq.pop();
    if (dcur > dist[u] + 1e-15) continue;
    for (auto& c : adj[u]) {
      if (dist[u] + c.length < dist[c.target] - 1e-15) {
        dist[c.target] = dist[u] + c.length;
        via[c.target] = &c;
        from[c.target] = u;
        pq.push({dist[c.target], c.target});
      }
    }
  }
  if (!std::isfinite(dist[1]))
    throw DepthExceeded("no geodesic found within unfolding depth");

  // reconstruct and check the cone angle condition at interior vertices
  std::vector<const Candidate*> legs;
  for (int u = 1; u != 0; u = from[u]) {
    legs.push_back(via[u]);
    if (from[u] < 0) throw DepthExceeded("no geodesic found");
  }
  std::reverse(legs.begin(), legs.end());

  FlatPath path;
  path.length = dist[1];
  auto global_angle = [&](int cid, cx d) {
    // angle measured ccw from the corner's outgoing edge ray
    int cp = -1, cv = -1;
    for (auto& [c, id] : corner_id)
      if (id == cid) {
        cp = c.first;
        cv = c.second;
      }
    cx u_out = s.vertex(cp, cv + 1) - s.vertex(cp, cv);
    double psi = std::arg(d / u_out);
    if (psi < -1e-9) psi += 2.0 * kPi;
    return corners[cid].offset + psi;
  };
  for (size_t i = 0; i < legs.size(); ++i) {
    GeodesicLeg gl;
    gl.hol = legs[i]->vec;
    gl.length = legs[i]->length;
    if (legs[i]->dst_corner >= 0) gl.end_cone = corners[legs[i]->dst_corner].cls;
    path.legs.push_back(gl);
    if (i > 0) {
      int cin = legs[i - 1]->dst_corner, cout = legs[i]->src_corner;
      double total = cone_total[corners[cin].cls];
      double a1 = global_angle(cin, legs[i - 1]->dst_dir);
      double a2 = global_angle(cout, legs[i]->src_dir);
      double side = std::fmod(std::abs(a1 - a2), total);
      double other = total - side;
      if (std::min(side, other) < kPi - 1e-6) path.cone_angles_ok = false;
    }
  }
  return path;
}

// ------------------------------------------------------------------ cylinders

namespace {

// move a point along direction dir for a fixed flat distance
std::optional<SurfacePoint> advance(const HalfTranslationSurface& s, SurfacePoint p,
                                    cx dir, double w) {
  auto r = trace_ray(s, p, dir, w, 1e-9);
  if (r.stop == RayResult::Stop::LengthCap) return r.end;
  if (r.stop == RayResult::Stop::Closed) {
    // wrapped around a closed perpendicular orbit; reduce and continue
    double rem = std::fmod(w, r.length);
    if (rem < 1e-12) return p;
    auto r2 = trace_ray(s, p, dir, rem, 1e-9);
    if (r2.stop == RayResult::Stop::LengthCap) return r2.end;
    return std::nullopt;
  }
  return std::nullopt;
}

} // namespace

std::vector<FlatCylinder> detect_cylinders(const HalfTranslationSurface& s,
                                           const std::vector<double>& angles,
                                           double max_circumference) {
  HalfTranslationSurface& sm = const_cast<HalfTranslationSurface&>(s);
  if (s.cones.empty()) sm.validate();
  std::vector<FlatCylinder> out;
  double area = s.total_area();
  for (double theta : angles) {
    cx dir = std::polar(1.0, theta);
    std::vector<FlatCylinder> found;
    for (int p = 0; p < (int)s.polys.size(); ++p) {
      int n = s.nedges(p);
      for (int e = 0; e < n; ++e) {
        cx A = s.vertex(p, e), B = s.vertex(p, e + 1);
        if (std::abs((dir * std::conj(B - A)).imag()) <
            1e-9 * std::abs(B - A))
          continue; // flow parallel to the edge
        for (double f : {0.2337, 0.5001, 0.7663}) {
          SurfacePoint start{p, A + f * (B - A)};
          // shoot into the polygon side of the edge
          cx inward = cx{0, 1} * (B - A) / std::abs(B - A);
          cx d0 = (dir * std::conj(inward)).real() >= 0.0 ? dir : -dir;
          RayResult r;
          try {
            r = trace_ray(s, start, d0, max_circumference, 1e-9);
          } catch (const std::runtime_error&) {
            continue;
          }
          if (r.stop != RayResult::Stop::Closed) continue;
          double circ = r.length;
          // dedupe: same circumference and the new core lies inside a found one
          bool dup = false;
          for (auto& c : found)
            if (std::abs(c.circumference - circ) < 1e-6 * (1.0 + circ)) dup = true;
          if (dup) continue;
          FlatCylinder cyl;
          cyl.circumference = circ;
          cyl.theta = theta;
          // move off the boundary edge before sweeping the transversal
          SurfacePoint core{start.poly, start.z + 1e-7 * d0};
          cyl.core_point = core;
          // width on each side by bisection on the perpendicular offset
          double wmax = area / circ + 1e-9;
          auto closes = [&](double w, cx side) -> bool {
            auto pt = advance(s, core, side, w);
            if (!pt) return false;
            try {
              auto rr = trace_ray(s, *pt, d0, 2.0 * circ + 1.0, 1e-9);
              return rr.stop == RayResult::Stop::Closed &&
                     std::abs(rr.length - circ) < 1e-6 * (1.0 + circ);
            } catch (const std::runtime_error&) {
              return false;
            }
          };
          double width = 0.0;
          bool wrapped = false;
          double side_width[2] = {0.0, 0.0};
          int side_idx = 0;
          for (cx side : {cx{0, 1} * d0, cx{0, -1} * d0}) {
            // march outward to the first failing offset, then bisect; the
            // transversal may re-enter the same cylinder after wrapping, so a
            // plain bisection over [0, wmax] is not valid
            int steps = 64;
            double lo = 0.0, hi = -1.0;
            for (int i = 1; i <= steps; ++i) {
              double w = wmax * double(i) / double(steps);
              if (closes(std::min(w, wmax * (1.0 - 1e-9)), side))
                lo = w;
              else {
                hi = w;
                break;
              }
            }
            if (hi < 0.0) {
              // no failure anywhere: the transversal wraps around (torus case)
              width = wmax;
              wrapped = true;
              break;
            }
            for (int it = 0; it < 50; ++it) {
              double mid = (lo + hi) / 2.0;
              if (closes(mid, side))
                lo = mid;
              else
                hi = mid;
            }
            width += lo;
            side_width[side_idx++] = lo;
          }
          cyl.width = std::min(width, wmax);
          // first return certificate at interior offsets of each side
          cyl.certified = true;
          for (double f : {0.3, 0.7}) {
            if (wrapped) {
              if (!closes(f * cyl.width * 0.999, cx{0, 1} * d0))
                cyl.certified = false;
            } else {
              if (!closes(f * side_width[0], cx{0, 1} * d0)) cyl.certified = false;
              if (!closes(f * side_width[1], cx{0, -1} * d0)) cyl.certified = false;
            }
          }
          found.push_back(cyl);
        }
      }
    }
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

} // namespace eslab
