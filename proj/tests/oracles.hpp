#pragma once

// Test-side reference implementations. Nothing in here calls into the
// library: the point is to have a second, dumber computation to compare
// against. Planar only, which is all the oracles need.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Pt = std::pair<Q, Q>;

inline Q cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<Pt> hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline Q shoelace(const std::vector<Pt>& poly) {
  Q twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += a.first * b.second - a.second * b.first;
  }
  return abs(twice) / 2;
}

// Minkowski sum of two convex CCW polygons by merging edge sequences.
inline std::vector<Pt> minkowski(const std::vector<Pt>& p, const std::vector<Pt>& q) {
  if (p.size() < 3 || q.size() < 3) {
    std::vector<Pt> all;
    for (const auto& a : p)
      for (const auto& b : q) all.emplace_back(a.first + b.first, a.second + b.second);
    return hull(all);
  }
  auto lowest = [](const std::vector<Pt>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::make_pair(v[i].second, v[i].first) < std::make_pair(v[best].second, v[best].first)) best = i;
    return best;
  };
  std::size_t i = lowest(p), j = lowest(q), a = 0, b = 0;
  std::vector<Pt> out;
  while (a < p.size() || b < q.size()) {
    const Pt& pi = p[(i + a) % p.size()];
    const Pt& qj = q[(j + b) % q.size()];
    out.emplace_back(pi.first + qj.first, pi.second + qj.second);
    const Pt& pn = p[(i + a + 1) % p.size()];
    const Pt& qn = q[(j + b + 1) % q.size()];
    Pt ep{pn.first - pi.first, pn.second - pi.second};
    Pt eq{qn.first - qj.first, qn.second - qj.second};
    Q c = ep.first * eq.second - ep.second * eq.first;
    if (b == q.size() || (a < p.size() && c > 0))
      ++a;
    else if (a == p.size() || c < 0)
      ++b;
    else
      ++a, ++b;
  }
  return hull(out);
}

inline Q area(const std::vector<Pt>& pts) { return shoelace(hull(pts)); }

// MV(P, Q) = Area(P + Q) - Area(P) - Area(Q), normalized so MV(P, P) = 2 Area(P).
inline Q mixed_area(const std::vector<Pt>& p, const std::vector<Pt>& q) {
  auto hp = hull(p), hq = hull(q);
  return shoelace(minkowski(hp, hq)) - shoelace(hp) - shoelace(hq);
}

inline Q factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Q(f);
}

// Integral over [0, m] of sum_j c_j t^j.
inline Q integrate_interval(const std::vector<Q>& coeffs, const Q& m) {
  Q total = 0, power = m;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    total += coeffs[j] * power / Q(static_cast<long>(j + 1));
    power *= m;
  }
  return total;
}

// Small rational in [-span, span] with denominator up to `den`.
inline Q random_rational(std::mt19937_64& rng, int span, int den) {
  std::uniform_int_distribution<int> d(1, den);
  int q = d(rng);
  std::uniform_int_distribution<int> n(-span * q, span * q);
  Q r(n(rng), q);
  r.canonicalize();
  return r;
}

}  // namespace oracle
