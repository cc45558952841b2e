// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Expected values come from closed forms or from the
// planar oracles in oracles.hpp, never from the library itself.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "weylindex/error.hpp"
#include "weylindex/indices.hpp"

using namespace weylindex;

namespace {

WeightVector w(std::initializer_list<Rational> xs) { return WeightVector(xs); }

// Collects mismatches for one criterion.
struct Check {
  std::ostringstream notes;
  int failures = 0;

  void equal(const Rational& got, const Rational& want, const std::string& what) {
    if (got == want) return;
    if (failures++ < 5) notes << "\n    " << what << ": got " << to_string(got) << ", expected " << to_string(want);
  }
  void truth(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 5) notes << "\n    " << what;
  }
};

struct Member {
  std::string name;
  RootSystem rs;
  LatticeSpec lattice;
  std::vector<WeightVector> weights;
  bool regular;
};

RootSystem group(std::vector<CartanType> factors, int central = 0) { return build_root_system(factors, central); }

// Suite used by criteria 4, 5, 9 and 10.
std::vector<Member> suite() {
  std::vector<Member> out;
  auto a1 = group({{'A', 1}});
  for (int m = 1; m <= 3; ++m) out.push_back({"A1 m=" + std::to_string(m), a1, LatticeSpec::simply_connected(a1), {w({m})}, true});
  auto a1a1 = group({{'A', 1}, {'A', 1}});
  out.push_back({"A1xA1", a1a1, LatticeSpec::simply_connected(a1a1), {w({1, 1})}, true});
  auto a2 = group({{'A', 2}});
  out.push_back({"A2 hexagon (adjoint)", a2, LatticeSpec::adjoint(a2), {w({1, 1})}, true});
  out.push_back({"A2 hexagon (simply connected)", a2, LatticeSpec::simply_connected(a2), {w({1, 1})}, false});
  auto b2 = group({{'B', 2}});
  out.push_back({"B2", b2, LatticeSpec::simply_connected(b2), {w({1, 1})}, true});
  auto a1t = group({{'A', 1}}, 1);
  // Segment [-w1, w1] at heights 0 and 1 of the central direction.
  out.push_back({"A1xT1 prism", a1t, LatticeSpec::simply_connected(a1t), {w({1, 0}), w({1, 1})}, false});
  return out;
}

bool criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    ++check.failures;
    check.notes << "\n    exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d. %s (%.2fs)%s\n", check.failures ? "FAIL" : "PASS", number, title.c_str(), secs,
              check.notes.str().c_str());
  std::fflush(stdout);
  return check.failures == 0;
}

std::vector<oracle::Pt> planar(const std::vector<WeightVector>& v) {
  std::vector<oracle::Pt> out;
  for (const auto& x : v) out.emplace_back(x[0], x[1]);
  return out;
}

MultiPoly random_homogeneous(std::mt19937_64& rng, std::size_t k, int d) {
  MultiPoly p(k);
  std::uniform_int_distribution<int> terms(1, 6), coeff(-20, 20);
  for (int t = terms(rng); t > 0; --t) {
    std::vector<int> e(k, 0);
    for (int left = d; left > 0; --left) ++e[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
    p.add_term(e, Rational(coeff(rng), std::uniform_int_distribution<int>(1, 5)(rng)));
  }
  return p;
}

std::vector<WeightVector> random_lattice_points(std::mt19937_64& rng, std::size_t k, int count, int span) {
  std::uniform_int_distribution<int> c(-span, span);
  std::vector<WeightVector> pts;
  for (int i = 0; i < count; ++i) {
    WeightVector v(k);
    for (auto& x : v) x = c(rng);
    pts.push_back(v);
  }
  return pts;
}

// Volume of the hull of points in R^3 as a signed sum of pyramids from the
// origin over the facets. Facets are found by brute force: every triple
// whose plane leaves all points on one side spans one, and each plane is
// counted once.
Rational brute_volume_3d(const std::vector<WeightVector>& pts) {
  auto sub3 = [](const WeightVector& a, const WeightVector& b) { return WeightVector{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto cross3 = [](const WeightVector& a, const WeightVector& b) {
    return WeightVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot3 = [](const WeightVector& a, const WeightVector& b) { return Rational(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]); };
  Rational total = 0;
  const std::size_t n = pts.size();
  std::set<std::pair<WeightVector, Rational>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        auto normal = cross3(sub3(pts[j], pts[i]), sub3(pts[l], pts[i]));
        if (normal == WeightVector{0, 0, 0}) continue;
        Rational off = dot3(normal, pts[i]);
        int above = 0, below = 0;
        for (const auto& p : pts) {
          Rational s = dot3(normal, p) - off;
          above += s > 0;
          below += s < 0;
        }
        if (above && below) continue;
        if (above) {
          normal = {-normal[0], -normal[1], -normal[2]};
          off = -off;
        }
        // Normalize so the plane is recorded once.
        Rational g = 0;
        for (const auto& x : normal)
          if (x != 0) {
            g = abs(x);
            break;
          }
        WeightVector key{normal[0] / g, normal[1] / g, normal[2] / g};
        if (!planes.insert({key, off / g}).second) continue;
        // Face polygon: points on the plane, projected to the two coordinates
        // where the normal's largest component is dropped.
        std::vector<WeightVector> face;
        for (const auto& p : pts)
          if (dot3(normal, p) == off) face.push_back(p);
        std::size_t drop = 0;
        for (std::size_t c = 1; c < 3; ++c)
          if (abs(normal[c]) > abs(normal[drop])) drop = c;
        std::vector<oracle::Pt> proj;
        for (const auto& p : face) {
          WeightVector q;
          for (std::size_t c = 0; c < 3; ++c)
            if (c != drop) q.push_back(p[c]);
          proj.emplace_back(q[0], q[1]);
        }
        // Projected area = true area * |n_drop| / |n|; the pyramid from the
        // origin has volume (1/3) * area * distance = (1/3) * proj_area * off / |n_drop|.
        total += oracle::area(proj) * (off) / abs(normal[drop]) / 3;
      }
  // Coplanar input finds a single plane and encloses nothing.
  return planes.size() < 4 ? Rational(0) : total;
}

}  // namespace

int main() {
  int failed = 0;
  auto record = [&](bool ok) { failed += ok ? 0 : 1; };
  auto A1 = group({{'A', 1}});
  auto A1sc = LatticeSpec::simply_connected(A1);

  record(criterion(1, "rank-1 family: A1, lambda = m w1, m = 1..5", [&](Check& c) {
    auto start = std::chrono::steady_clock::now();
    for (int m = 1; m <= 5; ++m) {
      std::vector<WeightVector> lambda{w({m})};
      const std::string tag = " (m=" + std::to_string(m) + ")";
      c.equal(degree(A1, A1sc, lambda).value, 2 * m * m * m, "degree" + tag);
      c.equal(chern_index(A1, A1sc, lambda, 1).value, 4 * m * m, "chern_index(1)" + tag);
      c.equal(chern_index(A1, A1sc, lambda, 2).value, 4 * m, "chern_index(2)" + tag);
      c.equal(euler_characteristic(A1, A1sc, lambda).value, 2 * m * m * m - 4 * m * m + 4 * m, "euler" + tag);
    }
    c.equal(degree(A1, A1sc, {w({1})}).value, 2, "quadric surface in P^3");
    c.truth(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "took longer than 1 s");
  }));

  record(criterion(2, "product group: A1xA1, lambda = (1,1), degree 80", [&](Check& c) {
    auto start = std::chrono::steady_clock::now();
    auto rs = group({{'A', 1}, {'A', 1}});
    // Segre-type product of two quadrics in P^3: C(6,3) * 2 * 2.
    Rational product_oracle = oracle::factorial(6) / (oracle::factorial(3) * oracle::factorial(3)) * 2 * 2;
    c.equal(degree(rs, LatticeSpec::simply_connected(rs), {w({1, 1})}).value, product_oracle, "degree");
    c.truth(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "took longer than 1 s");
  }));

  record(criterion(3, "lattice normalization: A2 standard representation", [&](Check& c) {
    auto start = std::chrono::steady_clock::now();
    auto rs = group({{'A', 2}});
    std::vector<WeightVector> weights{w({1, 0}), w({-1, 1}), w({0, -1})};
    c.equal(degree(rs, LatticeSpec::adjoint(rs), weights).value, 1, "adjoint lattice (PGL3 closure = P^8)");
    c.equal(degree(rs, LatticeSpec::simply_connected(rs), weights).value, 3, "simply connected lattice");
    c.truth(std::chrono::steady_clock::now() - start < std::chrono::seconds(5), "took longer than 5 s");
  }));

  const auto members = suite();

  record(criterion(4, "i = 0 reduction: chern_index(0) = degree", [&](Check& c) {
    for (const auto& m : members) {
      c.equal(chern_index(m.rs, m.lattice, m.weights, 0).value, degree(m.rs, m.lattice, m.weights).value, m.name);
    }
  }));

  record(criterion(5, "dual-path equivalence on regular members", [&](Check& c) {
    auto start = std::chrono::steady_clock::now();
    for (const auto& m : members) {
      if (!m.regular) continue;
      const int top = m.rs.dimension() - m.rs.total_rank;
      for (int i = 0; i <= top; ++i)
        c.equal(chern_index_flag_path(m.rs, m.lattice, m.weights, i).value,
                chern_index(m.rs, m.lattice, m.weights, i).value, m.name + " i=" + std::to_string(i));
    }
    c.truth(std::chrono::steady_clock::now() - start < std::chrono::seconds(60), "took longer than 60 s");
  }));

  record(criterion(6, "quadrature oracle: 200 random homogeneous polynomials", [&](Check& c) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t k = 1 + trial % 3;
      const int d = std::uniform_int_distribution<int>(0, 8)(rng);
      auto p = random_homogeneous(rng, k, d);
      Simplex s;
      for (;;) {
        std::vector<WeightVector> pts(k + 1, WeightVector(k));
        for (auto& pt : pts)
          for (auto& x : pt) x = oracle::random_rational(rng, 3, 5);
        try {
          s = make_simplex(pts);
          break;
        } catch (const Error&) {
        }
      }
      auto lat = LatticeSpec::standard(k);
      c.equal(integrate_simplex_polarization(p, s, lat), integrate_simplex_monomial(p, s, lat),
              "trial " + std::to_string(trial));
    }
  }));

  record(criterion(7, "torus reduction and mixed volume", [&](Check& c) {
    std::mt19937_64 rng(77);
    for (int n : {2, 3}) {
      auto rs = group({}, n);
      auto lat = LatticeSpec::simply_connected(rs);
      for (int trial = 0; trial < 6; ++trial) {
        auto pts = random_lattice_points(rng, n, n == 2 ? 6 : 7, 2);
        Rational vol = n == 2 ? oracle::area(planar(pts)) : brute_volume_3d(pts);
        if (vol == 0) continue;
        const std::string tag = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
        Rational expected = oracle::factorial(n) * vol;
        c.equal(degree(rs, lat, pts).value, expected, "degree " + tag);
        for (int i = 1; i <= n; ++i) c.equal(chern_index(rs, lat, pts, i).value, 0, "chern " + std::to_string(i) + " " + tag);
        c.equal(euler_characteristic(rs, lat, pts).value, n % 2 ? expected : Rational(-expected), "euler " + tag);
      }
    }
    auto rs = group({}, 2);
    auto lat = LatticeSpec::simply_connected(rs);
    for (int trial = 0; trial < 8; ++trial) {
      auto p = random_lattice_points(rng, 2, 5, 2), q = random_lattice_points(rng, 2, 4, 2);
      c.equal(mixed_degree(rs, lat, {p, q}).value, oracle::mixed_area(planar(p), planar(q)),
              "mixed " + std::to_string(trial));
    }
  }));

  record(criterion(8, "combinatorial invariants", [&](Check& c) {
    struct Order {
      std::vector<CartanType> factors;
      long order;
    };
    for (const auto& o : {Order{{{'A', 1}}, 2}, Order{{{'A', 2}}, 6}, Order{{{'B', 2}}, 8}, Order{{{'G', 2}}, 12},
                          Order{{{'A', 1}, {'A', 1}}, 4}}) {
      auto rs = group(o.factors);
      c.equal(weyl_order(rs), o.order, "|W| " + rs.describe());
      c.equal(rs.dimension(), rs.total_rank + 2 * static_cast<long>(rs.positive_roots.size()), "n " + rs.describe());
    }
    for (const auto& m : members) {
      if (!m.regular) continue;
      auto p = weight_polytope(m.rs, m.lattice, m.weights);
      auto flags = flag_subdivision(p, m.rs, m.lattice);
      Rational tiled = 0;
      for (const auto& f : flags) {
        Rational vol = lattice_volume(f.simplex, m.lattice);
        tiled += vol;
        c.equal(f.coefficient, oracle::factorial(m.rs.total_rank) * vol, "c_F " + m.name);
      }
      // Oracle for P cap D's volume: in rank <= 2 the shoelace area of the
      // chamber-cut vertices, divided by the lattice covolume.
      auto cut = intersect_chamber(p, m.rs);
      Rational target = m.rs.total_rank == 1 ? Rational(cut.vertices.back()[0] - cut.vertices.front()[0])
                                             : oracle::area(planar(cut.vertices));
      c.equal(tiled, target / m.lattice.covolume, "tiling " + m.name);
      if (m.name == "A2 hexagon (adjoint)") c.equal(static_cast<long>(flags.size()), 2, "hexagon flag triangles");
    }
  }));

  record(criterion(9, "invariance suite", [&](Check& c) {
    for (const auto& m : members) {
      auto p = weight_polytope(m.rs, m.lattice, m.weights);
      auto fxx = diagonal(build_F(m.rs));
      if (p.full_dimensional() && m.rs.total_rank == 2) {
        auto centred = integrate_simplices(fxx, triangulate_from(p, p.vertex_barycenter()), m.lattice);
        c.equal(integrate_simplices(fxx, triangulate(p), m.lattice), centred, "triangulation " + m.name);
      }
      if (m.rs.central_rank == 0) {
        auto whole = integrate_polytope(fxx, p).value;
        auto chamber = integrate_polytope(fxx, intersect_chamber(p, m.rs)).value;
        c.equal(chamber * weyl_order(m.rs), whole, "Weyl quotient " + m.name);
      }
      auto scaled = m.rs;
      for (std::size_t f = 0; f < m.rs.factors.size(); ++f) scaled = rescale_factor(scaled, f, Rational(3 + 2 * f, 2));
      c.equal(degree(scaled, m.lattice, m.weights).value, degree(m.rs, m.lattice, m.weights).value, "rescaled degree " + m.name);
      c.equal(euler_characteristic(scaled, m.lattice, m.weights).value,
              euler_characteristic(m.rs, m.lattice, m.weights).value, "rescaled euler " + m.name);
      if (m.weights.size() == 1) {
        const int n = m.rs.dimension();
        Rational factor = 1;
        for (int j = 0; j < n; ++j) factor *= 2;
        c.equal(degree(m.rs, m.lattice, {scale(m.weights[0], 2)}).value, factor * degree(m.rs, m.lattice, m.weights).value,
                "dilation " + m.name);
      }
    }
  }));

  record(criterion(10, "integrality of every reported value", [&](Check& c) {
    for (const auto& m : members) {
      const int top = m.rs.dimension() - m.rs.total_rank;
      std::vector<std::pair<std::string, Rational>> values{
          {"degree", degree(m.rs, m.lattice, m.weights).value},
          {"euler", euler_characteristic(m.rs, m.lattice, m.weights).value}};
      for (int i = 0; i <= top; ++i) {
        values.emplace_back("chern " + std::to_string(i), chern_index(m.rs, m.lattice, m.weights, i).value);
        if (m.regular)
          values.emplace_back("flag chern " + std::to_string(i),
                              chern_index_flag_path(m.rs, m.lattice, m.weights, i).value);
      }
      for (const auto& [what, v] : values) c.truth(is_integer(v), m.name + " " + what + " = " + to_string(v));
    }
  }));

  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
