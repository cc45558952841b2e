#include "weylindex/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weylindex/error.hpp"

namespace weylindex {

std::string to_string(const CartanType& t) { return std::string(1, t.letter) + std::to_string(t.rank); }

linalg::Matrix cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;  // D3 = A3, D2 = A1 x A1
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw Error(Errc::invalid_cartan_type, "no simple Lie algebra of type " + to_string(t));

  linalg::Matrix a(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E': {
      const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (const auto& e : edges)
        if (e[0] < n && e[1] < n) link(e[0], e[1]);
      break;
    }
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

// Half squared lengths d_i with d_i a_ij = d_j a_ji, scaled so that long
// roots have squared length 2.
std::vector<Rational> symmetrizer(const linalg::Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      queue.push_back(j);
    }
  }
  Rational top = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= top;
  return d;
}

// Positive roots in simple-root coordinates by reflection closure.
std::vector<std::vector<long>> positive_roots_in_simple_coords(const linalg::Matrix& a) {
  const std::size_t n = a.size();
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a[i][j].get_num().get_si() * beta[j];
      auto image = beta;
      image[i] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](long c) { return c < 0; })) continue;
      if (std::all_of(image.begin(), image.end(), [](long c) { return c == 0; })) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RootSystem build_root_system(const std::vector<CartanType>& factors, int central_rank) {
  if (central_rank < 0) throw Error(Errc::invalid_cartan_type, "negative central rank");
  RootSystem rs;
  rs.factors = factors;
  rs.central_rank = central_rank;

  std::vector<linalg::Matrix> cartans;
  int semisimple = 0;
  for (const auto& f : factors) {
    cartans.push_back(cartan_matrix(f));
    rs.factor_offsets.push_back(static_cast<std::size_t>(semisimple));
    semisimple += f.rank;
  }
  const int k = semisimple + central_rank;
  rs.total_rank = k;
  rs.gram.assign(k, std::vector<Rational>(k, Rational(0)));
  for (int i = semisimple; i < k; ++i) rs.gram[i][i] = 1;

  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& a = cartans[f];
    const std::size_t r = a.size(), off = rs.factor_offsets[f];
    auto d = symmetrizer(a);

    // Column j of the Cartan matrix is alpha_j in fundamental weights.
    auto embed = [&](const std::vector<Rational>& local) {
      WeightVector v(k, Rational(0));
      for (std::size_t i = 0; i < r; ++i) v[off + i] = local[i];
      return v;
    };
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rational> col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = a[i][j];
      rs.simple_roots.push_back(embed(col));
    }
    for (const auto& beta : positive_roots_in_simple_coords(a)) {
      std::vector<Rational> local(r, Rational(0));
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) local[i] += a[i][j] * beta[j];
      rs.positive_roots.push_back(embed(local));
    }

    // gram = M^{-T} S M^{-1} with M = cartan (roots as columns) and
    // S_ij = (alpha_i, alpha_j) = d_i a_ij.
    linalg::Matrix s(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s[i][j] = d[i] * a[i][j];
    auto minv = *linalg::inverse(a);
    auto block = linalg::multiply(linalg::multiply(linalg::transpose(minv), s), minv);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) rs.gram[off + i][off + j] = block[i][j];
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  rs.rho.assign(k, Rational(0));
  for (const auto& alpha : rs.positive_roots) rs.rho = add(rs.rho, alpha);
  rs.rho = scale(rs.rho, Rational(1, 2));
  return rs;
}

std::string RootSystem::describe() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += to_string(f);
  }
  if (central_rank > 0) {
    if (!out.empty()) out += "x";
    out += "T" + std::to_string(central_rank);
  }
  return out.empty() ? "trivial" : out;
}

RootSystem rescale_factor(const RootSystem& rs, std::size_t factor, const Rational& scale_by) {
  if (factor >= rs.factors.size()) throw Error(Errc::index_out_of_range, "no simple factor " + std::to_string(factor));
  if (scale_by <= 0) throw Error(Errc::index_out_of_range, "invariant form scale must be positive");
  RootSystem out = rs;
  const std::size_t off = rs.factor_offsets[factor], r = rs.factors[factor].rank;
  for (std::size_t i = off; i < off + r; ++i)
    for (std::size_t j = off; j < off + r; ++j) out.gram[i][j] *= scale_by;
  return out;
}

Rational inner_product(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  const std::size_t k = rs.total_rank;
  if (v.size() != k || w.size() != k)
    throw Error(Errc::length_mismatch, "expected vectors of length " + std::to_string(k));
  return dot(v, linalg::apply(rs.gram, w));
}

WeightVector reflect(const RootSystem& rs, std::size_t i, const WeightVector& v) {
  Rational c = v[i];
  if (c == 0) return v;
  return sub(v, scale(rs.simple_roots[i], c));
}

std::vector<WeightVector> weyl_orbit(const RootSystem& rs, const WeightVector& v) {
  if (v.size() != static_cast<std::size_t>(rs.total_rank))
    throw Error(Errc::length_mismatch, "weight " + to_string(v) + " has wrong length");
  std::set<WeightVector> seen{v};
  std::deque<WeightVector> queue{v};
  const std::size_t simple = rs.simple_roots.size();
  while (!queue.empty()) {
    auto u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < simple; ++i) {
      auto w = reflect(rs, i, u);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

long weyl_order(const RootSystem& rs) { return static_cast<long>(weyl_orbit(rs, rs.rho).size()); }

bool is_dominant(const RootSystem& rs, const WeightVector& v) {
  for (int i = 0; i < rs.semisimple_rank(); ++i)
    if (v[i] < 0) return false;
  return true;
}

std::vector<Halfspace> chamber_inequalities(const RootSystem& rs) {
  std::vector<Halfspace> out;
  for (int i = 0; i < rs.semisimple_rank(); ++i) {
    WeightVector n(rs.total_rank, Rational(0));
    n[i] = -1;
    out.push_back({std::move(n), Rational(0)});
  }
  return out;
}

LatticeSpec LatticeSpec::from_basis(linalg::Matrix basis, std::string name) {
  auto inv = linalg::inverse(basis);
  if (!inv) throw Error(Errc::singular_lattice, "lattice basis matrix is singular");
  LatticeSpec l;
  l.covolume = abs(linalg::determinant(basis));
  l.basis = std::move(basis);
  l.basis_inverse = std::move(*inv);
  l.name = std::move(name);
  return l;
}

LatticeSpec LatticeSpec::standard(std::size_t dim) { return from_basis(linalg::identity(dim), "standard"); }

LatticeSpec LatticeSpec::simply_connected(const RootSystem& rs) {
  return from_basis(linalg::identity(rs.total_rank), "simply_connected");
}

LatticeSpec LatticeSpec::adjoint(const RootSystem& rs) {
  auto b = linalg::identity(rs.total_rank);
  for (std::size_t j = 0; j < rs.simple_roots.size(); ++j)
    for (int i = 0; i < rs.total_rank; ++i) b[i][j] = rs.simple_roots[j][i];
  return from_basis(std::move(b), "adjoint");
}

bool LatticeSpec::contains(const WeightVector& v) const {
  for (const auto& c : coordinates(v))
    if (!is_integer(c)) return false;
  return true;
}

Halfspace LatticeSpec::primitive(const Halfspace& h) const {
  if (is_zero(h.normal)) return h;
  // Pairing of the covector with the lattice basis vectors.
  WeightVector u(basis.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) u[j] += h.normal[i] * basis[i][j];
  auto p = primitive_integer(u);
  std::size_t j = 0;
  while (u[j] == 0) ++j;
  Rational s = p[j] / u[j];
  return {scale(h.normal, s), h.offset * s};
}

}  // namespace weylindex
