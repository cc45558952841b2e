#include "weylindex/polyalg.hpp"

#include <numeric>

#include "weylindex/error.hpp"

namespace weylindex {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::linear(const WeightVector& coeffs, const Rational& c) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  p.add_term(Exponent(coeffs.size(), 0), c);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(Errc::length_mismatch, "exponent vector has wrong length");
  Rational q = c;
  q.canonicalize();  // callers may build p/q without reducing
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

Rational MultiPoly::evaluate(const WeightVector& point) const {
  if (point.size() != nvars_) throw Error(Errc::length_mismatch, "evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t j = 0; j < nvars_; ++j)
      for (int r = 0; r < e[j]; ++r) t *= point[j];
    total += t;
  }
  return total;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw Error(Errc::length_mismatch, "adding polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw Error(Errc::length_mismatch, "subtracting polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(Errc::length_mismatch, "multiplying polynomials in different variables");
  MultiPoly out(a.nvars_);
  MultiPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    out += c.get_str();
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      out += "*x" + std::to_string(j);
      if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
  }
  return out;
}

MultiPoly build_F(const RootSystem& rs) {
  const std::size_t k = rs.total_rank;
  MultiPoly f = MultiPoly::constant(2 * k, 1);
  for (const auto& alpha : rs.positive_roots) {
    // (x, alpha) has coefficients gram * alpha on the x block.
    auto coeffs = linalg::apply(rs.gram, alpha);
    WeightVector xs(2 * k, Rational(0)), ys(2 * k, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      xs[j] = coeffs[j];
      ys[k + j] = coeffs[j];
    }
    Rational norm = inner_product(rs, rs.rho, alpha);
    f = f * MultiPoly::linear(xs) * MultiPoly::linear(ys);
    f *= 1 / (norm * norm);
  }
  return f;
}

MultiPoly directional_derivative(const MultiPoly& p, const WeightVector& v) {
  if (v.size() != p.nvars()) throw Error(Errc::length_mismatch, "direction has wrong length");
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (e[j] == 0 || v[j] == 0) continue;
      auto d = e;
      --d[j];
      out.add_term(d, c * e[j] * v[j]);
    }
  }
  return out;
}

MultiPoly apply_D(const RootSystem& rs, const MultiPoly& p) {
  const std::size_t k = rs.total_rank;
  if (p.nvars() != 2 * k) throw Error(Errc::length_mismatch, "apply_D expects a polynomial in 2k variables");
  MultiPoly out = p;
  for (const auto& alpha : rs.positive_roots) {
    WeightVector left(2 * k, Rational(0)), right(2 * k, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      left[j] = alpha[j];
      right[k + j] = alpha[j];
    }
    out += directional_derivative(out, left);
    out += directional_derivative(out, right);
  }
  return out;
}

MultiPoly diagonal(const MultiPoly& p) {
  if (p.nvars() % 2 != 0) throw Error(Errc::length_mismatch, "diagonal needs an even number of variables");
  const std::size_t k = p.nvars() / 2;
  MultiPoly out(k);
  MultiPoly::Exponent d(k);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < k; ++j) d[j] = e[j] + e[k + j];
    out.add_term(d, c);
  }
  return out;
}

MultiPoly graded_component(const MultiPoly& p, int d) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.add_term(e, c);
  return out;
}

MultiPoly substitute_linear(const MultiPoly& p, const linalg::Matrix& m) {
  const std::size_t n = p.nvars();
  if (m.size() != n) throw Error(Errc::length_mismatch, "substitution needs one row per variable");
  const std::size_t target = n ? m[0].size() : 0;
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t j = 0; j < n; ++j) powers[j].push_back(MultiPoly::constant(target, 1));
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t j = 0; j < n; ++j) {
      while (static_cast<int>(powers[j].size()) <= e[j])
        powers[j].push_back(powers[j].back() * MultiPoly::linear(m[j]));
      if (e[j] > 0) term = term * powers[j][e[j]];
    }
    out += term;
  }
  return out;
}

namespace {

void check_homogeneous(const MultiPoly& f, std::size_t count) {
  if (!f.is_homogeneous()) throw Error(Errc::not_homogeneous, "polarization needs a homogeneous polynomial");
  if (!f.is_zero() && static_cast<std::size_t>(f.degree()) != count)
    throw Error(Errc::wrong_argument_count, "polarization of a degree " + std::to_string(f.degree()) +
                                                " polynomial needs that many arguments, got " + std::to_string(count));
}

}  // namespace

Rational polarization_value(const MultiPoly& f, std::span<const WeightVector> args) {
  check_homogeneous(f, args.size());
  if (f.is_zero()) return 0;
  MultiPoly g = f;
  for (const auto& v : args) g = directional_derivative(g, v);
  return g.evaluate(WeightVector(f.nvars(), Rational(0))) / factorial(static_cast<long>(args.size()));
}

Rational polarization_value(const MultiPoly& f, std::span<const WeightVector> points,
                            std::span<const int> multiplicity) {
  if (points.size() != multiplicity.size())
    throw Error(Errc::wrong_argument_count, "one multiplicity per polarization point");
  const int count = std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
  check_homogeneous(f, static_cast<std::size_t>(count));
  if (f.is_zero()) return 0;
  MultiPoly g = f;
  for (std::size_t j = 0; j < points.size(); ++j)
    for (int r = 0; r < multiplicity[j] && !g.is_zero(); ++r) g = directional_derivative(g, points[j]);
  return g.evaluate(WeightVector(f.nvars(), Rational(0))) / factorial(count);
}

Rational complete_homogeneous_sum(int d, int s, const std::function<Rational(std::span<const int>)>& evaluator) {
  if (d < 0 || s < 1) throw Error(Errc::index_out_of_range, "complete homogeneous sum needs d >= 0 and s >= 1");
  std::vector<int> parts(s, 0);
  Rational total = 0;
  // Enumerate compositions of d into s parts in lexicographic order.
  std::function<void(int, int)> place = [&](int slot, int remaining) {
    if (slot == s - 1) {
      parts[slot] = remaining;
      total += evaluator(parts);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[slot] = v;
      place(slot + 1, remaining - v);
    }
  };
  place(0, d);
  return total;
}

std::vector<MultiPoly> graded_D_on_diagonal(const RootSystem& rs) {
  const int top = 2 * static_cast<int>(rs.positive_roots.size());
  auto full = diagonal(apply_D(rs, build_F(rs)));
  std::vector<MultiPoly> out;
  for (int i = 0; i <= top; ++i) out.push_back(graded_component(full, top - i));
  return out;
}

}  // namespace weylindex
