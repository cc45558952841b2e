#include "weylindex/rational.hpp"

#include <cctype>

#include "weylindex/error.hpp"

namespace weylindex {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_cartan_type: return "invalid_cartan_type";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::malformed_rational: return "malformed_rational";
    case Errc::singular_lattice: return "singular_lattice";
    case Errc::not_full_dimensional: return "not_full_dimensional";
    case Errc::degenerate_simplex: return "degenerate_simplex";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::wrong_argument_count: return "wrong_argument_count";
    case Errc::not_weyl_invariant: return "not_weyl_invariant";
    case Errc::not_regular: return "not_regular";
    case Errc::orthogonal_point_not_found: return "orthogonal_point_not_found";
    case Errc::tiling_mismatch: return "tiling_mismatch";
    case Errc::weight_outside_lattice: return "weight_outside_lattice";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::config_invalid: return "config_invalid";
    case Errc::cross_check_failed: return "cross_check_failed";
  }
  return "unknown";
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::malformed_rational, "cannot parse '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::malformed_rational, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const WeightVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational dot(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "sum of vectors of different length");
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "difference of vectors of different length");
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

WeightVector scale(const WeightVector& a, const Rational& s) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const WeightVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

WeightVector primitive_integer(const WeightVector& v) {
  if (is_zero(v)) return v;
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  WeightVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

}  // namespace weylindex
