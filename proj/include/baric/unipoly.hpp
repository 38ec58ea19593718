#pragma once

// Univariate polynomials over Q(l) and exact root finding in Q(l).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baric/linalg.hpp"
#include "baric/numberfield.hpp"

namespace baric {

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(std::initializer_list<FieldElement> ascending)
      : c_(ascending) {
    trim();
  }
  explicit UniPoly(std::vector<FieldElement> ascending)
      : c_(std::move(ascending)) {
    trim();
  }

  static UniPoly constant(const FieldElement &c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({FieldElement(0), FieldElement(1)}); }
  /// X - root.
  static UniPoly linear_factor(const FieldElement &root) {
    return UniPoly({-root, FieldElement(1)});
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<FieldElement> &coefficients() const { return c_; }
  FieldElement coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : FieldElement(0);
  }
  const FieldElement &leading() const {
    if (c_.empty())
      throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UniPoly monic() const {
    if (is_zero())
      return *this;
    FieldElement inv = leading().inverse();
    return inv * *this;
  }

  UniPoly conj() const {
    std::vector<FieldElement> out;
    out.reserve(c_.size());
    for (const auto &a : c_)
      out.push_back(a.conj());
    return UniPoly(std::move(out));
  }

  FieldElement operator()(const FieldElement &x) const {
    FieldElement acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  Matrix<FieldElement> operator()(const Matrix<FieldElement> &m) const {
    Matrix<FieldElement> acc(m.rows(), m.cols());
    const auto id = Matrix<FieldElement>::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * m + (*it) * id;
    return acc;
  }

  friend UniPoly operator+(const UniPoly &p, const UniPoly &q) {
    std::vector<FieldElement> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = p.coeff(i) + q.coeff(i);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly &p, const UniPoly &q) {
    std::vector<FieldElement> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = p.coeff(i) - q.coeff(i);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const FieldElement &s, const UniPoly &p) {
    std::vector<FieldElement> out = p.c_;
    for (auto &a : out)
      a *= s;
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const UniPoly &p, const UniPoly &q) {
    if (p.is_zero() || q.is_zero())
      return {};
    std::vector<FieldElement> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i].is_zero())
        continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j)
        out[i + j] += p.c_[i] * q.c_[j];
    }
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly &p, const UniPoly &q) {
    return p.c_ == q.c_;
  }
  friend bool operator!=(const UniPoly &p, const UniPoly &q) {
    return !(p == q);
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero())
      c_.pop_back();
  }

  std::vector<FieldElement> c_;
};

/// Euclidean division: returns (quotient, remainder).
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<FieldElement> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db)
    return {UniPoly(), a};
  std::vector<FieldElement> quot(a.degree() - db + 1);
  const FieldElement inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    FieldElement f = rem[k] * inv;
    if (f.is_zero())
      continue;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] -= f * b.coeff(j);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline bool divides(const UniPoly &d, const UniPoly &p) {
  return divmod(p, d).second.is_zero();
}

inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Polynomial in `var`, highest degree first, e.g. "X^3 - 3/2*X^2 + 1/2*X".
inline std::string format(const UniPoly &p, const std::string &var = "X") {
  if (p.is_zero())
    return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    FieldElement c = p.coeff(d);
    if (c.is_zero())
      continue;
    bool negative = (c.is_rational() && sgn(c.rational_part()) < 0) ||
                    (sgn(c.rational_part()) == 0 && sgn(c.lambda_part()) < 0);
    FieldElement mag = negative ? -c : c;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string monomial = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
    std::string coef = format(mag);
    bool composite = sgn(mag.rational_part()) != 0 && sgn(mag.lambda_part()) != 0;
    if (composite)
      coef = "(" + coef + ")";
    if (monomial.empty())
      out += coef;
    else if (mag == FieldElement(1))
      out += monomial;
    else
      out += coef + "*" + monomial;
  }
  return out;
}

/// Monic minimal polynomial of a square matrix (Krylov on matrix powers).
inline UniPoly minimal_polynomial(const Matrix<FieldElement> &m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw std::invalid_argument("minimal polynomial of non-square matrix");
  if (n == 0)
    return UniPoly::constant(FieldElement(1));
  std::vector<Vector<FieldElement>> powers;
  auto flat = [n](const Matrix<FieldElement> &a) {
    Vector<FieldElement> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v.push_back(a(i, j));
    return v;
  };
  Matrix<FieldElement> power = Matrix<FieldElement>::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector<FieldElement> target = flat(power);
    if (!powers.empty()) {
      auto basis = Matrix<FieldElement>::from_columns(n * n, powers);
      if (auto sol = solve(basis, target)) {
        std::vector<FieldElement> coeffs(k + 1);
        for (std::size_t i = 0; i < k; ++i)
          coeffs[i] = -(*sol)[i];
        coeffs[k] = FieldElement(1);
        return UniPoly(std::move(coeffs));
      }
    }
    powers.push_back(std::move(target));
    power = power * m;
  }
  throw std::logic_error("minimal polynomial: Cayley-Hamilton bound exceeded");
}

namespace detail {

/// Positive divisors of |n| (n != 0). Trial division; cofactors left after
/// 10^6 must be prime or the search is refused.
inline std::vector<Integer> divisors(const Integer &n) {
  Integer m = abs(n);
  if (m == 0)
    throw std::invalid_argument("divisors of zero");
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= m && p <= 1000000; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e)
      factors.emplace_back(p, e);
  }
  if (m > 1) {
    if (m > Integer(1000000) * 1000000 &&
        mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
      throw std::runtime_error("root search: coefficient too large to factor");
    factors.emplace_back(m, 1);
  }
  std::vector<Integer> out{1};
  for (const auto &[p, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<Rational> rational_sqrt(const Rational &q) {
  if (sgn(q) < 0)
    return std::nullopt;
  Integer num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

/// Integer coefficients of c * g for g with rational coefficients, made
/// primitive with positive leading coefficient.
inline std::vector<Integer> primitive_integer(const UniPoly &g) {
  Integer lcm = 1;
  for (const auto &c : g.coefficients())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
            c.rational_part().get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto &c : g.coefficients()) {
    Rational scaled = c.rational_part() * lcm;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(out.back()) < 0)
    content = -content;
  for (auto &c : out)
    c /= content;
  return out;
}

inline Integer eval_int(const std::vector<Integer> &c, const Integer &x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

} // namespace detail

/// Distinct roots of p lying in Q(l), in a deterministic order.
///
/// Method: every root r of p is a root of the rational polynomial
/// g = p * conj(p). Rational roots come from the rational root theorem;
/// a root a + b*l with b != 0 has a monic quadratic minimal polynomial over
/// Q dividing g, found by Kronecker interpolation at two integer points
/// with the leading coefficient running over divisors of lc(g).
inline std::vector<FieldElement> roots_in_field(UniPoly p) {
  if (p.is_zero())
    throw std::invalid_argument("roots of the zero polynomial");
  std::vector<FieldElement> roots;
  auto add = [&roots](const FieldElement &r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end())
      roots.push_back(r);
  };
  if (p.degree() >= 1 && p.coeff(0).is_zero()) {
    add(FieldElement(0));
    while (p.coeff(0).is_zero())
      p = divmod(p, UniPoly::x()).first;
  }
  if (p.degree() < 1)
    return roots;

  UniPoly g = p * p.conj();
  for (const auto &c : g.coefficients())
    if (!c.is_rational())
      throw std::logic_error("norm polynomial is not rational");
  const std::vector<Integer> gi = detail::primitive_integer(g);
  const Integer lead = gi.back();
  const Integer tail = gi.front();

  const auto lead_divs = detail::divisors(lead);
  for (const auto &d : detail::divisors(tail))
    for (const auto &e : lead_divs)
      for (int sign : {1, -1}) {
        FieldElement r(Rational(Integer(sign * d), e));
        if (p(r).is_zero())
          add(r);
      }

  std::vector<Integer> points;
  for (long x = 1; points.size() < 2; x = x > 0 ? -x : -x + 1)
    if (detail::eval_int(gi, x) != 0)
      points.push_back(x);
  const Integer x0 = points[0], x1 = points[1];
  const auto divs0 = detail::divisors(detail::eval_int(gi, x0));
  const auto divs1 = detail::divisors(detail::eval_int(gi, x1));
  for (const auto &c2 : lead_divs)
    for (const auto &d0 : divs0)
      for (int s0 : {1, -1})
        for (const auto &d1 : divs1)
          for (int s1 : {1, -1}) {
            // q(x) = c2 x^2 + c1 x + c0 through (x0, v0), (x1, v1)
            Integer v0 = s0 * d0, v1 = s1 * d1;
            Integer r0 = v0 - c2 * x0 * x0, r1 = v1 - c2 * x1 * x1;
            Integer num = r1 - r0, den = x1 - x0;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
              continue;
            Integer c1 = num / den;
            Integer c0 = r0 - c1 * x0;
            Rational s(Integer(-c1), c2), n(c0, c2);
            s.canonicalize();
            n.canonicalize();
            // roots a + b l with trace 2a - b/2 = s and discriminant -23 b^2 / 4
            Rational disc = s * s - 4 * n;
            if (sgn(disc) >= 0)
              continue;
            auto b = detail::rational_sqrt(Rational(-4 * disc / 23));
            if (!b)
              continue;
            for (int sb : {1, -1}) {
              Rational bb = sb * *b;
              Rational a = (s + bb / 2) / 2;
              FieldElement r(a, bb);
              if (p(r).is_zero())
                add(r);
            }
          }
  return roots;
}

/// Multiplicity of `root` in p (p nonzero).
inline unsigned multiplicity(UniPoly p, const FieldElement &root) {
  unsigned k = 0;
  const UniPoly f = UniPoly::linear_factor(root);
  for (;;) {
    auto [q, r] = divmod(p, f);
    if (!r.is_zero())
      return k;
    p = std::move(q);
    ++k;
  }
}

} // namespace baric
