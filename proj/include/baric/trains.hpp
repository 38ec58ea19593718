#pragma once

// Principal train equations: discovery by exact linear solving, the
// phi_alpha operators on K[X], and the rank-3/4/n train forms.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/identities.hpp"
#include "baric/linalg.hpp"
#include "baric/numberfield.hpp"
#include "baric/sympoly.hpp"
#include "baric/unipoly.hpp"

namespace baric {

/// x^n + g_1 w(x) x^{n-1} + ... + g_{n-1} w(x)^{n-1} x = 0.
struct TrainEquation {
  unsigned rank = 0;
  std::vector<FieldElement> gammas;

  friend bool operator==(const TrainEquation &a, const TrainEquation &b) {
    return a.rank == b.rank && a.gammas == b.gammas;
  }
};

/// The train defect as an identity in x.
inline IdentityExpr train_identity(const TrainEquation &eq) {
  const IdentityExpr x = IdentityExpr::variable("x");
  const IdentityExpr wx = weight_of(x);
  IdentityExpr out = power(x, eq.rank);
  for (unsigned i = 1; i < eq.rank; ++i)
    out += eq.gammas.at(i - 1) * (power(wx, i) * power(x, eq.rank - i));
  return out;
}

namespace detail {

/// Solves x^n + sum_i g_i w(x)^i x^{n-i} = 0 for g on generic x, given the
/// generic principal powers powers[k] = x^{k+1} and wpow[i] = w(x)^i.
inline std::optional<std::vector<FieldElement>>
solve_train_rank(const std::vector<GenericElement> &powers,
                 const std::vector<MultiPoly> &wpow, unsigned n) {
  const std::size_t dim = powers[0].size();
  std::vector<GenericElement> columns;
  for (unsigned i = 1; i < n; ++i) {
    GenericElement c;
    for (const auto &v : powers[n - i - 1])
      c.push_back(wpow[i] * v);
    columns.push_back(std::move(c));
  }
  const GenericElement &target = powers[n - 1];
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
  auto index = [&rows](std::size_t k, const Exponents &e) {
    return rows.emplace(std::make_pair(k, e), rows.size()).first->second;
  };
  for (std::size_t k = 0; k < dim; ++k) {
    for (const auto &[e, c] : target[k].terms())
      index(k, e);
    for (const auto &col : columns)
      for (const auto &[e, c] : col[k].terms())
        index(k, e);
  }
  Matrix<FieldElement> m(rows.size(), columns.size());
  Vector<FieldElement> rhs(rows.size(), FieldElement(0));
  for (std::size_t k = 0; k < dim; ++k) {
    for (const auto &[e, c] : target[k].terms())
      rhs[rows.at({k, e})] = -c;
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto &[e, c] : columns[j][k].terms())
        m(rows.at({k, e}), j) = c;
  }
  if (columns.empty())
    return rows.empty() ? std::optional<std::vector<FieldElement>>(std::vector<FieldElement>{})
                        : std::nullopt;
  return solve(m, rhs);
}

} // namespace detail

/// Smallest n in [2, max_rank] admitting a train equation, or nullopt.
/// Minimality holds because every smaller rank was tested and found
/// inconsistent.
inline std::optional<TrainEquation>
find_train_equation(const Algebra &a, const WeightFunction &w, unsigned max_rank = 8) {
  if (max_rank < 2)
    throw std::invalid_argument("max_rank must be >= 2");
  VariableSet vars;
  vars.add_block("x", a.dim());
  GenericElement x = generic_element(a.dim(), vars, "x");
  std::vector<GenericElement> powers{x};
  MultiPoly wx = w(x);
  std::vector<MultiPoly> wpow{MultiPoly::constant(vars.size(), FieldElement(1))};
  for (unsigned n = 2; n <= max_rank; ++n) {
    powers.push_back(multiply(a, x, powers.back()));
    wpow.push_back(wpow.back() * wx);
    if (auto g = detail::solve_train_rank(powers, wpow, n))
      return TrainEquation{n, std::move(*g)};
  }
  return std::nullopt;
}

/// P -> (X - alpha) P.
inline UniPoly phi_apply(const FieldElement &alpha, const UniPoly &p) {
  return UniPoly::linear_factor(alpha) * p;
}

/// X^2 - X.
inline UniPoly mu() { return UniPoly({FieldElement(0), FieldElement(-1), FieldElement(1)}); }

/// X^n + g_1 X^{n-1} + ... + g_{n-1} X.
inline UniPoly train_poly(const TrainEquation &eq) {
  std::vector<FieldElement> c(eq.rank + 1, FieldElement(0));
  c[eq.rank] = FieldElement(1);
  for (unsigned i = 1; i < eq.rank; ++i)
    c[eq.rank - i] = eq.gammas.at(i - 1);
  return UniPoly(std::move(c));
}

/// Candidate train roots in the order they are tried.
inline std::array<FieldElement, 5> train_root_candidates() {
  return {FieldElement(0), FieldElement(1), FieldElement(Rational(1, 2)),
          FieldElement::lambda(), FieldElement::lambda_bar()};
}

struct TrainFactorization {
  /// Roots with multiplicity, grouped in candidate order.
  std::vector<FieldElement> roots;
  /// What is left after dividing out the roots (a constant iff splits).
  UniPoly remainder;
  bool splits = false;

  unsigned multiplicity(const FieldElement &r) const {
    unsigned k = 0;
    for (const auto &x : roots)
      k += x == r;
    return k;
  }
};

inline TrainFactorization factor_train_poly(const UniPoly &p) {
  if (p.is_zero())
    throw std::invalid_argument("cannot factor the zero polynomial");
  TrainFactorization f;
  UniPoly rest = p;
  for (const auto &r : train_root_candidates()) {
    UniPoly lin = UniPoly::linear_factor(r);
    while (rest.degree() >= 1 && divides(lin, rest)) {
      rest = divmod(rest, lin).first;
      f.roots.push_back(r);
    }
  }
  f.remainder = rest;
  f.splits = rest.degree() == 0;
  return f;
}

/// "X^2(X-1)(X-l)(X-lbar)"; an unsplit remainder is appended in brackets.
inline std::string format(const TrainFactorization &f) {
  std::string out;
  if (f.remainder.degree() == 0 && f.remainder.coeff(0) != FieldElement(1))
    out += "(" + format(f.remainder.coeff(0)) + ")";
  std::size_t i = 0;
  while (i < f.roots.size()) {
    std::size_t j = i;
    while (j < f.roots.size() && f.roots[j] == f.roots[i])
      ++j;
    std::string lin = f.roots[i].is_zero()
                          ? "X"
                          : "(" + std::string(f.roots[i] == FieldElement::lambda_bar()
                                                  ? "X-lbar"
                                                  : "X-" + format(f.roots[i])) +
                                ")";
    out += lin;
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  if (f.remainder.degree() > 0)
    out += "[" + format(f.remainder) + "]";
  return out.empty() ? "1" : out;
}

inline std::string format(const TrainEquation &eq) {
  return format(train_identity(eq)) + " = 0";
}

// ---------------------------------------------------------------------------
// Classification

struct Rank3Verdict {
  bool ok = false;
  /// gamma with g = (-(1+gamma), gamma).
  std::optional<FieldElement> gamma;
  /// -1/2 gamma (2 gamma^2 + gamma + 3), zero exactly for gamma in {0, l, lbar}.
  FieldElement scalar_test;
};

inline Rank3Verdict classify_rank3(const TrainEquation &eq) {
  if (eq.rank != 3)
    throw std::invalid_argument("classify_rank3 needs a rank-3 equation, got rank " +
                                std::to_string(eq.rank));
  Rank3Verdict v;
  const FieldElement g = eq.gammas.at(1);
  const FieldElement two(2), three(3);
  v.scalar_test = FieldElement(Rational(-1, 2)) * g * (two * g * g + g + three);
  if (eq.gammas.at(0) != -(FieldElement(1) + g))
    return v;
  v.gamma = g;
  v.ok = v.scalar_test.is_zero();
  return v;
}

struct Rank4Form {
  std::string label;
  std::optional<FieldElement> gamma;
  std::array<FieldElement, 3> coefficients;
};

/// Every rank-4 train form from the classification, including the form
/// x^4 - 3/2 w x^3 + 1/2 w^2 x^2 = 0 that arises in the case analysis
/// (train roots 1/2 and 0) but is not one of the four listed families.
inline const std::vector<Rank4Form> &rank4_forms() {
  static const std::vector<Rank4Form> forms = [] {
    const FieldElement one(1), half(Rational(1, 2)), l = FieldElement::lambda(),
                       lb = FieldElement::lambda_bar();
    std::vector<Rank4Form> f;
    for (const auto &g : {FieldElement(0), l, lb})
      f.push_back({"i", g, {-(one + g), g, FieldElement(0)}});
    f.push_back({"ii", std::nullopt,
                 {FieldElement(Rational(-1, 2)), one, FieldElement(Rational(-3, 2))}});
    for (const auto &g : {half, l, lb})
      f.push_back({"iii",
                   g,
                   {-(FieldElement(Rational(3, 2)) + g),
                    half + FieldElement(Rational(3, 2)) * g, -(half * g)}});
    for (const auto &g : {l, lb})
      f.push_back({"iv", g, {-(one + FieldElement(2) * g), g * (g + FieldElement(2)), -(g * g)}});
    f.push_back({"case2-alpha0", std::nullopt,
                 {FieldElement(Rational(-3, 2)), half, FieldElement(0)}});
    return f;
  }();
  return forms;
}

struct Rank4Verdict {
  bool ok = false;
  std::vector<Rank4Form> matches;
};

inline Rank4Verdict classify_rank4(const TrainEquation &eq) {
  if (eq.rank != 4)
    throw std::invalid_argument("classify_rank4 needs a rank-4 equation, got rank " +
                                std::to_string(eq.rank));
  Rank4Verdict v;
  for (const auto &f : rank4_forms())
    if (eq.gammas[0] == f.coefficients[0] && eq.gammas[1] == f.coefficients[1] &&
        eq.gammas[2] == f.coefficients[2])
      v.matches.push_back(f);
  v.ok = !v.matches.empty();
  return v;
}

inline std::string format(const Rank4Form &f) {
  std::string s = "form " + f.label;
  if (f.gamma)
    s += " (gamma = " + (*f.gamma == FieldElement::lambda_bar() ? std::string("lbar")
                                                                 : format(*f.gamma)) +
         ")";
  return s;
}

struct P6Verdict {
  bool ok = false;
  unsigned r = 0, s = 0, t = 0;
  std::string reason;
};

/// Whether the train polynomial is X(X-1)(X-1/2)^r (X-l)^s (X-lbar)^t.
inline P6Verdict verify_p6_form(const TrainEquation &eq) {
  P6Verdict v;
  auto f = factor_train_poly(train_poly(eq));
  v.r = f.multiplicity(FieldElement(Rational(1, 2)));
  v.s = f.multiplicity(FieldElement::lambda());
  v.t = f.multiplicity(FieldElement::lambda_bar());
  if (!f.splits) {
    v.reason = "train polynomial does not split: " + format(f);
    return v;
  }
  unsigned zeros = f.multiplicity(FieldElement(0));
  unsigned ones = f.multiplicity(FieldElement(1));
  if (zeros != 1 || ones != 1) {
    v.reason = "root 0 has multiplicity " + std::to_string(zeros) +
               " and root 1 has multiplicity " + std::to_string(ones) +
               " (both must be 1): " + format(f);
    return v;
  }
  v.ok = v.r + v.s + v.t + 2 == eq.rank;
  v.reason = format(f);
  return v;
}

} // namespace baric
