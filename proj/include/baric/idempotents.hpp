#pragma once

// Weight-one idempotents of algebras of dimension <= 3.
//
// Writing e = e0 + sum_k t_k kappa_k, with e0 a fixed weight-one element and
// kappa a basis of Ker omega, the condition e e = e becomes a quadratic
// system in at most two unknowns. It is solved by elimination: an equation
// linear in one unknown is solved for it and substituted back, a univariate
// equation is solved by exact root finding, and two genuinely quadratic
// equations are reduced to a univariate resultant.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/linalg.hpp"
#include "baric/sympoly.hpp"
#include "baric/unipoly.hpp"

namespace baric {

/// Coordinates numerators[i] / denominator, polynomial in the parameters;
/// valid wherever the denominator does not vanish.
struct IdempotentFamily {
  std::vector<std::string> parameters;
  /// Polynomials are over the solver ring; `parameter_indices` maps each
  /// parameter to its variable there.
  std::vector<std::size_t> parameter_indices;
  std::size_t ring_arity = 0;
  std::vector<MultiPoly> numerators;
  MultiPoly denominator;

  Element at(const std::vector<FieldElement> &values) const {
    if (values.size() != parameters.size())
      throw std::invalid_argument("wrong number of family parameters");
    std::vector<FieldElement> point(ring_arity, FieldElement(0));
    for (std::size_t k = 0; k < values.size(); ++k)
      point[parameter_indices[k]] = values[k];
    FieldElement d = denominator.eval(point);
    if (d.is_zero())
      throw std::domain_error("family denominator vanishes at this parameter");
    FieldElement inv = d.inverse();
    Element e;
    for (const auto &num : numerators)
      e.push_back(num.eval(point) * inv);
    return e;
  }
};

struct IdempotentSet {
  std::vector<Element> points;
  std::vector<IdempotentFamily> families;

  bool empty() const { return points.empty() && families.empty(); }
};

namespace detail {

/// One solution component over the unknowns t_0..t_{m-1}: each unknown is
/// values[k] / denom, polynomials in the free unknowns only.
struct Component {
  std::vector<std::size_t> free;
  std::vector<MultiPoly> values;
  MultiPoly denom;
};

inline std::vector<MultiPoly> nonzero_polys(const std::vector<MultiPoly> &eqs) {
  std::vector<MultiPoly> out;
  for (const auto &e : eqs)
    if (!e.is_zero())
      out.push_back(e);
  return out;
}

inline bool has_nonzero_constant(const std::vector<MultiPoly> &eqs) {
  for (const auto &e : eqs)
    if (e.total_degree() == 0)
      return true;
  return false;
}

inline std::vector<MultiPoly> substitute_all(const std::vector<MultiPoly> &eqs,
                                             std::size_t var,
                                             const FieldElement &value) {
  std::vector<MultiPoly> out;
  for (const auto &e : eqs)
    out.push_back(e.substitute(var, value));
  return out;
}

/// Solutions of equations involving only `var`: nullopt means every value.
inline std::optional<std::vector<FieldElement>>
solve_univariate(const std::vector<MultiPoly> &eqs, std::size_t var) {
  auto nz = nonzero_polys(eqs);
  if (nz.empty())
    return std::nullopt;
  UniPoly g = nz.front().to_unipoly(var);
  for (std::size_t i = 1; i < nz.size(); ++i)
    g = gcd(g, nz[i].to_unipoly(var));
  if (g.degree() < 1)
    return std::vector<FieldElement>{};
  return roots_in_field(g);
}

/// Adds components for: unknown `fixed_var` = value, the remaining
/// unknown `other` solved from the (now univariate) equations.
inline void branch_fixed(const std::vector<MultiPoly> &eqs, std::size_t arity,
                         std::size_t fixed_var, const FieldElement &value,
                         std::size_t other, std::vector<Component> &out) {
  auto sub = substitute_all(eqs, fixed_var, value);
  auto sols = solve_univariate(sub, other);
  std::vector<MultiPoly> values(arity, MultiPoly(arity));
  values[fixed_var] = MultiPoly::constant(arity, value);
  if (!sols) {
    values[other] = MultiPoly::variable(arity, other);
    out.push_back({{other}, values, MultiPoly::constant(arity, FieldElement(1))});
    return;
  }
  for (const auto &r : *sols) {
    values[other] = MultiPoly::constant(arity, r);
    out.push_back({{}, values, MultiPoly::constant(arity, FieldElement(1))});
  }
}

/// Determinant by cofactor expansion (small matrices only).
inline MultiPoly determinant(const std::vector<std::vector<MultiPoly>> &m,
                             std::size_t arity) {
  const std::size_t n = m.size();
  if (n == 0)
    return MultiPoly::constant(arity, FieldElement(1));
  if (n == 1)
    return m[0][0];
  MultiPoly acc(arity);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero())
      continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * determinant(minor, arity);
    if (c % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

/// Res_var(f, g) via the Sylvester matrix.
inline MultiPoly resultant(const MultiPoly &f, const MultiPoly &g,
                           std::size_t var) {
  const std::size_t arity = f.arity();
  const long df = f.degree_in(var), dg = g.degree_in(var);
  const std::size_t n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly(arity)));
  for (long r = 0; r < dg; ++r)
    for (long k = 0; k <= df; ++k)
      s[r][r + k] = f.coefficient_in(var, static_cast<std::uint32_t>(df - k));
  for (long r = 0; r < df; ++r)
    for (long k = 0; k <= dg; ++k)
      s[dg + r][r + k] = g.coefficient_in(var, static_cast<std::uint32_t>(dg - k));
  return determinant(s, arity);
}

/// Solves a system of polynomials of total degree <= 2 in `arity` <= 2
/// unknowns.
inline std::vector<Component> solve_system(const std::vector<MultiPoly> &eqs_in,
                                           std::size_t arity) {
  const MultiPoly one = MultiPoly::constant(arity, FieldElement(1));
  auto eqs = nonzero_polys(eqs_in);
  std::vector<Component> out;
  if (has_nonzero_constant(eqs))
    return out;
  if (arity == 0) {
    out.push_back({{}, {}, one});
    return out;
  }
  if (arity == 1) {
    auto sols = solve_univariate(eqs, 0);
    if (!sols) {
      out.push_back({{0}, {MultiPoly::variable(1, 0)}, one});
      return out;
    }
    for (const auto &r : *sols)
      out.push_back({{}, {MultiPoly::constant(1, r)}, one});
    return out;
  }
  if (arity != 2)
    throw UnsupportedDimension("idempotent solver handles at most two unknowns");
  if (eqs.empty()) {
    out.push_back({{0, 1}, {MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)}, one});
    return out;
  }

  // An equation linear in some unknown (prefer solving for the last one).
  for (std::size_t v : {std::size_t{1}, std::size_t{0}}) {
    const std::size_t u = 1 - v;
    for (std::size_t fi = 0; fi < eqs.size(); ++fi) {
      const MultiPoly &f = eqs[fi];
      if (f.degree_in(v) != 1)
        continue;
      const MultiPoly c = f.coefficient_in(v, 1);
      const MultiPoly d = f.coefficient_in(v, 0);
      // v = -d / c where c(u) != 0
      std::vector<MultiPoly> reduced;
      for (std::size_t gi = 0; gi < eqs.size(); ++gi) {
        if (gi == fi)
          continue;
        const MultiPoly &g = eqs[gi];
        const long dg = g.degree_in(v);
        MultiPoly h(arity);
        MultiPoly minus_d = -d;
        for (long k = 0; k <= dg; ++k)
          h += g.coefficient_in(v, static_cast<std::uint32_t>(k)) *
               minus_d.pow(static_cast<unsigned>(k)) *
               c.pow(static_cast<unsigned>(dg - k));
        reduced.push_back(h);
      }
      auto sols = solve_univariate(reduced, u);
      if (!sols) {
        std::vector<MultiPoly> values(2, MultiPoly(2));
        values[u] = MultiPoly::variable(2, u) * c;
        values[v] = -d;
        out.push_back({{u}, values, c});
      } else {
        for (const auto &r : *sols) {
          FieldElement cr = c.substitute(u, r).eval(std::vector<FieldElement>(2));
          if (cr.is_zero())
            continue;
          FieldElement dr = d.substitute(u, r).eval(std::vector<FieldElement>(2));
          std::vector<MultiPoly> values(2, MultiPoly(2));
          values[u] = MultiPoly::constant(2, r);
          values[v] = MultiPoly::constant(2, -dr / cr);
          out.push_back({{}, values, one});
        }
      }
      // c(u) = 0 branch
      if (c.total_degree() > 0) {
        for (const auto &r : roots_in_field(c.to_unipoly(u)))
          branch_fixed(eqs, 2, u, r, v, out);
      }
      return out;
    }
  }

  // A univariate equation.
  for (std::size_t u : {std::size_t{0}, std::size_t{1}}) {
    for (const auto &f : eqs) {
      if (!f.only_involves(u))
        continue;
      for (const auto &r : roots_in_field(f.to_unipoly(u)))
        branch_fixed(eqs, 2, u, r, 1 - u, out);
      return out;
    }
  }

  // Quadratic in both unknowns everywhere: eliminate the last unknown.
  if (eqs.size() < 2)
    throw UnsupportedDimension(
        "idempotents form a conic; parametrization is not supported");
  MultiPoly res(2);
  for (std::size_t i = 0; i < eqs.size() && res.is_zero(); ++i)
    for (std::size_t j = i + 1; j < eqs.size() && res.is_zero(); ++j)
      res = resultant(eqs[i], eqs[j], 1);
  if (res.is_zero())
    throw UnsupportedDimension(
        "idempotents form a curve; parametrization is not supported");
  for (const auto &r : roots_in_field(res.to_unipoly(0)))
    branch_fixed(eqs, 2, 0, r, 1, out);
  return out;
}

} // namespace detail

/// All weight-one idempotents, as isolated points and parametrized families.
inline IdempotentSet find_idempotents(const Algebra &a, const WeightFunction &w) {
  const std::size_t n = a.dim();
  if (n > 3)
    throw UnsupportedDimension("find_idempotents supports dim <= 3, got " +
                               std::to_string(n));
  if (w.w.size() != n)
    throw std::invalid_argument("weight length does not match algebra");
  IdempotentSet result;
  std::size_t p = 0;
  while (p < n && w.w[p].is_zero())
    ++p;
  if (p == n)
    return result;
  Element e0 = a.zero();
  e0[p] = w.w[p].inverse();
  auto kernel = nullspace(Matrix<FieldElement>::from_rows(n, {w.w}));
  const std::size_t m = kernel.size();

  VariableSet vars;
  vars.add_block("t", m);
  std::vector<MultiPoly> e(n, MultiPoly(m));
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = MultiPoly::constant(m, e0[i]);
    for (std::size_t k = 0; k < m; ++k)
      e[i] += kernel[k][i] * MultiPoly::variable(m, k);
  }
  auto eqs = subtract(multiply(a, e, e), e);

  static const char *names[] = {"a", "b"};
  for (const auto &comp : detail::solve_system(eqs, m)) {
    std::vector<MultiPoly> coords(n, MultiPoly(m));
    for (std::size_t i = 0; i < n; ++i) {
      coords[i] = e0[i] * comp.denom;
      for (std::size_t k = 0; k < m; ++k)
        coords[i] += kernel[k][i] * comp.values[k];
    }
    MultiPoly denom = comp.denom;
    if (denom.total_degree() == 0) {
      FieldElement inv = denom.eval(std::vector<FieldElement>(m)).inverse();
      for (auto &c : coords)
        c = inv * c;
      denom = MultiPoly::constant(m, FieldElement(1));
    }
    if (comp.free.empty()) {
      std::vector<FieldElement> origin(m);
      Element pt;
      for (const auto &c : coords)
        pt.push_back(c.eval(origin));
      if (verify_idempotent(a, w, pt) &&
          std::find(result.points.begin(), result.points.end(), pt) ==
              result.points.end())
        result.points.push_back(pt);
      continue;
    }
    IdempotentFamily fam;
    for (std::size_t k = 0; k < comp.free.size(); ++k) {
      fam.parameters.push_back(names[k]);
      fam.parameter_indices.push_back(comp.free[k]);
    }
    fam.ring_arity = m;
    fam.numerators = std::move(coords);
    fam.denominator = std::move(denom);
    result.families.push_back(std::move(fam));
  }
  return result;
}

/// "e1 + a*e2 + ((1/4 + 1/4*l)*a^2 + ...)*e3" style rendering of a family.
inline std::string format(const IdempotentFamily &f, const Algebra &alg) {
  std::vector<std::string> names(f.ring_arity);
  for (std::size_t k = 0; k < f.parameters.size(); ++k)
    names[f.parameter_indices[k]] = f.parameters[k];
  std::string out;
  for (std::size_t i = 0; i < f.numerators.size(); ++i) {
    if (f.numerators[i].is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    std::string c = format(f.numerators[i], names);
    if (c == "1")
      out += alg.basis_names()[i];
    else
      out += "(" + c + ")*" + alg.basis_names()[i];
  }
  if (out.empty())
    out = "0";
  if (f.denominator.total_degree() > 0)
    out = "(" + out + ") / (" + format(f.denominator, names) + ")";
  return out;
}

} // namespace baric
