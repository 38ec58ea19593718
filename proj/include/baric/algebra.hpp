#pragma once

// Finite-dimensional commutative algebras given by structure constants.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baric/linalg.hpp"
#include "baric/numberfield.hpp"
#include "baric/sympoly.hpp"
#include "baric/unipoly.hpp"

namespace baric {

using Element = Vector<FieldElement>;

/// Raised by solvers whose search is bounded by the algebra dimension.
class UnsupportedDimension : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// e_i e_j = sum_k row[k] e_k, with indices 0-based.
struct ProductRule {
  std::size_t i;
  std::size_t j;
  Element row;
};

/// Commutative algebra over Q(l). Only the pairs i <= j are stored, so the
/// product is symmetric by construction. Immutable once built.
class Algebra {
public:
  Algebra() = default;

  Algebra(std::vector<std::string> basis_names,
          const std::vector<ProductRule> &products)
      : names_(std::move(basis_names)) {
    const std::size_t n = names_.size();
    if (n == 0)
      throw std::invalid_argument("algebra dimension must be positive");
    table_.assign(n * (n + 1) / 2, Element(n, FieldElement(0)));
    std::vector<bool> seen(table_.size(), false);
    for (const auto &p : products) {
      if (p.i >= n || p.j >= n)
        throw std::invalid_argument("product index out of range");
      if (p.row.size() != n)
        throw std::invalid_argument("product row has wrong length");
      std::size_t k = slot(p.i, p.j);
      if (seen[k])
        throw std::invalid_argument("duplicate product for pair (" +
                                    names_[p.i] + ", " + names_[p.j] + ")");
      seen[k] = true;
      table_[k] = p.row;
    }
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string> &basis_names() const { return names_; }

  /// Coordinates of e_i e_j.
  const Element &product(std::size_t i, std::size_t j) const {
    return table_[slot(i, j)];
  }

  Element basis_vector(std::size_t i) const {
    Element e(dim(), FieldElement(0));
    e.at(i) = FieldElement(1);
    return e;
  }

  Element zero() const { return Element(dim(), FieldElement(0)); }

  /// Same basis, every structure constant passed through f.
  template <class F> Algebra map_constants(F &&f) const {
    Algebra out = *this;
    for (auto &row : out.table_)
      for (auto &c : row)
        c = f(c);
    return out;
  }

  friend bool operator==(const Algebra &a, const Algebra &b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j)
      std::swap(i, j);
    // row-major upper triangle
    return i * dim() - i * (i - 1) / 2 + (j - i);
  }

  std::vector<std::string> names_;
  std::vector<Element> table_;
};

/// Bilinear product of coordinate vectors; S is FieldElement or MultiPoly.
template <class S>
std::vector<S> multiply(const Algebra &a, const std::vector<S> &x,
                        const std::vector<S> &y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("element dimension does not match algebra");
  std::vector<S> out(n, zero_like(x[0]));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i]))
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j]))
        continue;
      const Element &row = a.product(i, j);
      bool any = false;
      for (const auto &c : row)
        if (!c.is_zero()) {
          any = true;
          break;
        }
      if (!any)
        continue;
      S xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!row[k].is_zero())
          out[k] += row[k] * xy;
    }
  }
  return out;
}

/// x^1 = x, x^{k+1} = x x^k.
template <class S>
std::vector<S> principal_power(const Algebra &a, const std::vector<S> &x,
                               unsigned k) {
  if (k == 0)
    throw std::invalid_argument("principal power exponent must be >= 1");
  std::vector<S> p = x;
  for (unsigned i = 1; i < k; ++i)
    p = multiply(a, x, p);
  return p;
}

/// x^[1] = x, x^[k+1] = x^[k] x^[k].
template <class S>
std::vector<S> plenary_power(const Algebra &a, const std::vector<S> &x,
                             unsigned k) {
  if (k == 0)
    throw std::invalid_argument("plenary power exponent must be >= 1");
  std::vector<S> p = x;
  for (unsigned i = 1; i < k; ++i)
    p = multiply(a, p, p);
  return p;
}

template <class S>
std::vector<S> scale(const FieldElement &c, const std::vector<S> &x) {
  std::vector<S> out;
  out.reserve(x.size());
  for (const auto &v : x)
    out.push_back(c * v);
  return out;
}

template <class S>
std::vector<S> add(const std::vector<S> &x, const std::vector<S> &y) {
  std::vector<S> out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += y[i];
  return out;
}

template <class S>
std::vector<S> subtract(const std::vector<S> &x, const std::vector<S> &y) {
  std::vector<S> out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= y[i];
  return out;
}

template <class S> bool is_zero_vector(const std::vector<S> &x) {
  return std::all_of(x.begin(), x.end(),
                     [](const S &v) { return is_zero(v); });
}

/// Matrix of y -> x y; column j holds x e_j.
inline Matrix<FieldElement> left_multiplication(const Algebra &a,
                                                const Element &x) {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < a.dim(); ++j)
    cols.push_back(multiply(a, x, a.basis_vector(j)));
  return Matrix<FieldElement>::from_columns(a.dim(), cols);
}

/// Linear functional with w[i] = omega(e_i).
struct WeightFunction {
  Element w;

  template <class S> S operator()(const std::vector<S> &x) const {
    if (x.size() != w.size())
      throw std::invalid_argument("weight length does not match element");
    S acc = zero_like(x[0]);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero())
        acc += w[i] * x[i];
    return acc;
  }

  bool is_zero() const { return is_zero_vector(w); }

  friend bool operator==(const WeightFunction &a, const WeightFunction &b) {
    return a.w == b.w;
  }
  friend bool operator<(const WeightFunction &a, const WeightFunction &b) {
    return a.w < b.w;
  }
};

struct WeightCheck {
  bool ok = false;
  bool nonzero = false;
  /// 0-based basis pairs (i <= j) with omega(e_i e_j) != w_i w_j.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

inline WeightCheck verify_weight(const Algebra &a, const WeightFunction &w) {
  if (w.w.size() != a.dim())
    throw std::invalid_argument("weight length does not match algebra");
  WeightCheck out;
  out.nonzero = !w.is_zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (w(a.product(i, j)) != w.w[i] * w.w[j])
        out.violations.emplace_back(i, j);
  out.ok = out.nonzero && out.violations.empty();
  return out;
}

/// All weight functions with values in Q(l).
///
/// If omega is a weight then omega^T L_{e_i} = omega(e_i) omega^T, so each
/// omega(e_i) is an eigenvalue of L_{e_i}. The candidate values per
/// coordinate are the Q(l)-roots of the minimal polynomial of L_{e_i}; every
/// tuple of candidates is checked exactly.
inline std::vector<WeightFunction> find_weights(const Algebra &a) {
  if (a.dim() > 3)
    throw UnsupportedDimension("find_weights supports dim <= 3, got " +
                               std::to_string(a.dim()));
  const std::size_t n = a.dim();
  std::vector<std::vector<FieldElement>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto m = minimal_polynomial(left_multiplication(a, a.basis_vector(i)));
    candidates[i] = roots_in_field(m);
    std::sort(candidates[i].begin(), candidates[i].end());
  }
  std::vector<WeightFunction> out;
  Element current(n);
  auto recurse = [&](auto &&self, std::size_t i) -> void {
    if (i == n) {
      WeightFunction w{current};
      if (verify_weight(a, w).ok)
        out.push_back(w);
      return;
    }
    for (const auto &c : candidates[i]) {
      current[i] = c;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// e e = e, e != 0 and omega(e) = 1.
inline bool verify_idempotent(const Algebra &a, const WeightFunction &w,
                              const Element &e) {
  if (e.size() != a.dim())
    return false;
  if (is_zero_vector(e))
    return false;
  if (w(e) != FieldElement(1))
    return false;
  return multiply(a, e, e) == e;
}

/// "e1 + 1/2*e2 - l*e3 + (1/4 + 1/4*l)*e4"; readable by the file-format
/// element parser.
inline std::string format(const Algebra &a, const Element &x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const FieldElement &c = x[i];
    if (c.is_zero())
      continue;
    bool mixed = sgn(c.rational_part()) != 0 && sgn(c.lambda_part()) != 0;
    bool neg = !mixed && (sgn(c.rational_part()) < 0 || sgn(c.lambda_part()) < 0);
    FieldElement mag = neg ? -c : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const std::string &name = a.basis_names().at(i);
    if (mag == FieldElement(1))
      out += name;
    else if (mixed)
      out += "(" + format(mag) + ")*" + name;
    else
      out += format(mag) + "*" + name;
  }
  return out.empty() ? "0" : out;
}

} // namespace baric
