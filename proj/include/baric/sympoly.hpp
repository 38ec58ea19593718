#pragma once

// Sparse multivariate polynomials over Q(l).
//
// Identities are verified by expanding them on generic elements (one
// indeterminate per coordinate) and testing the resulting coefficient
// polynomials for zero. Over the infinite field Q(l) a polynomial vanishes
// everywhere iff it is the zero polynomial, so this is a decision procedure.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baric/numberfield.hpp"
#include "baric/unipoly.hpp"

namespace baric {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents &a, const Exponents &b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a)
      da += e;
    for (auto e : b)
      db += e;
    if (da != db)
      return da < db;
    return a > b;
  }
};

class MultiPoly {
public:
  using TermMap = std::map<Exponents, FieldElement, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly zero(std::size_t arity) { return MultiPoly(arity); }
  static MultiPoly constant(std::size_t arity, const FieldElement &c) {
    MultiPoly p(arity);
    if (!c.is_zero())
      p.terms_.emplace(Exponents(arity, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t arity, std::size_t index) {
    if (index >= arity)
      throw std::out_of_range("variable index exceeds arity");
    MultiPoly p(arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), FieldElement(1));
    return p;
  }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto &[e, c] : terms_) {
      long s = 0;
      for (auto x : e)
        s += x;
      d = std::max(d, s);
    }
    return d;
  }

  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto &[e, c] : terms_)
      d = std::max(d, static_cast<long>(e[var]));
    return d;
  }

  /// True when no variable other than `var` occurs.
  bool only_involves(std::size_t var) const {
    for (const auto &[e, c] : terms_)
      for (std::size_t i = 0; i < arity_; ++i)
        if (i != var && e[i] != 0)
          return false;
    return true;
  }

  /// Coefficient of var^degree, as a polynomial in the remaining variables.
  MultiPoly coefficient_in(std::size_t var, std::uint32_t degree) const {
    MultiPoly out(arity_);
    for (const auto &[e, c] : terms_)
      if (e[var] == degree) {
        Exponents f = e;
        f[var] = 0;
        out.terms_.emplace(std::move(f), c);
      }
    return out;
  }

  MultiPoly substitute(std::size_t var, const FieldElement &value) const {
    MultiPoly out(arity_);
    for (const auto &[e, c] : terms_) {
      Exponents f = e;
      f[var] = 0;
      out.accumulate(f, c * value.pow(e[var]));
    }
    return out;
  }

  /// View as a univariate polynomial in `var` (other variables must be absent).
  UniPoly to_unipoly(std::size_t var) const {
    if (!only_involves(var))
      throw std::invalid_argument("polynomial is not univariate");
    std::vector<FieldElement> c(std::max<long>(degree_in(var) + 1, 0));
    for (const auto &[e, v] : terms_)
      c[e[var]] = v;
    return UniPoly(std::move(c));
  }

  FieldElement eval(std::span<const FieldElement> point) const {
    if (point.size() != arity_)
      throw std::invalid_argument("evaluation point arity mismatch");
    FieldElement acc(0);
    for (const auto &[e, c] : terms_) {
      FieldElement t = c;
      for (std::size_t i = 0; i < arity_; ++i)
        if (e[i])
          t *= point[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto &[e, c] : out.terms_)
      c = -c;
    return out;
  }

  MultiPoly &operator+=(const MultiPoly &o) {
    check_arity(o);
    for (const auto &[e, c] : o.terms_)
      accumulate(e, c);
    return *this;
  }
  MultiPoly &operator-=(const MultiPoly &o) {
    check_arity(o);
    for (const auto &[e, c] : o.terms_)
      accumulate(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly &q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly &q) { return p -= q; }

  friend MultiPoly operator*(const FieldElement &s, const MultiPoly &p) {
    if (s.is_zero())
      return MultiPoly(p.arity_);
    MultiPoly out = p;
    for (auto &[e, c] : out.terms_)
      c *= s;
    return out;
  }

  friend MultiPoly operator*(const MultiPoly &p, const MultiPoly &q) {
    p.check_arity(q);
    MultiPoly out(p.arity_);
    Exponents e(p.arity_);
    for (const auto &[ep, cp] : p.terms_)
      for (const auto &[eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < p.arity_; ++i)
          e[i] = ep[i] + eq[i];
        out.accumulate(e, cp * cq);
      }
    return out;
  }

  MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(arity_, FieldElement(1));
    for (unsigned i = 0; i < k; ++i)
      r *= *this;
    return r;
  }

  friend bool operator==(const MultiPoly &p, const MultiPoly &q) {
    return p.arity_ == q.arity_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const MultiPoly &p, const MultiPoly &q) {
    return !(p == q);
  }

private:
  void check_arity(const MultiPoly &o) const {
    if (o.arity_ != arity_)
      throw std::invalid_argument("polynomial arity mismatch");
  }

  void accumulate(const Exponents &e, const FieldElement &c) {
    if (c.is_zero())
      return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  std::size_t arity_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly &p) { return p.is_zero(); }
inline bool is_zero(const FieldElement &x) { return x.is_zero(); }
inline MultiPoly zero_like(const MultiPoly &p) { return MultiPoly(p.arity()); }
inline FieldElement zero_like(const FieldElement &) { return FieldElement(0); }

/// Named variables, allocated in blocks "x1..xn". The arity of every
/// polynomial built against a set is the set's final size.
class VariableSet {
public:
  /// Adds prefix1..prefix<count>; returns the index of prefix1.
  std::size_t add_block(const std::string &prefix, std::size_t count) {
    for (const auto &b : blocks_)
      if (b.prefix == prefix)
        throw std::invalid_argument("duplicate variable prefix: " + prefix);
    std::size_t offset = names_.size();
    blocks_.push_back({prefix, offset, count});
    for (std::size_t i = 1; i <= count; ++i)
      names_.push_back(prefix + std::to_string(i));
    return offset;
  }

  std::size_t add(const std::string &name) {
    std::size_t offset = names_.size();
    blocks_.push_back({name, offset, 1});
    names_.push_back(name);
    return offset;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }

  std::size_t offset(const std::string &prefix) const {
    for (const auto &b : blocks_)
      if (b.prefix == prefix)
        return b.offset;
    throw std::out_of_range("unknown variable prefix: " + prefix);
  }

  std::size_t count(const std::string &prefix) const {
    for (const auto &b : blocks_)
      if (b.prefix == prefix)
        return b.count;
    throw std::out_of_range("unknown variable prefix: " + prefix);
  }

private:
  struct Block {
    std::string prefix;
    std::size_t offset;
    std::size_t count;
  };
  std::vector<Block> blocks_;
  std::vector<std::string> names_;
};

using GenericElement = std::vector<MultiPoly>;

/// Element of dimension `dim` whose coordinate i is the variable prefix<i+1>
/// of `vars` (the block must already exist).
inline GenericElement generic_element(std::size_t dim, const VariableSet &vars,
                                      const std::string &prefix) {
  if (vars.count(prefix) != dim)
    throw std::invalid_argument("variable block size does not match dimension");
  const std::size_t off = vars.offset(prefix);
  GenericElement x;
  x.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    x.push_back(MultiPoly::variable(vars.size(), off + i));
  return x;
}

inline std::string format(const MultiPoly &p,
                          const std::vector<std::string> &names) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto &[e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i])
        continue;
      if (!mono.empty())
        mono += "*";
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e[i] > 1)
        mono += "^" + std::to_string(e[i]);
    }
    bool negative = (c.is_rational() && sgn(c.rational_part()) < 0) ||
                    (sgn(c.rational_part()) == 0 && sgn(c.lambda_part()) < 0);
    FieldElement mag = negative ? -c : c;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string coef = format(mag);
    if (sgn(mag.rational_part()) != 0 && sgn(mag.lambda_part()) != 0)
      coef = "(" + coef + ")";
    if (mono.empty())
      out += coef;
    else if (mag == FieldElement(1))
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

} // namespace baric
