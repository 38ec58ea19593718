#pragma once

// Peirce decomposition relative to a weight-one idempotent, the product
// rules between components, and the component identity suites.

#include <array>
#include <cstddef>
#include <functional>
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

class InvalidIdempotent : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The minimal polynomial of l_e does not split into distinct factors from
/// X, X - 1/2, X - l, X - lbar.
class DecompositionFailure : public std::runtime_error {
public:
  DecompositionFailure(const std::string &factor, const std::string &why)
      : std::runtime_error("Peirce decomposition failed: " + why + " " + factor),
        factor_(factor) {}
  const std::string &factor() const noexcept { return factor_; }

private:
  std::string factor_;
};

class HypothesisViolated : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Summands of A = Ke + A_0 + A_1/2 + A_l + A_lbar.
enum class Tag { E, Zero, Half, Lambda, LambdaBar };

inline constexpr std::array<Tag, 4> kEigenTags = {Tag::Zero, Tag::Half,
                                                  Tag::Lambda, Tag::LambdaBar};

inline FieldElement tag_value(Tag t) {
  switch (t) {
  case Tag::Zero:
    return FieldElement(0);
  case Tag::Half:
    return FieldElement(Rational(1, 2));
  case Tag::Lambda:
    return FieldElement::lambda();
  case Tag::LambdaBar:
    return FieldElement::lambda_bar();
  case Tag::E:
    break;
  }
  return FieldElement(1);
}

inline std::string tag_name(Tag t) {
  switch (t) {
  case Tag::E:
    return "e";
  case Tag::Zero:
    return "0";
  case Tag::Half:
    return "1/2";
  case Tag::Lambda:
    return "l";
  case Tag::LambdaBar:
    return "lbar";
  }
  return "?";
}

inline std::size_t tag_index(Tag t) { return static_cast<std::size_t>(t) - 1; }

/// 4X^4 + 5X^2 - 3X.
inline UniPoly peirce_annihilator() {
  return UniPoly({FieldElement(0), FieldElement(-3), FieldElement(5),
                  FieldElement(0), FieldElement(4)});
}

/// X - alpha, written with the root names used in reports.
inline std::string format_linear_factor(const FieldElement &alpha) {
  if (alpha.is_zero())
    return "X";
  if (alpha == FieldElement::lambda_bar())
    return "X-lbar";
  std::string a = format(alpha);
  if (a.front() == '-')
    return "X+" + a.substr(1);
  return "X-" + a;
}

struct LeftMultOperator {
  /// L_e on A.
  Matrix<FieldElement> matrix;
  /// Basis of Ker omega (nullspace of the row omega, one 1 per free column).
  std::vector<Element> kernel_basis;
  /// l_e on Ker omega in kernel_basis coordinates; column j is l_e(k_j).
  Matrix<FieldElement> restricted;
};

inline void require_idempotent(const Algebra &a, const WeightFunction &w,
                               const Element &e) {
  if (e.size() != a.dim())
    throw InvalidIdempotent("idempotent has wrong dimension");
  if (!verify_weight(a, w).ok)
    throw InvalidIdempotent("weight function is not a valid weight");
  if (!verify_idempotent(a, w, e)) {
    std::string why = multiply(a, e, e) != e ? "e*e != e" : "w(e) != 1";
    throw InvalidIdempotent(format(a, e) + " is not a weight-one idempotent (" +
                            why + ")");
  }
}

inline LeftMultOperator left_mult(const Algebra &a, const WeightFunction &w,
                                  const Element &e) {
  require_idempotent(a, w, e);
  LeftMultOperator op;
  op.matrix = left_multiplication(a, e);
  op.kernel_basis = nullspace(Matrix<FieldElement>::from_rows(a.dim(), {w.w}));
  const std::size_t k = op.kernel_basis.size();
  op.restricted = Matrix<FieldElement>(k, k);
  if (k == 0)
    return op;
  auto basis = Matrix<FieldElement>::from_columns(a.dim(), op.kernel_basis);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = solve(basis, op.matrix * op.kernel_basis[j]);
    if (!c)
      throw std::logic_error("e*Ker(w) is not contained in Ker(w)");
    for (std::size_t i = 0; i < k; ++i)
      op.restricted(i, j) = (*c)[i];
  }
  return op;
}

inline UniPoly minimal_polynomial(const LeftMultOperator &op) {
  return minimal_polynomial(op.restricted);
}

class PeirceDecomposition {
public:
  PeirceDecomposition(const Algebra &a, const WeightFunction &w, Element e)
      : alg_(a), w_(w), e_(std::move(e)), op_(left_mult(a, w, e_)) {
    minpoly_ = baric::minimal_polynomial(op_);
    split_minpoly();
    const std::size_t k = op_.kernel_basis.size();
    for (Tag t : kEigenTags) {
      auto shifted = op_.restricted - tag_value(t) * Matrix<FieldElement>::identity(k);
      auto coords = echelon_basis(nullspace(shifted), k);
      auto &comp = components_[tag_index(t)];
      for (const auto &c : coords) {
        Element v = a.zero();
        for (std::size_t i = 0; i < k; ++i)
          if (!c[i].is_zero())
            v = add(v, scale(c[i], op_.kernel_basis[i]));
        comp.push_back(std::move(v));
      }
    }
    std::vector<Element> all{e_};
    for (const auto &comp : components_)
      all.insert(all.end(), comp.begin(), comp.end());
    if (all.size() != a.dim())
      throw DecompositionFailure(format(minpoly_),
                                 "components do not span A; minimal polynomial");
    auto inv = invert(Matrix<FieldElement>::from_columns(a.dim(), all));
    if (!inv)
      throw DecompositionFailure(format(minpoly_), "components are dependent;");
    to_components_ = std::move(*inv);
    basis_ = std::move(all);
  }

  const Algebra &algebra() const { return alg_; }
  const WeightFunction &weight() const { return w_; }
  const Element &idempotent() const { return e_; }
  const LeftMultOperator &left_mult_operator() const { return op_; }
  const UniPoly &minimal_polynomial() const { return minpoly_; }

  const std::vector<Element> &component(Tag t) const {
    if (t == Tag::E)
      throw std::invalid_argument("Ke is not an eigen-component");
    return components_[tag_index(t)];
  }
  bool empty(Tag t) const { return component(t).empty(); }

  /// Coordinates of x in the basis (e, A_0 basis, A_1/2 basis, ...).
  template <class S> std::vector<S> coordinates(const std::vector<S> &x) const {
    const std::size_t n = alg_.dim();
    std::vector<S> out(n, zero_like(x.at(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!to_components_(i, j).is_zero() && !is_zero(x[j]))
          out[i] += to_components_(i, j) * x[j];
    return out;
  }

  /// Component of x in Ke or A_tag.
  template <class S> std::vector<S> project(const std::vector<S> &x, Tag t) const {
    auto c = coordinates(x);
    std::vector<S> out(alg_.dim(), zero_like(x.at(0)));
    auto [lo, hi] = range(t);
    for (std::size_t b = lo; b < hi; ++b) {
      if (is_zero(c[b]))
        continue;
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!basis_[b][i].is_zero())
          out[i] += basis_[b][i] * c[b];
    }
    return out;
  }

  /// True when every coordinate of x outside the listed summands vanishes.
  template <class S>
  bool lies_in(const std::vector<S> &x, const std::vector<Tag> &targets) const {
    auto c = coordinates(x);
    for (Tag t : {Tag::E, Tag::Zero, Tag::Half, Tag::Lambda, Tag::LambdaBar}) {
      bool allowed = false;
      for (Tag u : targets)
        allowed = allowed || u == t;
      if (allowed)
        continue;
      auto [lo, hi] = range(t);
      for (std::size_t b = lo; b < hi; ++b)
        if (!is_zero(c[b]))
          return false;
    }
    return true;
  }

private:
  std::pair<std::size_t, std::size_t> range(Tag t) const {
    if (t == Tag::E)
      return {0, 1};
    std::size_t lo = 1;
    for (Tag u : kEigenTags) {
      if (u == t)
        return {lo, lo + components_[tag_index(u)].size()};
      lo += components_[tag_index(u)].size();
    }
    return {lo, lo};
  }

  void split_minpoly() {
    UniPoly rest = minpoly_;
    for (Tag t : kEigenTags) {
      UniPoly f = UniPoly::linear_factor(tag_value(t));
      if (divides(f, rest))
        rest = divmod(rest, f).first;
    }
    if (rest.degree() <= 0)
      return;
    for (Tag t : kEigenTags)
      if (divides(UniPoly::linear_factor(tag_value(t)), rest))
        throw DecompositionFailure("(" + format_linear_factor(tag_value(t)) + ")",
                                   "repeated factor");
    throw DecompositionFailure("(" + format(rest) + ")",
                               "root outside {0, 1/2, l, lbar} in factor");
  }

  Algebra alg_;
  WeightFunction w_;
  Element e_;
  LeftMultOperator op_;
  UniPoly minpoly_;
  std::array<std::vector<Element>, 4> components_;
  std::vector<Element> basis_;
  Matrix<FieldElement> to_components_;
};

inline PeirceDecomposition peirce_decompose(const Algebra &a,
                                            const WeightFunction &w,
                                            const Element &e) {
  return PeirceDecomposition(a, w, e);
}

// ---------------------------------------------------------------------------
// Product rules

struct ComponentRule {
  std::string label;
  Tag left;
  Tag right;
  /// Allowed summands of the product; empty means the product is zero.
  std::vector<Tag> targets;
};

inline std::string format_rule(const ComponentRule &r) {
  auto comp = [](Tag t) { return "A_" + tag_name(t); };
  std::string s = comp(r.left) + " " + comp(r.right);
  if (r.targets.empty())
    return s + " = 0";
  s += " in ";
  for (std::size_t i = 0; i < r.targets.size(); ++i)
    s += (i ? " + " : "") + comp(r.targets[i]);
  return s;
}

inline const std::vector<ComponentRule> &product_rules() {
  using T = Tag;
  static const std::vector<ComponentRule> rules = {
      {"i", T::Zero, T::Zero, {T::Half}},
      {"ii", T::Half, T::Half, {T::Zero, T::Lambda, T::LambdaBar}},
      {"iii", T::Lambda, T::LambdaBar, {}},
      {"iv", T::Lambda, T::Lambda, {}},
      {"v", T::LambdaBar, T::LambdaBar, {}},
      {"vi", T::Zero, T::Half, {T::Half, T::Lambda, T::LambdaBar}},
      {"vii", T::Lambda, T::Half, {T::Half, T::Zero, T::LambdaBar}},
      {"viii", T::LambdaBar, T::Half, {T::Half, T::Zero, T::Lambda}},
      {"ix", T::Zero, T::Lambda, {T::Half}},
      {"x", T::Zero, T::LambdaBar, {T::Half}},
  };
  return rules;
}

struct RuleWitness {
  Element left;
  Element right;
  Element product;
};

struct RuleVerdict {
  ComponentRule rule;
  bool pass = true;
  /// One of the components is empty.
  bool vacuous = false;
  std::vector<RuleWitness> witnesses;
};

inline RuleVerdict check_rule(const PeirceDecomposition &d, const ComponentRule &r) {
  RuleVerdict v;
  v.rule = r;
  const auto &as = d.component(r.left);
  const auto &bs = d.component(r.right);
  v.vacuous = as.empty() || bs.empty();
  const bool same = r.left == r.right;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = same ? i : 0; j < bs.size(); ++j) {
      Element p = multiply(d.algebra(), as[i], bs[j]);
      if (!d.lies_in(p, r.targets)) {
        v.pass = false;
        v.witnesses.push_back({as[i], bs[j], p});
      }
    }
  return v;
}

inline std::vector<RuleVerdict> check_product_rules(const PeirceDecomposition &d) {
  std::vector<RuleVerdict> out;
  for (const auto &r : product_rules())
    out.push_back(check_rule(d, r));
  return out;
}

// ---------------------------------------------------------------------------
// Component identity suites

enum class LemmaSuite { L2, L3, L4, L7 };

inline std::string suite_name(LemmaSuite s) {
  switch (s) {
  case LemmaSuite::L2:
    return "lemma2";
  case LemmaSuite::L3:
    return "lemma3";
  case LemmaSuite::L4:
    return "lemma4";
  case LemmaSuite::L7:
    return "lemma7";
  }
  return "?";
}

/// Components that must be empty for the suite to apply.
inline std::vector<Tag> suite_hypothesis(LemmaSuite s) {
  switch (s) {
  case LemmaSuite::L2:
    return {Tag::Lambda, Tag::LambdaBar};
  case LemmaSuite::L3:
    return {Tag::Lambda, Tag::Zero};
  case LemmaSuite::L4:
    return {Tag::LambdaBar, Tag::Zero};
  case LemmaSuite::L7:
    return {Tag::Zero};
  }
  return {};
}

inline bool suite_applies(const PeirceDecomposition &d, LemmaSuite s) {
  for (Tag t : suite_hypothesis(s))
    if (!d.empty(t))
      return false;
  return true;
}

struct LemmaItem {
  std::string label;
  std::string statement;
  bool holds = false;
  /// For items with projection subscripts: the verdict when the outermost
  /// projection is dropped (the narrowest reading of its scope).
  std::optional<bool> narrow_holds;
};

struct LemmaReport {
  LemmaSuite suite;
  std::vector<LemmaItem> items;
  bool all_hold() const {
    for (const auto &i : items)
      if (!i.holds)
        return false;
    return true;
  }
};

namespace detail {

/// Generic elements a (of A_0), h (A_1/2), p (A_l), q (A_lbar): linear
/// combinations of the component bases with one fresh variable per vector.
struct ComponentElements {
  VariableSet vars;
  Bindings<MultiPoly> bind;
};

inline ComponentElements component_elements(const PeirceDecomposition &d) {
  ComponentElements c;
  const std::array<std::pair<const char *, Tag>, 4> names = {
      {{"a", Tag::Zero}, {"h", Tag::Half}, {"p", Tag::Lambda}, {"q", Tag::LambdaBar}}};
  for (const auto &[n, t] : names)
    c.vars.add_block(n, d.component(t).size());
  const std::size_t arity = c.vars.size();
  const std::size_t dim = d.algebra().dim();
  for (const auto &[n, t] : names) {
    std::vector<MultiPoly> x(dim, MultiPoly(arity));
    const auto &basis = d.component(t);
    const std::size_t off = c.vars.offset(n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      MultiPoly v = MultiPoly::variable(arity, off + b);
      for (std::size_t i = 0; i < dim; ++i)
        if (!basis[b][i].is_zero())
          x[i] += basis[b][i] * v;
    }
    c.bind.emplace(n, std::move(x));
  }
  return c;
}

} // namespace detail

/// Inclusions and identities between components (Lemma-style suites).
/// Throws HypothesisViolated naming a nonempty component that the suite
/// requires to be empty.
inline LemmaReport check_lemma_suite(const PeirceDecomposition &d, LemmaSuite s) {
  for (Tag t : suite_hypothesis(s))
    if (!d.empty(t))
      throw HypothesisViolated(suite_name(s) + " requires A_" + tag_name(t) +
                               " = 0, but dim A_" + tag_name(t) + " = " +
                               std::to_string(d.component(t).size()));
  auto ce = detail::component_elements(d);
  const Algebra &alg = d.algebra();
  LemmaReport rep{s, {}};

  auto expr_item = [&](const std::string &label, const std::string &text) {
    auto v = eval_expr(alg, nullptr, parse_expr(text), ce.bind);
    rep.items.push_back({label, text + " = 0", is_zero_vector(v), std::nullopt});
  };

  switch (s) {
  case LemmaSuite::L2:
    expr_item("i", "(a^2)^2");
    expr_item("ii", "h^3");
    expr_item("iii", "(h^2)^2");
    expr_item("iv", "h*a^2");
    expr_item("v", "h*(h*a)");
    expr_item("vi", "(a*h)^2");
    expr_item("vii", "h^2*(a*h)");
    return rep;
  case LemmaSuite::L3:
  case LemmaSuite::L4: {
    const std::string y = s == LemmaSuite::L3 ? "q" : "p";
    expr_item("i", "h^3");
    expr_item("ii", y + "*(h*" + y + ")");
    expr_item("iii", "h*(h*" + y + ")");
    expr_item("iv", "h^2*" + y);
    expr_item("v", "(h^2)^2");
    expr_item("vi", "(" + y + "*h)^2");
    expr_item("vii", "h^2*(" + y + "*h)");
    return rep;
  }
  case LemmaSuite::L7:
    break;
  }

  for (const auto &[label, rule] : std::vector<std::pair<std::string, ComponentRule>>{
           {"incl-1", {"", Tag::Half, Tag::Half, {Tag::Lambda, Tag::LambdaBar}}},
           {"incl-2", {"", Tag::Half, Tag::Lambda, {Tag::Half, Tag::LambdaBar}}},
           {"incl-3", {"", Tag::Half, Tag::LambdaBar, {Tag::Half, Tag::Lambda}}},
           {"incl-4", {"", Tag::Lambda, Tag::Lambda, {}}},
           {"incl-5", {"", Tag::LambdaBar, Tag::LambdaBar, {}}},
           {"incl-6", {"", Tag::Lambda, Tag::LambdaBar, {}}}}) {
    auto v = check_rule(d, rule);
    rep.items.push_back({label, format_rule(rule), v.pass, std::nullopt});
  }

  using G = std::vector<MultiPoly>;
  const G &h = ce.bind.at("h"), &p = ce.bind.at("p"), &q = ce.bind.at("q");
  auto mul = [&](const G &x, const G &y) { return multiply(alg, x, y); };
  auto proj = [&](const G &x, Tag t) { return d.project(x, t); };
  const FieldElement l = FieldElement::lambda(), lb = FieldElement::lambda_bar();
  const FieldElement one(1), two(2);

  auto proj_item = [&](const std::string &label, const std::string &text,
                       const G &inner, std::optional<Tag> outer) {
    LemmaItem it{label, text, false, std::nullopt};
    if (outer) {
      it.holds = is_zero_vector(proj(inner, *outer));
      it.narrow_holds = is_zero_vector(inner);
    } else {
      it.holds = is_zero_vector(inner);
    }
    rep.items.push_back(std::move(it));
  };

  G h2 = mul(h, h);
  proj_item("i", "[(l+1) h(h^2)_l + (lbar+1) h(h^2)_lbar]_1/2 = 0",
            add(scale(l + one, mul(h, proj(h2, Tag::Lambda))),
                scale(lb + one, mul(h, proj(h2, Tag::LambdaBar)))),
            Tag::Half);
  G hp = mul(h, p);
  proj_item("ii", "[(2l+3) h(hp)_lbar + (l+6) h(hp)_1/2]_l = 0",
            add(scale(two * l + FieldElement(3), mul(h, proj(hp, Tag::LambdaBar))),
                scale(l + FieldElement(6), mul(h, proj(hp, Tag::Half)))),
            Tag::Lambda);
  proj_item("iii", "p(ph) = 0", mul(p, mul(p, h)), std::nullopt);
  proj_item("iv", "q(qh) = 0", mul(q, mul(q, h)), std::nullopt);
  G p_qh = mul(p, mul(q, h));
  G q_ph = mul(q, mul(p, h));
  proj_item("v", "(p(qh))_lbar = 0", p_qh, Tag::LambdaBar);
  proj_item("vi", "(q(ph))_l = 0", q_ph, Tag::Lambda);
  proj_item("vii", "(2l-1) p(qh) + (2lbar-1) q(ph) = 0",
            add(scale(two * l - one, p_qh), scale(two * lb - one, q_ph)),
            std::nullopt);
  return rep;
}

} // namespace baric
