#pragma once

// Free commutative nonassociative terms with weight coefficients, partial
// linearization, and symbolic identity checks on generic elements.

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/numberfield.hpp"
#include "baric/sympoly.hpp"

namespace baric {

// ---------------------------------------------------------------------------
// MagmaTerm

/// A variable or an unordered product of two terms. Children of a product
/// are kept sorted, so commutatively equal terms are structurally equal.
class MagmaTerm {
public:
  static MagmaTerm leaf(std::string name) {
    auto n = std::make_shared<Node>();
    n->name = std::move(name);
    n->degree = 1;
    return MagmaTerm(std::move(n));
  }

  static MagmaTerm product(MagmaTerm a, MagmaTerm b) {
    if (compare(b, a) < 0)
      std::swap(a, b);
    auto n = std::make_shared<Node>();
    n->degree = a.degree() + b.degree();
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return MagmaTerm(std::move(n));
  }

  /// x^1 = x, x^{k+1} = x x^k.
  static MagmaTerm power(const MagmaTerm &x, unsigned k) {
    if (k == 0)
      throw std::invalid_argument("term power must be >= 1");
    MagmaTerm p = x;
    for (unsigned i = 1; i < k; ++i)
      p = product(x, p);
    return p;
  }

  bool is_leaf() const { return node_->left == nullptr; }
  const std::string &name() const { return node_->name; }
  MagmaTerm left() const { return MagmaTerm(node_->left); }
  MagmaTerm right() const { return MagmaTerm(node_->right); }
  unsigned degree() const { return node_->degree; }

  unsigned degree_in(const std::string &var) const {
    if (is_leaf())
      return name() == var ? 1 : 0;
    return left().degree_in(var) + right().degree_in(var);
  }

  void collect_variables(std::set<std::string> &out) const {
    if (is_leaf()) {
      out.insert(name());
      return;
    }
    left().collect_variables(out);
    right().collect_variables(out);
  }

  /// If this term is the principal power x^k of a variable, returns (x, k).
  std::optional<std::pair<std::string, unsigned>> as_leaf_power() const {
    if (is_leaf())
      return std::make_pair(name(), 1u);
    MagmaTerm a = left(), b = right();
    if (!a.is_leaf())
      return std::nullopt;
    auto rest = b.as_leaf_power();
    if (!rest || rest->first != a.name())
      return std::nullopt;
    return std::make_pair(a.name(), rest->second + 1);
  }

  /// Total order: degree, then leaves before products, then names or
  /// children lexicographically.
  static int compare(const MagmaTerm &a, const MagmaTerm &b) {
    if (a.node_ == b.node_)
      return 0;
    if (a.degree() != b.degree())
      return a.degree() < b.degree() ? -1 : 1;
    if (a.is_leaf() != b.is_leaf())
      return a.is_leaf() ? -1 : 1;
    if (a.is_leaf())
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    int c = compare(a.left(), b.left());
    if (c != 0)
      return c;
    return compare(a.right(), b.right());
  }

  friend bool operator<(const MagmaTerm &a, const MagmaTerm &b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const MagmaTerm &a, const MagmaTerm &b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const MagmaTerm &a, const MagmaTerm &b) {
    return compare(a, b) != 0;
  }

private:
  struct Node {
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    unsigned degree = 0;
  };

  explicit MagmaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline std::string format_factor(const MagmaTerm &t);

inline std::string format_term(const MagmaTerm &t) {
  if (auto p = t.as_leaf_power()) {
    if (p->second == 1)
      return p->first;
    return p->first + "^" + std::to_string(p->second);
  }
  return format_factor(t.left()) + "*" + format_factor(t.right());
}

inline std::string format_factor(const MagmaTerm &t) {
  if (t.as_leaf_power())
    return format_term(t);
  return "(" + format_term(t) + ")";
}

} // namespace detail

inline std::string format(const MagmaTerm &t) { return detail::format_term(t); }

// ---------------------------------------------------------------------------
// IdentityExpr

/// Product of weight factors omega(u)^k, keyed by the (opaque) term u.
using WeightFactors = std::map<MagmaTerm, unsigned>;

/// Monomial key: weight factors times at most one term. Monomials without a
/// term are scalars; they only occur inside intermediate computations.
struct MonomialKey {
  WeightFactors weights;
  std::optional<MagmaTerm> term;

  friend bool operator<(const MonomialKey &a, const MonomialKey &b) {
    if (a.term.has_value() != b.term.has_value())
      return !a.term.has_value();
    if (a.term && *a.term != *b.term)
      return *a.term < *b.term;
    return a.weights < b.weights;
  }
  friend bool operator==(const MonomialKey &a, const MonomialKey &b) {
    return !(a < b) && !(b < a);
  }

  unsigned degree() const {
    unsigned d = term ? term->degree() : 0;
    for (const auto &[u, k] : weights)
      d += u.degree() * k;
    return d;
  }
};

/// Linear combination over Q(l) of weight-monomials times terms.
class IdentityExpr {
public:
  using Map = std::map<MonomialKey, FieldElement>;

  IdentityExpr() = default;

  static IdentityExpr scalar(const FieldElement &c) {
    IdentityExpr e;
    e.add_monomial({}, c);
    return e;
  }
  static IdentityExpr variable(const std::string &name) {
    IdentityExpr e;
    e.add_monomial({{}, MagmaTerm::leaf(name)}, FieldElement(1));
    return e;
  }
  static IdentityExpr of_term(const MagmaTerm &t,
                              const FieldElement &c = FieldElement(1)) {
    IdentityExpr e;
    e.add_monomial({{}, t}, c);
    return e;
  }

  const Map &monomials() const { return m_; }
  bool is_zero() const { return m_.empty(); }

  /// True when every monomial carries a term (a proper identity).
  bool is_element_valued() const {
    for (const auto &[k, c] : m_)
      if (!k.term)
        return false;
    return true;
  }
  bool is_scalar_valued() const {
    for (const auto &[k, c] : m_)
      if (k.term)
        return false;
    return true;
  }

  /// Common degree of all monomials, or nullopt if inhomogeneous/empty.
  std::optional<unsigned> homogeneous_degree() const {
    std::optional<unsigned> d;
    for (const auto &[k, c] : m_) {
      unsigned kd = k.degree();
      if (d && *d != kd)
        return std::nullopt;
      d = kd;
    }
    return d;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto &[k, c] : m_) {
      if (k.term)
        k.term->collect_variables(out);
      for (const auto &[u, e] : k.weights)
        u.collect_variables(out);
    }
    return out;
  }

  void add_monomial(const MonomialKey &k, const FieldElement &c) {
    if (c.is_zero())
      return;
    auto it = m_.find(k);
    if (it == m_.end()) {
      m_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero())
      m_.erase(it);
  }

  IdentityExpr &operator+=(const IdentityExpr &o) {
    for (const auto &[k, c] : o.m_)
      add_monomial(k, c);
    return *this;
  }
  IdentityExpr &operator-=(const IdentityExpr &o) {
    for (const auto &[k, c] : o.m_)
      add_monomial(k, -c);
    return *this;
  }
  friend IdentityExpr operator+(IdentityExpr a, const IdentityExpr &b) {
    return a += b;
  }
  friend IdentityExpr operator-(IdentityExpr a, const IdentityExpr &b) {
    return a -= b;
  }
  friend IdentityExpr operator*(const FieldElement &s, const IdentityExpr &a) {
    IdentityExpr out;
    for (const auto &[k, c] : a.m_)
      out.add_monomial(k, s * c);
    return out;
  }

  /// Bilinear product: terms multiply in the magma, weights commute.
  friend IdentityExpr operator*(const IdentityExpr &a, const IdentityExpr &b) {
    IdentityExpr out;
    for (const auto &[ka, ca] : a.m_)
      for (const auto &[kb, cb] : b.m_) {
        MonomialKey k;
        k.weights = ka.weights;
        for (const auto &[u, e] : kb.weights)
          k.weights[u] += e;
        if (ka.term && kb.term)
          k.term = MagmaTerm::product(*ka.term, *kb.term);
        else if (ka.term)
          k.term = ka.term;
        else
          k.term = kb.term;
        out.add_monomial(k, ca * cb);
      }
    return out;
  }

  friend bool operator==(const IdentityExpr &a, const IdentityExpr &b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const IdentityExpr &a, const IdentityExpr &b) {
    return !(a == b);
  }

private:
  Map m_;
};

/// omega applied to an element-valued expression (linear), giving a scalar.
inline IdentityExpr weight_of(const IdentityExpr &e) {
  IdentityExpr out;
  for (const auto &[k, c] : e.monomials()) {
    if (!k.term)
      throw std::invalid_argument("weight of a scalar is undefined");
    MonomialKey s;
    s.weights = k.weights;
    s.weights[*k.term] += 1;
    out.add_monomial(s, c);
  }
  return out;
}

/// p^1 = p, p^{k+1} = p p^k; principal power for elements, ordinary power
/// for scalars.
inline IdentityExpr power(const IdentityExpr &p, unsigned k) {
  if (k == 0)
    throw std::invalid_argument("exponent must be >= 1");
  IdentityExpr out = p;
  for (unsigned i = 1; i < k; ++i)
    out = p * out;
  return out;
}

namespace detail {

inline bool looks_negative(const FieldElement &c) {
  return (c.is_rational() && sgn(c.rational_part()) < 0) ||
         (sgn(c.rational_part()) == 0 && sgn(c.lambda_part()) < 0);
}

inline std::string format_weights(const WeightFactors &w) {
  std::string out;
  for (const auto &[u, k] : w) {
    if (!out.empty())
      out += "*";
    out += "w(" + format(u) + ")";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

} // namespace detail

/// Canonical text, re-readable by parse_expr.
inline std::string format(const IdentityExpr &e) {
  if (e.is_zero())
    return "0";
  std::string out;
  for (const auto &[k, c] : e.monomials()) {
    bool neg = detail::looks_negative(c);
    FieldElement mag = neg ? -c : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::vector<std::string> parts;
    if (mag != FieldElement(1) || (k.weights.empty() && !k.term)) {
      std::string cs = format(mag);
      if (sgn(mag.rational_part()) != 0 && sgn(mag.lambda_part()) != 0)
        cs = "(" + cs + ")";
      parts.push_back(cs);
    }
    if (!k.weights.empty())
      parts.push_back(detail::format_weights(k.weights));
    if (k.term)
      parts.push_back(parts.empty() ? format(*k.term)
                                    : detail::format_factor(*k.term));
    for (std::size_t i = 0; i < parts.size(); ++i)
      out += (i ? "*" : "") + parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
//
//   expr    ::= ("+"|"-")? product (("+"|"-") product)*
//   product ::= power ("*"? power)*          left-associative
//   power   ::= atom ("^" digits)?           principal power
//   atom    ::= number | "l" | var | "w" "(" expr ")" | "(" expr ")"
//   var     ::= letter other than l, w, followed by digits
//   number  ::= digits ("/" digits)?

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  IdentityExpr parse() {
    IdentityExpr e = expr();
    skip();
    if (pos_ < s_.size())
      fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string &m) { throw ParseError(pos_, m); }

  static void check_kinds(const IdentityExpr &a, const IdentityExpr &b,
                          std::size_t at) {
    if (a.is_zero() || b.is_zero())
      return;
    if ((a.is_scalar_valued() && !b.is_scalar_valued()) ||
        (a.is_element_valued() && !b.is_element_valued()))
      throw ParseError(at, "cannot add a scalar and an algebra element");
  }

  IdentityExpr expr() {
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    IdentityExpr acc = product();
    if (neg)
      acc = FieldElement(-1) * acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-')
        return acc;
      std::size_t at = pos_;
      ++pos_;
      IdentityExpr rhs = product();
      check_kinds(acc, rhs, at);
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  bool starts_atom(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  IdentityExpr product() {
    IdentityExpr acc = power_();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power_();
      } else if (starts_atom(c)) {
        acc = acc * power_();
      } else {
        return acc;
      }
    }
  }

  unsigned digits_value() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected exponent");
    unsigned long v = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (v == 0 || v > 64)
      throw ParseError(start, "exponent out of range");
    return static_cast<unsigned>(v);
  }

  IdentityExpr power_() {
    IdentityExpr base = atom();
    if (peek() == '^') {
      ++pos_;
      base = power(base, digits_value());
    }
    return base;
  }

  IdentityExpr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      IdentityExpr e = expr();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      FieldElementReader r(s_, pos_);
      Rational q = r.parse_rational();
      pos_ = r.position();
      return IdentityExpr::scalar(FieldElement(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "l")
        return IdentityExpr::scalar(FieldElement::lambda());
      if (name == "w") {
        if (peek() != '(')
          fail("expected '(' after w");
        ++pos_;
        std::size_t at = pos_;
        IdentityExpr inner = expr();
        if (peek() != ')')
          fail("expected ')'");
        ++pos_;
        if (!inner.is_element_valued())
          throw ParseError(at, "argument of w(...) must be an algebra element");
        return weight_of(inner);
      }
      if (name[0] == 'l' || name[0] == 'w')
        throw ParseError(start, "variable names may not start with 'l' or 'w'");
      return IdentityExpr::variable(name);
    }
    if (c == '\0')
      fail("unexpected end of expression");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses an identity (an element-valued expression read as "... = 0").
inline IdentityExpr parse_expr(std::string_view text) {
  IdentityExpr e = detail::ExprParser(text).parse();
  if (!e.is_element_valued())
    throw ParseError(0, "identity must be an algebra element in every term");
  return e;
}

// ---------------------------------------------------------------------------
// Linearization

namespace detail {

using Series = std::vector<IdentityExpr>;

inline Series series_mul(const Series &a, const Series &b, unsigned order) {
  Series out(order + 1);
  for (unsigned i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (unsigned j = 0; j < b.size() && i + j <= order; ++j)
      if (!b[j].is_zero())
        out[i + j] += a[i] * b[j];
  }
  return out;
}

class Linearizer {
public:
  Linearizer(std::string var, std::string fresh, unsigned order)
      : var_(std::move(var)), fresh_(std::move(fresh)), order_(order) {}

  Series term(const MagmaTerm &t) {
    auto it = memo_.find(t);
    if (it != memo_.end())
      return it->second;
    Series s(order_ + 1);
    if (t.is_leaf()) {
      s[0] = IdentityExpr::of_term(t);
      if (t.name() == var_ && order_ >= 1)
        s[1] = IdentityExpr::variable(fresh_);
    } else {
      s = series_mul(term(t.left()), term(t.right()), order_);
    }
    memo_.emplace(t, s);
    return s;
  }

  Series weight(const MagmaTerm &u) {
    Series s = term(u);
    for (auto &x : s)
      if (!x.is_zero())
        x = weight_of(x);
    return s;
  }

  IdentityExpr run(const IdentityExpr &e) {
    IdentityExpr out;
    for (const auto &[k, c] : e.monomials()) {
      Series s(order_ + 1);
      s[0] = IdentityExpr::scalar(c);
      for (const auto &[u, mult] : k.weights) {
        Series w = weight(u);
        for (unsigned i = 0; i < mult; ++i)
          s = series_mul(s, w, order_);
      }
      if (k.term)
        s = series_mul(s, term(*k.term), order_);
      out += s[order_];
    }
    return out;
  }

private:
  std::string var_;
  std::string fresh_;
  unsigned order_;
  std::map<MagmaTerm, Series> memo_;
};

} // namespace detail

/// Substitutes var -> var + t*fresh and returns the coefficient of t^order
/// (no division by order!).
inline IdentityExpr linearize(const IdentityExpr &e, const std::string &var,
                              const std::string &fresh, unsigned order) {
  if (order == 0)
    throw std::invalid_argument("linearization order must be >= 1");
  if (var == fresh)
    throw std::invalid_argument("linearization variable must be fresh");
  return detail::Linearizer(var, fresh, order).run(e);
}

/// Rewrites every weight factor omega(u) as the product of omega(v) over the
/// variable occurrences v of u (omega is multiplicative). Used to compare
/// identities written with different but equal weight factors.
inline IdentityExpr expand_weights(const IdentityExpr &e) {
  IdentityExpr out;
  for (const auto &[k, c] : e.monomials()) {
    MonomialKey n;
    n.term = k.term;
    for (const auto &[u, mult] : k.weights) {
      std::set<std::string> vs;
      u.collect_variables(vs);
      for (const auto &v : vs)
        n.weights[MagmaTerm::leaf(v)] += mult * u.degree_in(v);
    }
    out.add_monomial(n, c);
  }
  return out;
}

inline MagmaTerm rename(const MagmaTerm &t, const std::map<std::string, std::string> &to) {
  if (t.is_leaf()) {
    auto it = to.find(t.name());
    return it == to.end() ? t : MagmaTerm::leaf(it->second);
  }
  return MagmaTerm::product(rename(t.left(), to), rename(t.right(), to));
}

/// Simultaneous renaming of variables, e.g. {{"y", "z"}, {"z", "y"}} swaps.
inline IdentityExpr rename(const IdentityExpr &e,
                           const std::map<std::string, std::string> &to) {
  IdentityExpr out;
  for (const auto &[k, c] : e.monomials()) {
    MonomialKey n;
    if (k.term)
      n.term = rename(*k.term, to);
    for (const auto &[u, mult] : k.weights)
      n.weights[rename(u, to)] += mult;
    out.add_monomial(n, c);
  }
  return out;
}

/// c with a == c * b, if one exists (b nonzero).
inline std::optional<FieldElement> proportionality(const IdentityExpr &a,
                                                   const IdentityExpr &b) {
  if (b.is_zero() || a.monomials().size() != b.monomials().size())
    return std::nullopt;
  const auto &[k0, c0] = *b.monomials().begin();
  auto it = a.monomials().find(k0);
  if (it == a.monomials().end())
    return std::nullopt;
  FieldElement ratio = it->second / c0;
  if (a == ratio * b)
    return ratio;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Evaluation

template <class S> using Bindings = std::map<std::string, std::vector<S>>;

namespace detail {

template <class S> class Evaluator {
public:
  Evaluator(const Algebra &a, const WeightFunction *w, const Bindings<S> &b)
      : alg_(a), w_(w), bind_(b) {}

  const std::vector<S> &term(const MagmaTerm &t) {
    auto it = memo_.find(t);
    if (it != memo_.end())
      return it->second;
    std::vector<S> v;
    if (t.is_leaf()) {
      auto b = bind_.find(t.name());
      if (b == bind_.end())
        throw std::invalid_argument("unbound variable: " + t.name());
      if (b->second.size() != alg_.dim())
        throw std::invalid_argument("binding for " + t.name() +
                                    " has wrong dimension");
      v = b->second;
    } else {
      // copies: the memo may rehash under recursion
      std::vector<S> l = term(t.left());
      std::vector<S> r = term(t.right());
      v = multiply(alg_, l, r);
    }
    return memo_.emplace(t, std::move(v)).first->second;
  }

  S weight(const MagmaTerm &u) {
    if (!w_)
      throw std::invalid_argument("identity uses w(...) but no weight given");
    return (*w_)(term(u));
  }

  std::vector<S> run(const IdentityExpr &e) {
    std::vector<S> out;
    for (const auto &[k, c] : e.monomials()) {
      if (!k.term)
        throw std::invalid_argument("cannot evaluate a scalar monomial");
      const std::vector<S> &tv = term(*k.term);
      if (out.empty())
        out.assign(alg_.dim(), zero_like(tv[0]));
      std::optional<S> factor;
      for (const auto &[u, mult] : k.weights) {
        S wu = weight(u);
        for (unsigned i = 0; i < mult; ++i)
          factor = factor ? *factor * wu : wu;
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (is_zero(tv[i]))
          continue;
        S v = c * tv[i];
        if (factor)
          v = v * *factor;
        out[i] += v;
      }
    }
    return out;
  }

private:
  const Algebra &alg_;
  const WeightFunction *w_;
  const Bindings<S> &bind_;
  std::map<MagmaTerm, std::vector<S>> memo_;
};

} // namespace detail

/// Value of the expression with variables bound to (generic or concrete)
/// elements. The zero expression gives an empty vector.
template <class S>
std::vector<S> eval_expr(const Algebra &a, const WeightFunction *w,
                         const IdentityExpr &e, const Bindings<S> &bindings) {
  return detail::Evaluator<S>(a, w, bindings).run(e);
}

// ---------------------------------------------------------------------------
// Checkers

struct Verdict {
  bool holds = false;
  std::string identity;
  /// Defect coordinates on generic elements (all zero iff holds).
  std::vector<MultiPoly> defect;
  std::vector<std::string> variable_names;

  std::string detail() const {
    if (holds)
      return "identity " + identity + " = 0 holds on generic elements";
    std::size_t nonzero = 0;
    std::string first;
    for (std::size_t i = 0; i < defect.size(); ++i)
      if (!defect[i].is_zero()) {
        ++nonzero;
        if (first.empty())
          first = "coordinate " + std::to_string(i + 1) + " of defect is " +
                  format(defect[i], variable_names);
      }
    return "identity " + identity + " fails: " + std::to_string(nonzero) +
           " nonzero coordinate(s); " + first;
  }
};

/// Generic elements x = (x1..xn), y = (y1..yn), ... for each variable of the
/// expression, in name order.
struct GenericBindings {
  VariableSet vars;
  Bindings<MultiPoly> bindings;
};

inline GenericBindings make_generic_bindings(const Algebra &a,
                                             const std::set<std::string> &names,
                                             std::size_t extra_slots = 0) {
  GenericBindings g;
  for (const auto &n : names)
    g.vars.add_block(n, a.dim());
  for (std::size_t i = 0; i < extra_slots; ++i)
    g.vars.add("t" + std::to_string(i));
  for (const auto &n : names)
    g.bindings.emplace(n, generic_element(a.dim(), g.vars, n));
  return g;
}

inline Verdict check_identity(const Algebra &a, const WeightFunction *w,
                              const IdentityExpr &e) {
  auto g = make_generic_bindings(a, e.variables());
  Verdict v;
  v.identity = format(e);
  v.variable_names = g.vars.names();
  v.defect = eval_expr(a, w, e, g.bindings);
  if (v.defect.empty())
    v.defect.assign(a.dim(), MultiPoly(g.vars.size()));
  v.holds = is_zero_vector(v.defect);
  return v;
}

inline const IdentityExpr &degree6_identity() {
  static const IdentityExpr e = parse_expr("2*x^2*x^4 - w(x)^2*x^4 - w(x)^4*x^2");
  return e;
}
inline const IdentityExpr &bernstein_identity() {
  static const IdentityExpr e = parse_expr("(x^2)^2 - w(x)^2*x^2");
  return e;
}
inline const IdentityExpr &jordan_identity() {
  static const IdentityExpr e = parse_expr("(x^2)*(y*x) - ((x^2)*y)*x");
  return e;
}

/// x^i x^j - x^{i+j} for 2 <= i <= j, i + j <= max_degree.
inline std::vector<IdentityExpr> power_associativity_identities(unsigned max_degree) {
  std::vector<IdentityExpr> out;
  const IdentityExpr x = IdentityExpr::variable("x");
  for (unsigned s = 4; s <= max_degree; ++s)
    for (unsigned i = 2; 2 * i <= s; ++i)
      out.push_back(power(x, i) * power(x, s - i) - power(x, s));
  return out;
}

inline Verdict check_deg6(const Algebra &a, const WeightFunction &w) {
  return check_identity(a, &w, degree6_identity());
}
inline Verdict check_bernstein(const Algebra &a, const WeightFunction &w) {
  return check_identity(a, &w, bernstein_identity());
}
inline Verdict check_jordan(const Algebra &a) {
  return check_identity(a, nullptr, jordan_identity());
}

/// Bounded-degree power associativity; the first failing identity is
/// reported, or the last one checked when all hold.
inline Verdict check_power_associative(const Algebra &a, unsigned max_degree = 6) {
  if (max_degree < 4)
    throw std::invalid_argument("power associativity degree must be >= 4");
  Verdict last;
  for (const auto &e : power_associativity_identities(max_degree)) {
    last = check_identity(a, nullptr, e);
    if (!last.holds)
      return last;
  }
  last.identity = "x^i*x^j - x^(i+j), i+j <= " + std::to_string(max_degree);
  return last;
}

} // namespace baric
