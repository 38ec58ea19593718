#pragma once

// Line-oriented algebra files.
//
//   dim = 3
//   basis = e1 e2 e3
//   product e1 e1 = e1 + e3        # omitted pairs are zero
//   weight e1 = 1                  # optional, one line per basis element
//   element idem0 = e1 + (1/4 + 1/4*l)*e3
//
// Everything after '#' is a comment. Coefficients use the field-element
// grammar, with "l" for lambda.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/numberfield.hpp"

namespace baric {

/// Malformed text, with a 1-based line and column.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string &source, std::size_t line, std::size_t column,
              const std::string &message)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

/// Well-formed text that breaks a named rule (e.g. "undeclared-name").
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string &rule, const std::string &message)
      : std::runtime_error(rule + ": " + message), rule_(rule) {}
  const std::string &rule() const noexcept { return rule_; }

private:
  std::string rule_;
};

struct AlgebraFile {
  Algebra algebra;
  std::optional<WeightFunction> weight;
  std::vector<std::pair<std::string, Element>> elements;

  const Element *element(const std::string &label) const {
    for (const auto &[n, e] : elements)
      if (n == label)
        return &e;
    return nullptr;
  }
};

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// coef? name (("+"|"-") coef? name)* where coef is a rational, an optional
/// "l" factor, or a parenthesised field element, followed by an optional "*".
class LinCombReader {
public:
  LinCombReader(std::string_view text, const std::vector<std::string> &names)
      : s_(text), names_(names) {}

  Element parse() {
    Element out(names_.size(), FieldElement(0));
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == s_.size())
        return out;
      pos_ = save;
    }
    bool first = true;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) {
        if (first)
          throw ParseError(pos_, "empty linear combination");
        return out;
      }
      bool neg = false;
      char c = s_[pos_];
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      FieldElement coef = coefficient();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      }
      std::size_t at = pos_;
      std::string name = identifier();
      std::size_t k = index_of(name, at);
      out[k] += neg ? -coef : coef;
      first = false;
    }
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool lambda_here() const {
    return pos_ < s_.size() && s_[pos_] == 'l' &&
           !(pos_ + 1 < s_.size() && ident_char(s_[pos_ + 1]));
  }

  FieldElement coefficient() {
    if (s_[pos_] == '(') {
      ++pos_;
      FieldElementReader r(s_, pos_);
      FieldElement c = r.parse_felem();
      pos_ = r.position();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw ParseError(pos_, "expected ')'");
      ++pos_;
      return c;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])) || lambda_here()) {
      FieldElementReader r(s_, pos_);
      FieldElement c = r.parse_term();
      pos_ = r.position();
      return c;
    }
    return FieldElement(1);
  }

  std::string identifier() {
    if (pos_ >= s_.size() || !ident_start(s_[pos_]))
      throw ParseError(pos_, "expected a basis name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_]))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t index_of(const std::string &name, std::size_t at) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    throw ValidationError("undeclared-name",
                          "'" + name + "' is not a basis name (column " +
                              std::to_string(at + 1) + ")");
  }

  std::string_view s_;
  const std::vector<std::string> &names_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

} // namespace detail

/// Parses "e1 + (1/4+1/4*l)*e3" against the given basis names.
inline Element parse_element(std::string_view text,
                             const std::vector<std::string> &names) {
  return detail::LinCombReader(text, names).parse();
}

/// Parses "1, 0, 1/2*l" into a weight vector of length dim.
inline WeightFunction parse_weight_list(std::string_view text, std::size_t dim) {
  WeightFunction w;
  std::string s(text);
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
    w.w.push_back(parse_field_element(item));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  if (w.w.size() != dim)
    throw ValidationError("weight-length", "weight has " + std::to_string(w.w.size()) +
                                               " entries, algebra has dimension " +
                                               std::to_string(dim));
  return w;
}

inline AlgebraFile parse_algebra(std::string_view text,
                                 const std::string &source = "<input>") {
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  std::vector<ProductRule> products;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_lines;
  std::map<std::size_t, FieldElement> weights;
  std::vector<std::pair<std::string, Element>> elements;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    if (detail::trim(line).empty())
      continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw FormatError(source, line_no, 1, "expected '='");
    std::string lhs = detail::trim(line.substr(0, eq));
    std::string_view rhs = line.substr(eq + 1);
    const std::size_t rhs_col = eq + 2;
    auto words = detail::split_ws(lhs);
    const std::string &kw = words.empty() ? lhs : words[0];

    auto need_basis = [&] {
      if (names.empty())
        throw ValidationError("basis-before-use",
                              "line " + std::to_string(line_no) + ": '" + kw +
                                  "' appears before the basis line");
    };
    auto index = [&](const std::string &n) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n)
          return i;
      throw ValidationError("undeclared-name", "line " + std::to_string(line_no) +
                                                   ": '" + n + "' is not a basis name");
    };
    auto lincomb = [&](std::string_view s) {
      try {
        return parse_element(s, names);
      } catch (const ParseError &e) {
        throw FormatError(source, line_no, rhs_col + e.position(), e.message());
      } catch (const ValidationError &e) {
        throw ValidationError(e.rule(), "line " + std::to_string(line_no) + ": " + e.what());
      }
    };

    if (kw == "dim" && words.size() == 1) {
      std::string v = detail::trim(rhs);
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError(source, line_no, rhs_col, "dim must be a positive integer");
      if (dim)
        throw ValidationError("duplicate-dim", "line " + std::to_string(line_no));
      dim = std::stoul(v);
      if (*dim == 0)
        throw ValidationError("dimension", "dim must be positive");
    } else if (kw == "basis" && words.size() == 1) {
      if (!names.empty())
        throw ValidationError("duplicate-basis", "line " + std::to_string(line_no));
      names = detail::split_ws(std::string(rhs));
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto &n = names[i];
        bool ok = detail::ident_start(n[0]);
        for (char c : n)
          ok = ok && detail::ident_char(c);
        if (!ok)
          throw FormatError(source, line_no, rhs_col, "invalid basis name '" + n + "'");
        if (n == "l")
          throw ValidationError("reserved-name", "'l' denotes lambda and cannot be a basis name");
        for (std::size_t j = 0; j < i; ++j)
          if (names[j] == n)
            throw ValidationError("duplicate-basis-name", "'" + n + "' declared twice");
      }
      if (names.empty())
        throw FormatError(source, line_no, rhs_col, "empty basis");
    } else if (kw == "product") {
      need_basis();
      if (words.size() != 3)
        throw FormatError(source, line_no, 1, "expected 'product <a> <b> = ...'");
      std::size_t i = index(words[1]), j = index(words[2]);
      auto key = std::minmax(i, j);
      if (product_lines.count(key))
        throw ValidationError("duplicate-product",
                              "line " + std::to_string(line_no) + ": product " +
                                  names[key.first] + " " + names[key.second] +
                                  " already given on line " +
                                  std::to_string(product_lines[key]));
      product_lines[key] = line_no;
      products.push_back({key.first, key.second, lincomb(rhs)});
    } else if (kw == "weight") {
      need_basis();
      if (words.size() != 2)
        throw FormatError(source, line_no, 1, "expected 'weight <name> = <felem>'");
      std::size_t i = index(words[1]);
      if (weights.count(i))
        throw ValidationError("duplicate-weight", "line " + std::to_string(line_no) +
                                                      ": weight of " + words[1] +
                                                      " given twice");
      try {
        weights[i] = parse_field_element(rhs);
      } catch (const ParseError &e) {
        throw FormatError(source, line_no, rhs_col + e.position(), e.message());
      }
    } else if (kw == "element") {
      need_basis();
      if (words.size() != 2)
        throw FormatError(source, line_no, 1, "expected 'element <label> = ...'");
      for (const auto &[n, e] : elements)
        if (n == words[1])
          throw ValidationError("duplicate-element", "element '" + n + "' defined twice");
      elements.emplace_back(words[1], lincomb(rhs));
    } else {
      throw FormatError(source, line_no, 1, "unknown directive '" + kw + "'");
    }
  }

  if (!dim)
    throw ValidationError("missing-dim", "no 'dim' line");
  if (names.empty())
    throw ValidationError("missing-basis", "no 'basis' line");
  if (names.size() != *dim)
    throw ValidationError("dimension-mismatch",
                          "dim = " + std::to_string(*dim) + " but " +
                              std::to_string(names.size()) + " basis names");

  AlgebraFile f{Algebra(names, products), std::nullopt, std::move(elements)};
  if (!weights.empty()) {
    if (weights.size() != names.size())
      throw ValidationError("weight-incomplete",
                            "weight given for " + std::to_string(weights.size()) +
                                " of " + std::to_string(names.size()) +
                                " basis elements");
    WeightFunction w;
    for (std::size_t i = 0; i < names.size(); ++i)
      w.w.push_back(weights[i]);
    auto check = verify_weight(f.algebra, w);
    if (!check.ok) {
      std::string msg = check.nonzero ? "not multiplicative on" : "weight is zero";
      for (const auto &[i, j] : check.violations)
        msg += " (" + names[i] + "," + names[j] + ")";
      throw ValidationError("weight-not-multiplicative", msg);
    }
    f.weight = w;
  }
  return f;
}

inline AlgebraFile load_algebra(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), path);
}

/// Canonical text of an algebra file; parse_algebra(dump(f)) == f.
inline std::string dump(const AlgebraFile &f) {
  const Algebra &a = f.algebra;
  const auto &names = a.basis_names();
  std::string out = "dim = " + std::to_string(a.dim()) + "\nbasis =";
  for (const auto &n : names)
    out += " " + n;
  out += "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (!is_zero_vector(a.product(i, j)))
        out += "product " + names[i] + " " + names[j] + " = " + format(a, a.product(i, j)) +
               "\n";
  if (f.weight)
    for (std::size_t i = 0; i < a.dim(); ++i)
      out += "weight " + names[i] + " = " + format(f.weight->w[i]) + "\n";
  for (const auto &[label, e] : f.elements)
    out += "element " + label + " = " + format(a, e) + "\n";
  return out;
}

} // namespace baric
