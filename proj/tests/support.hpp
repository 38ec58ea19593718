#pragma once

// Shared fixtures and random samplers for the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "baric/baric.hpp"

namespace baric::testing {

inline std::string data_path(const std::string &name) {
  return std::string(BARIC_DATA_DIR) + "/" + name;
}

inline AlgebraFile fixture(const std::string &name) { return load_algebra(data_path(name)); }

/// Fixtures that carry a weight.
inline const std::vector<std::string> &weighted_fixtures() {
  static const std::vector<std::string> names = {
      "example.alg", "example_mutated.alg", "gametic.alg", "bernstein3.alg",
      "euv.alg",     "euvw.alg",            "nonassoc2.alg"};
  return names;
}

/// Rational with numerator in [-10, 10] and denominator in [1, 10].
inline Rational random_rational(std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  return Rational(num(rng), den(rng));
}

inline FieldElement random_field_element(std::mt19937 &rng) {
  return FieldElement(random_rational(rng), random_rational(rng));
}

inline Element random_element(std::mt19937 &rng, std::size_t dim) {
  Element x;
  for (std::size_t i = 0; i < dim; ++i)
    x.push_back(random_field_element(rng));
  return x;
}

inline bool reduced(const Rational &r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return sgn(r.get_den()) > 0 && g == 1;
}

inline bool reduced(const FieldElement &x) {
  return reduced(x.rational_part()) && reduced(x.lambda_part());
}

/// Concrete bindings for every variable of e, drawn at random.
inline Bindings<FieldElement> random_bindings(std::mt19937 &rng, const Algebra &a,
                                              const IdentityExpr &e) {
  Bindings<FieldElement> b;
  for (const auto &v : e.variables())
    b.emplace(v, random_element(rng, a.dim()));
  return b;
}

/// Evaluates e at `samples` random points; true when every value is zero.
inline bool vanishes_at_random_points(std::mt19937 &rng, const Algebra &a,
                                      const WeightFunction *w, const IdentityExpr &e,
                                      int samples = 20) {
  for (int i = 0; i < samples; ++i) {
    auto v = eval_expr(a, w, e, random_bindings(rng, a, e));
    if (!v.empty() && !is_zero_vector(v))
      return false;
  }
  return true;
}

} // namespace baric::testing
