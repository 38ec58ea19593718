// baric: command-line checks for commutative baric algebras over Q(l).

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baric/baric.hpp"

namespace {

using namespace baric;

/// Input or usage problem; reported on stderr with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string span_text(const Algebra &a, const std::vector<Element> &basis) {
  if (basis.empty())
    return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < basis.size(); ++i)
    s += (i ? ", " : "") + format(a, basis[i]);
  return s + "}";
}

WeightFunction resolve_weight(const AlgebraFile &f, const std::string &flag) {
  if (!flag.empty()) {
    WeightFunction w = parse_weight_list(flag, f.algebra.dim());
    auto check = verify_weight(f.algebra, w);
    if (!check.ok)
      throw InputError("--weight is not a weight function of this algebra");
    return w;
  }
  if (!f.weight)
    throw InputError("this command needs a weight: add 'weight' lines or pass --weight");
  return *f.weight;
}

Element resolve_element(const AlgebraFile &f, const std::string &text) {
  if (const Element *e = f.element(text))
    return *e;
  return parse_element(text, f.algebra.basis_names());
}

// ---------------------------------------------------------------------------

int cmd_check(const AlgebraFile &f, const std::vector<std::string> &which,
              const std::string &weight_flag, Report &rep) {
  std::optional<WeightFunction> w;
  for (const auto &name : which) {
    Verdict v;
    if (name == "deg6" || name == "bernstein") {
      if (!w)
        w = resolve_weight(f, weight_flag);
      v = name == "deg6" ? check_deg6(f.algebra, *w) : check_bernstein(f.algebra, *w);
    } else if (name == "jordan") {
      v = check_jordan(f.algebra);
    } else if (name.rfind("pa:", 0) == 0 || name == "pa") {
      unsigned d = 6;
      if (name.size() > 3) {
        std::string digits = name.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 3)
          throw InputError("bad power-associativity degree in '" + name + "'");
        d = static_cast<unsigned>(std::stoul(digits));
      }
      if (d < 4)
        throw InputError("power-associativity degree must be >= 4");
      v = check_power_associative(f.algebra, d);
    } else {
      throw InputError("unknown check '" + name + "' (use deg6, bernstein, jordan, pa:<d>)");
    }
    rep.check(name, v.holds, v.detail());
  }
  return rep.exit_code();
}

void report_decomposition(const PeirceDecomposition &d, const std::string &prefix,
                          Report &rep) {
  const Algebra &a = d.algebra();
  for (Tag t : kEigenTags)
    rep.info(prefix + "A_" + tag_name(t), span_text(a, d.component(t)));
  for (const auto &v : check_product_rules(d)) {
    std::string detail = format_rule(v.rule);
    if (v.vacuous)
      detail += " (vacuous: a factor component is 0)";
    for (const auto &w : v.witnesses) {
      detail += "; witness (" + format(a, w.left) + ", " + format(a, w.right) +
                ") -> " + format(a, w.product);
    }
    rep.check(prefix + "rule-" + v.rule.label, v.pass, detail);
  }
  rep.info(prefix + "lemma-variables",
           "generic a in A_0, h in A_1/2, p in A_l, q in A_lbar; (.)_t is the projection on A_t");
  for (LemmaSuite s : {LemmaSuite::L2, LemmaSuite::L3, LemmaSuite::L4, LemmaSuite::L7}) {
    if (!suite_applies(d, s)) {
      std::string need;
      for (Tag t : suite_hypothesis(s))
        need += (need.empty() ? "A_" : " = A_") + tag_name(t);
      rep.check(prefix + suite_name(s), Status::NotApplicable, "requires " + need + " = 0");
      continue;
    }
    for (const auto &item : check_lemma_suite(d, s).items) {
      std::string detail = item.statement;
      if (item.narrow_holds)
        detail += std::string("; without the outer projection: ") +
                  (*item.narrow_holds ? "holds" : "fails");
      rep.check(prefix + suite_name(s) + "-" + item.label, item.holds, detail);
    }
  }
}

int cmd_peirce(const AlgebraFile &f, const std::vector<std::string> &idems,
               const std::string &weight_flag, Report &rep) {
  WeightFunction w = resolve_weight(f, weight_flag);
  std::vector<std::pair<std::string, Element>> targets;
  if (idems.empty()) {
    targets = f.elements;
    if (targets.empty())
      throw InputError("no idempotent: pass --idempotent or add 'element' lines");
  } else {
    for (const auto &s : idems)
      targets.emplace_back(s, resolve_element(f, s));
  }
  for (const auto &[label, e] : targets) {
    const std::string prefix = targets.size() > 1 ? label + "/" : "";
    rep.info(prefix + "idempotent", format(f.algebra, e));
    if (!verify_idempotent(f.algebra, w, e)) {
      std::string why = multiply(f.algebra, e, e) != e ? "e*e != e" : "w(e) != 1";
      rep.check(prefix + "idempotent", Status::Error,
                format(f.algebra, e) + " is not a weight-one idempotent (" + why + ")");
      continue;
    }
    auto op = left_mult(f.algebra, w, e);
    UniPoly m = minimal_polynomial(op);
    rep.info(prefix + "minimal-polynomial", format(m));
    rep.check(prefix + "annihilator", divides(m, peirce_annihilator()),
              "minimal polynomial of l_e divides 4X^4 + 5X^2 - 3X");
    try {
      PeirceDecomposition d(f.algebra, w, e);
      rep.check(prefix + "decomposition", true,
                "1 + " + std::to_string(f.algebra.dim() - 1) + " = dim A");
      report_decomposition(d, prefix, rep);
    } catch (const DecompositionFailure &ex) {
      rep.check(prefix + "decomposition", false, ex.what());
    }
  }
  return rep.exit_code();
}

std::optional<Element> some_idempotent(const AlgebraFile &f, const WeightFunction &w) {
  for (const auto &[label, e] : f.elements)
    if (verify_idempotent(f.algebra, w, e))
      return e;
  if (f.algebra.dim() > 3)
    return std::nullopt;
  auto set = find_idempotents(f.algebra, w);
  if (!set.points.empty())
    return set.points.front();
  for (const auto &fam : set.families)
    for (int v : {0, 1, 2, -1, 3}) {
      try {
        Element e = fam.at(std::vector<FieldElement>(fam.parameters.size(), FieldElement(v)));
        if (verify_idempotent(f.algebra, w, e))
          return e;
      } catch (const std::domain_error &) {
      }
    }
  return std::nullopt;
}

int cmd_train(const AlgebraFile &f, unsigned max_rank, const std::string &weight_flag,
              Report &rep) {
  if (max_rank < 2)
    throw InputError("--max-rank must be >= 2");
  WeightFunction w = resolve_weight(f, weight_flag);
  auto eq = find_train_equation(f.algebra, w, max_rank);
  if (!eq) {
    rep.check("train", false, "no train equation of rank <= " + std::to_string(max_rank));
    return rep.exit_code();
  }
  rep.check("train", true, "rank " + std::to_string(eq->rank) + ": " + format(*eq));
  UniPoly p = train_poly(*eq);
  auto fac = factor_train_poly(p);
  rep.info("train-polynomial", format(p));
  rep.info("factorization", format(fac));
  rep.check("factorization", fac.splits,
            fac.splits ? "splits over {0, 1, 1/2, l, lbar}"
                       : "unsplit factor " + format(fac.remainder));
  if (eq->rank == 3) {
    auto v = classify_rank3(*eq);
    std::string g = v.gamma ? (*v.gamma == FieldElement::lambda_bar() ? "lbar"
                                                                      : format(*v.gamma))
                            : "none";
    rep.check("rank3-form", v.ok,
              "gamma = " + g + ", -1/2 gamma(2gamma^2 + gamma + 3) = " + format(v.scalar_test));
  } else {
    rep.check("rank3-form", Status::NotApplicable, "rank is " + std::to_string(eq->rank));
  }
  if (eq->rank == 4) {
    auto v = classify_rank4(*eq);
    std::string forms;
    for (const auto &m : v.matches)
      forms += (forms.empty() ? "" : ", ") + format(m);
    for (const auto &m : v.matches)
      if (m.label == "case2-alpha0")
        rep.info("note", "matched form comes from the case analysis (train roots 1/2, 0), "
                         "not from the listed families i-iv");
    rep.check("rank4-form", v.ok, v.ok ? forms : "matches no rank-4 form");
  } else {
    rep.check("rank4-form", Status::NotApplicable, "rank is " + std::to_string(eq->rank));
  }
  auto e = some_idempotent(f, w);
  if (!e) {
    rep.check("p6-form", Status::NotApplicable, "no weight-one idempotent available");
    return rep.exit_code();
  }
  try {
    PeirceDecomposition d(f.algebra, w, *e);
    if (!d.empty(Tag::Zero)) {
      rep.check("p6-form", Status::NotApplicable,
                "requires A_0 = 0 (relative to " + format(f.algebra, *e) + ")");
    } else {
      auto v = verify_p6_form(*eq);
      rep.check("p6-form", v.ok,
                "(r, s, t) = (" + std::to_string(v.r) + ", " + std::to_string(v.s) + ", " +
                    std::to_string(v.t) + "); " + v.reason);
    }
  } catch (const DecompositionFailure &ex) {
    rep.check("p6-form", Status::NotApplicable, ex.what());
  }
  return rep.exit_code();
}

int cmd_idempotents(const AlgebraFile &f, const std::string &weight_flag, Report &rep) {
  std::vector<WeightFunction> weights;
  if (!weight_flag.empty() || f.weight) {
    weights.push_back(resolve_weight(f, weight_flag));
  } else {
    weights = find_weights(f.algebra);
    if (weights.empty())
      rep.info("weights", "none");
  }
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const WeightFunction &w = weights[k];
    std::string wtext;
    for (std::size_t i = 0; i < w.w.size(); ++i)
      wtext += (i ? ", " : "") + format(w.w[i]);
    const std::string prefix = weights.size() > 1 ? "w" + std::to_string(k + 1) + "/" : "";
    rep.info(prefix + "weight", "(" + wtext + ")");
    auto set = find_idempotents(f.algebra, w);
    if (set.empty())
      rep.info(prefix + "idempotents", "none");
    bool ok = true;
    std::size_t checked = 0;
    for (const auto &p : set.points) {
      rep.info(prefix + "point", format(f.algebra, p));
      ok = ok && verify_idempotent(f.algebra, w, p);
      ++checked;
    }
    for (const auto &fam : set.families) {
      std::string params;
      for (const auto &n : fam.parameters)
        params += (params.empty() ? "" : ", ") + n;
      rep.info(prefix + "family", format(fam, f.algebra) + "  (parameters: " + params + ")");
      for (int v : {0, 1, -1, 2}) {
        try {
          Element e =
              fam.at(std::vector<FieldElement>(fam.parameters.size(), FieldElement(v)));
          ok = ok && verify_idempotent(f.algebra, w, e);
          ++checked;
        } catch (const std::domain_error &) {
        }
      }
    }
    rep.check(prefix + "idempotents-verified", ok,
              std::to_string(checked) + " element(s) satisfy e*e = e, w(e) = 1");
  }
  return rep.exit_code();
}

int cmd_linearize(unsigned order, const std::string &expr_text, const std::string &var) {
  IdentityExpr e = expr_text.empty() ? degree6_identity() : parse_expr(expr_text);
  auto vars = e.variables();
  auto fresh = [&vars](std::string n) {
    while (vars.count(n))
      n += "1";
    vars.insert(n);
    return n;
  };
  const std::string y = fresh("y");
  IdentityExpr out = linearize(e, var, y, 1);
  if (order == 2)
    out = linearize(out, var, fresh("z"), 1);
  std::cout << format(out) << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact checks for commutative baric algebras over Q(l), l^2 = (-3 - l)/2"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool porcelain = false;
  std::string dump_path;
  app.add_flag("--porcelain", porcelain, "tab-separated output for scripts");
  app.add_option("--dump", dump_path, "print the canonical form of an algebra file");

  std::string file, weight_flag, expr_text, var = "x";
  std::vector<std::string> checks, idems;
  unsigned max_rank = 8, order = 1;

  auto *check = app.add_subcommand("check", "verify identities on generic elements");
  check->add_option("file", file, "algebra file")->required();
  check->add_option("checks", checks, "deg6 | bernstein | jordan | pa:<d>");
  check->add_option("--weight", weight_flag, "weight as a comma-separated list");

  auto *peirce = app.add_subcommand("peirce", "Peirce decomposition, product rules, lemma suites");
  peirce->add_option("file", file, "algebra file")->required();
  peirce->add_option("--idempotent", idems, "element expression or 'element' label");
  peirce->add_option("--weight", weight_flag, "weight as a comma-separated list");

  auto *train = app.add_subcommand("train", "minimal principal train equation");
  train->add_option("file", file, "algebra file")->required();
  train->add_option("--max-rank", max_rank, "largest rank to try")->capture_default_str();
  train->add_option("--weight", weight_flag, "weight as a comma-separated list");

  auto *idem = app.add_subcommand("idempotents", "weight functions and weight-one idempotents");
  idem->add_option("file", file, "algebra file")->required();
  idem->add_option("--weight", weight_flag, "weight as a comma-separated list");

  auto *lin = app.add_subcommand("linearize", "partial linearization of an identity");
  lin->add_option("--order", order, "1 (x -> x + ty) or 2 (then x -> x + sz)")
      ->check(CLI::IsMember({1u, 2u}))
      ->capture_default_str();
  lin->add_option("--expr", expr_text, "identity (default: the degree-6 identity)");
  lin->add_option("--var", var, "variable to linearize")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!dump_path.empty()) {
      std::cout << dump(load_algebra(dump_path));
      return 0;
    }
    if (lin->parsed())
      return cmd_linearize(order, expr_text, var);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }
    AlgebraFile f = load_algebra(file);
    Report rep;
    int code = 0;
    if (check->parsed()) {
      if (checks.empty())
        checks = {"deg6", "bernstein", "jordan", "pa:6"};
      code = cmd_check(f, checks, weight_flag, rep);
    } else if (peirce->parsed()) {
      code = cmd_peirce(f, idems, weight_flag, rep);
    } else if (train->parsed()) {
      code = cmd_train(f, max_rank, weight_flag, rep);
    } else if (idem->parsed()) {
      code = cmd_idempotents(f, weight_flag, rep);
    }
    rep.print(std::cout, porcelain);
    return code;
  } catch (const std::exception &e) {
    std::cerr << "baric: error: " << e.what() << '\n';
    return 2;
  }
}
