#include "eulerdec_cli/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <sstream>

#include "eulerdec/classical.hpp"
#include "eulerdec/decompose.hpp"
#include "eulerdec/diophantine.hpp"
#include "eulerdec/error.hpp"
#include "eulerdec/poly_text.hpp"
#include "eulerdec/recognize.hpp"
#include "json_out.hpp"
#include "verify.hpp"

namespace eulerdec::cli {

namespace {

template <class Parse>
CLI::Validator parses_as(std::string name, Parse parse) {
  return CLI::Validator(
      [parse](std::string& text) -> std::string {
        try {
          parse(text);
          return {};
        } catch (const Error& e) {
          return e.what();
        }
      },
      name);
}

const CLI::Validator kPolyText = parses_as("POLY", [](const std::string& s) { (void)parse_poly(s); });
const CLI::Validator kRatText = parses_as("RAT", [](const std::string& s) { (void)Rat::parse(s); });
const CLI::Validator kBranchText = parses_as("BRANCH", [](const std::string& s) { (void)parse_branch(s); });
const CLI::Validator kCaseText = parses_as("CASE", [](const std::string& s) { (void)parse_case_tag(s); });

std::string chain_text(const std::vector<Poly>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) s += "  o  ";
    s += "(" + format_human(chain[i]) + ")";
  }
  return s;
}

std::string linear_text(const Linear& l) { return format_human(l.to_poly()); }

std::string witness_text(const ExceptionalForm& f) {
  struct Visitor {
    std::string operator()(const CaseI& w) const { return "p = " + format_human(w.p); }
    std::string operator()(const CaseII& w) const { return "p = " + format_human(w.p); }
    std::string operator()(const CaseIII& w) const {
      return "delta = " + linear_text(w.delta) + ", p = " + format_human(w.p);
    }
    std::string operator()(const CaseIV& w) const {
      return "gamma = " + w.gamma.str() + ", delta = " + linear_text(w.delta) + ", t = " + std::to_string(w.t);
    }
    std::string operator()(const CaseV& w) const {
      return "a = " + w.a.str() + ", b = " + w.b.str() + ", delta = " + linear_text(w.delta) +
             ", p = " + format_human(w.p);
    }
  };
  return std::visit(Visitor{}, f.witness);
}

struct Context {
  std::ostream& out;
  bool as_json = false;

  void emit(const json& j, const std::string& text) const {
    if (as_json) {
      out << render(j);
    } else {
      out << text;
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decomposition of Euler and Dickson polynomials, and the alternating power sum equation",
               "eulerdec"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out};
  app.add_flag("--json", ctx.as_json, "Emit JSON; rationals and integers are strings");

  std::function<int()> action;

  // euler / etilde / dickson
  std::size_t index = 0;
  bool human = false;
  auto* euler = app.add_subcommand("euler", "Euler polynomial E_k");
  euler->add_option("k", index, "Index k")->required();
  euler->add_flag("--human", human, "Print x^i notation instead of the coefficient list");
  auto poly_result = [&](const Poly& p) {
    ctx.emit(to_json(p), (human ? format_human(p) : format_coeff_list(p)) + "\n");
    return kExitOk;
  };
  euler->callback([&] { action = [&] { return poly_result(euler_poly(index)); }; });

  auto* etilde = app.add_subcommand("etilde", "Et_m, with E_2m(x) = Et_m((x - 1/2)^2)");
  etilde->add_option("m", index, "Index m")->required();
  etilde->add_flag("--human", human, "Print x^i notation");
  etilde->callback([&] { action = [&] { return poly_result(e_tilde(index)); }; });

  std::string a_text = "1";
  auto* dick = app.add_subcommand("dickson", "Dickson polynomial D_m(x, a)");
  dick->add_option("m", index, "Degree m")->required();
  dick->add_option("--a", a_text, "Parameter a (default 1)")->check(kRatText);
  dick->add_flag("--human", human, "Print x^i notation");
  dick->callback([&] { action = [&] { return poly_result(dickson(index, Rat::parse(a_text))); }; });

  // sum
  std::size_t n_terms = 0;
  bool direct = false;
  auto* sum = app.add_subcommand("sum", "Alternating power sum -1^k + 2^k - ... + (-1)^n n^k");
  sum->add_option("k", index, "Exponent k")->required();
  sum->add_option("n", n_terms, "Number of terms n")->required();
  sum->add_flag("--direct", direct, "Add the terms one by one instead of using the closed form");
  sum->callback([&] {
    action = [&] {
      const Rat v = direct ? alt_power_sum_direct(index, n_terms) : alt_power_sum_closed(index, n_terms);
      ctx.emit(json{{"k", index}, {"n", n_terms}, {"value", to_json(v)}}, v.str() + "\n");
      return kExitOk;
    };
  });

  // decompose
  std::string poly_text;
  std::size_t inner_degree = 0;
  bool all = false;
  bool complete = false;
  auto* dec = app.add_subcommand("decompose", "Normalized decompositions f = outer(inner)");
  dec->add_option("poly", poly_text, "Polynomial, as a coefficient list or in x")->required()->check(kPolyText);
  auto* k_opt = dec->add_option("--k", inner_degree, "Only the decomposition with this inner degree");
  auto* all_opt = dec->add_flag("--all", all, "Every inner degree (default)");
  auto* complete_opt = dec->add_flag("--complete", complete, "Complete chains of indecomposable factors");
  k_opt->excludes(all_opt)->excludes(complete_opt);
  all_opt->excludes(complete_opt);
  dec->callback([&] {
    action = [&] {
      const Poly f = parse_poly(poly_text);
      if (complete) {
        const auto chains = complete_decompositions(f);
        json j = json::array();
        std::string text;
        for (const auto& chain : chains) {
          json c = json::array();
          for (const auto& p : chain) c.push_back(to_json(p));
          j.push_back(std::move(c));
          text += chain_text(chain) + "\n";
        }
        ctx.emit(j, text);
        return kExitOk;
      }
      std::vector<NormalizedDecomposition> pairs;
      if (k_opt->count() > 0) {
        if (auto d = try_decompose(f, inner_degree)) pairs.push_back(*d);
      } else {
        pairs = all_decompositions(f).pairs;
      }
      json j = json::array();
      std::string text;
      for (const auto& d : pairs) {
        j.push_back(to_json(d));
        text += "inner degree " + std::to_string(d.inner_degree()) + ": " + d.scale.str() + " * (" +
                format_human(d.outer) + ")  o  (" + format_human(d.inner) + ")\n";
      }
      if (pairs.empty()) text = "no decomposition\n";
      ctx.emit(j, text);
      return kExitOk;
    };
  });

  // detect
  auto* detect = app.add_subcommand("detect", "Power and Dickson forms up to linear maps");
  detect->add_option("poly", poly_text, "Polynomial")->required()->check(kPolyText);
  detect->callback([&] {
    action = [&] {
      const Poly p = parse_poly(poly_text);
      const auto power = detect_power_form(p);
      std::optional<DicksonForm> dform;
      if (p.deg() >= 3) dform = detect_dickson_form(p);
      json j;
      std::string text = "power: ";
      if (power) {
        j["power"] = {{"u", to_json(power->u)}, {"v", to_json(power->v)}, {"shift", to_json(power->shift)}};
        text += "u = " + power->u.str() + ", v = " + power->v.str() + ", shift = " + power->shift.str() + "\n";
      } else {
        j["power"] = nullptr;
        text += "none\n";
      }
      text += "dickson: ";
      if (dform) {
        j["dickson"] = {{"u", to_json(dform->u)},
                        {"v", to_json(dform->v)},
                        {"a", to_json(dform->a)},
                        {"inner", to_json(dform->inner)}};
        text += "u = " + dform->u.str() + ", v = " + dform->v.str() + ", a = " + dform->a.str() +
                ", inner = " + linear_text(dform->inner) + "\n";
      } else {
        j["dickson"] = nullptr;
        text += p.deg() >= 3 ? "none\n" : "needs degree >= 3\n";
      }
      ctx.emit(j, text);
      return kExitOk;
    };
  });

  // dickson-extrema
  auto* extrema = app.add_subcommand("dickson-extrema", "Types of the extrema +-2a^(k/2) of D_k(x, a)");
  extrema->add_option("k", index, "Degree k")->required();
  extrema->add_option("--a", a_text, "Parameter a (default 1)")->check(kRatText);
  extrema->callback([&] {
    action = [&] {
      json j = json::array();
      std::string text;
      for (const auto& r : dickson_extrema(index, Rat::parse(a_text))) {
        std::string type;
        json t = json::array();
        for (std::size_t m : r.type) {
          t.push_back(m);
          type += (type.empty() ? "" : ",") + std::to_string(m);
        }
        j.push_back({{"value", to_json(r.value)}, {"type", std::move(t)}});
        text += r.value.str() + " (" + type + ")\n";
      }
      ctx.emit(j, text);
      return kExitOk;
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Match g against the exceptional shapes i-v");
  cls->add_option("k", index, "Exponent k >= 7")->required();
  cls->add_option("g", poly_text, "Right-hand side g")->required()->check(kPolyText);
  cls->callback([&] {
    action = [&] {
      const auto report = classify(index, parse_poly(poly_text));
      json matches = json::array();
      std::string text;
      for (const auto& m : report.matches) {
        matches.push_back(to_json(m));
        text += "case " + std::string(to_string(m.tag())) + ": f = " + linear_text(m.f) + "; " + witness_text(m) + "\n";
      }
      if (report.matches.empty()) {
        text = "no exceptional shape found at any split\n";
        for (const auto& s : report.splits_examined) text += "  examined: " + s + "\n";
      }
      ctx.emit(json{{"matches", std::move(matches)}, {"splits_examined", report.splits_examined}}, text);
      return kExitOk;
    };
  });

  // family
  std::string case_text;
  std::string branch_text = "odd-n";
  std::string r_text = "x";
  std::size_t t = 3;
  std::size_t count = 5;
  auto* fam = app.add_subcommand("family", "Explicit infinite solution families");
  fam->add_option("--case", case_text, "i, ii, iii, iv or v")->required()->check(kCaseText);
  fam->add_option("--k", index, "Exponent k")->required();
  fam->add_option("--branch", branch_text, "even-n or odd-n (default odd-n)")->check(kBranchText);
  fam->add_option("--r", r_text, "Parameter polynomial r (cases i, ii, iii, v; default x)")->check(kPolyText);
  fam->add_option("--t", t, "Odd exponent t >= 3 (case iv; default 3)");
  fam->add_option("--count", count, "Number of pairs (default 5)");
  fam->callback([&] {
    action = [&] {
      const Branch br = parse_branch(branch_text);
      const Poly r = parse_poly(r_text);
      auto family = [&]() -> SolutionFamily {
        switch (parse_case_tag(case_text)) {
          case CaseTag::I:
            return family_case_i(index, r, br);
          case CaseTag::II:
            return family_case_ii(index, r, br);
          case CaseTag::III:
            return family_case_iii(index, r, br);
          case CaseTag::IV:
            return family_case_iv(index, t, br);
          case CaseTag::V:
            break;
        }
        return family_case_v(index, r, br);
      }();
      json pairs = json::array();
      std::string text;
      for (const auto& p : family.take(count)) {
        pairs.push_back(to_json(p));
        text += "(" + p.x.get_str() + ", " + p.y.get_str() + ")  terms = " + p.terms.get_str() + "\n";
      }
      ctx.emit(json{{"case", case_text},
                    {"k", index},
                    {"branch", std::string(to_string(br))},
                    {"g", to_json(family.g())},
                    {"pairs", std::move(pairs)}},
               text);
      return kExitOk;
    };
  });

  // search
  long x_max = 100;
  long y_min = -1000;
  long y_max = 1000;
  auto* search = app.add_subcommand("search", "Bounded search for integer solutions");
  search->add_option("k", index, "Exponent k")->required();
  search->add_option("g", poly_text, "Right-hand side g")->required()->check(kPolyText);
  search->add_option("--x-max", x_max, "Largest number of terms (default 100)");
  search->add_option("--y-min", y_min, "Smallest y (default -1000)");
  search->add_option("--y-max", y_max, "Largest y (default 1000)");
  search->callback([&] {
    action = [&] {
      json j = json::array();
      std::string text;
      for (const auto& [x, y] : brute_search(index, parse_poly(poly_text), x_max, y_min, y_max)) {
        j.push_back({{"x", std::to_string(x)}, {"y", std::to_string(y)}});
        text += std::to_string(x) + " " + std::to_string(y) + "\n";
      }
      ctx.emit(j, text);
      return kExitOk;
    };
  });

  // verify-theorems
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify-theorems", "Batch checks of the structural results");
  verify->add_option("--euler-max", vopts.euler_max, "Largest Euler index for the decomposition checks (default 25)");
  verify->add_option("--rak-max", vopts.rak_max, "Largest m for the simple-root check (default 20)");
  verify->add_option("--seed", vopts.seed, "Seed for the sampled parameters (default 1)");
  verify->callback([&] {
    action = [&] {
      const auto rows = verify_theorems(vopts);
      bool all_pass = true;
      json j = json::array();
      std::ostringstream text;
      for (const auto& row : rows) {
        all_pass = all_pass && row.pass;
        j.push_back({{"check", row.check}, {"index", row.index}, {"pass", row.pass}});
        text << row.check << ' ' << row.index << ' ' << (row.pass ? "PASS" : "FAIL") << '\n';
      }
      text << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
      ctx.emit(json{{"rows", std::move(j)}, {"all_pass", all_pass}}, text.str());
      return all_pass ? kExitOk : kExitDomain;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace eulerdec::cli
