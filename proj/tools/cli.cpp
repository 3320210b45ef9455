#include "cli.hpp"

#include <oscitab/errors.hpp>
#include <oscitab/partition.hpp>
#include <oscitab/polynomial.hpp>
#include <oscitab/psi.hpp>
#include <oscitab/tableau.hpp>
#include <oscitab/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

namespace oscitab::cli {

namespace {

using nlohmann::json;

constexpr long kEnumerateGuard = 1000000;  // enumerate needs --limit beyond this

int env_workers() {
  const char* value = std::getenv("OSCITAB_WORKERS");
  if (value == nullptr) return 1;
  const long parsed = std::strtol(value, nullptr, 10);
  return parsed < 1 ? 1 : static_cast<int>(std::min(parsed, 256L));
}

struct WeightChoice {
  enum class Kind { poly, hook, content } kind = Kind::poly;
  BivariatePolynomial poly;
  int r = 0;
  std::string text;
};

// Accepted forms: "wt:a:b" (size^a * position^b), "hook:r", "content:r",
// or any polynomial in the library's text grammar.
WeightChoice parse_weight(const std::string& text) {
  WeightChoice choice;
  choice.text = text;
  auto parse_int = [&](const std::string& piece) {
    try {
      const int value = std::stoi(piece);
      if (value < 0) throw ValidationError("weight parameter must be nonnegative: " + text);
      return value;
    } catch (const std::logic_error&) {
      throw ValidationError("malformed weight id: " + text);
    }
  };
  if (text.rfind("wt:", 0) == 0) {
    const auto second = text.find(':', 3);
    if (second == std::string::npos) throw ValidationError("malformed weight id: " + text);
    const int a = parse_int(text.substr(3, second - 3));
    const int b = parse_int(text.substr(second + 1));
    choice.poly = BivariatePolynomial::term(1, a, b);
    return choice;
  }
  if (text.rfind("hook:", 0) == 0) {
    choice.kind = WeightChoice::Kind::hook;
    choice.r = parse_int(text.substr(5));
    return choice;
  }
  if (text.rfind("content:", 0) == 0) {
    choice.kind = WeightChoice::Kind::content;
    choice.r = parse_int(text.substr(8));
    return choice;
  }
  choice.poly = parse_polynomial(text);
  return choice;
}

StepWeight to_step_weight(const WeightChoice& choice) {
  switch (choice.kind) {
    case WeightChoice::Kind::hook: return hook_step_weight(choice.r);
    case WeightChoice::Kind::content: return content_step_weight(choice.r);
    case WeightChoice::Kind::poly: break;
  }
  return polynomial_step_weight(choice.poly);
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          json input, json result, const std::string& plain) {
  if (format == "json") {
    out << json{{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}}
               .dump()
        << '\n';
  } else {
    out << plain << '\n';
  }
}

struct TableauSetRequest {
  std::string partition_text = "[]";
  std::optional<int> length;
  std::optional<int> n;

  Partition shape() const { return partition_from_json(partition_text); }

  int resolve_length(const Partition& shape) const {
    if (length.has_value()) {
      if (*length < 0) throw ValidationError("--length must be nonnegative");
      return *length;
    }
    if (!n.has_value()) throw ValidationError("one of --length or --n is required");
    if (*n < 0) throw ValidationError("--n must be nonnegative");
    return shape.size() + 2 * *n;
  }

  json input_json(const Partition& shape, int resolved_length) const {
    json input{{"partition", shape.parts()}, {"length", resolved_length}};
    if (n.has_value()) input["n"] = *n;
    return input;
  }
};

void add_tableau_set_options(CLI::App* sub, TableauSetRequest& request) {
  sub->add_option("--partition", request.partition_text,
                  "Ending shape as a JSON array, e.g. [2,1]");
  auto* length = sub->add_option("--length", request.length, "Total walk length l");
  auto* n = sub->add_option("--n", request.n, "Number of add/remove pairs: l = |partition| + 2n");
  length->excludes(n);
  n->excludes(length);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, enumeration, average weights and operator algebra "
               "for oscillating tableaux"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  TableauSetRequest count_request;
  auto* count_cmd = app.add_subcommand("count", "Count oscillating tableaux of a shape and length");
  add_tableau_set_options(count_cmd, count_request);

  TableauSetRequest enum_request;
  long enum_limit = -1;
  auto* enum_cmd = app.add_subcommand("enumerate", "List oscillating tableaux, one JSON array per line");
  add_tableau_set_options(enum_cmd, enum_request);
  enum_cmd->add_option("--limit", enum_limit, "Stop after this many tableaux");

  TableauSetRequest avg_request;
  std::string avg_weight_text;
  std::string avg_mode = "both";
  auto* avg_cmd = app.add_subcommand("avg", "Average weight over all tableaux of a shape and length");
  add_tableau_set_options(avg_cmd, avg_request);
  avg_cmd->add_option("--weight", avg_weight_text,
                      "Weight: wt:a:b, hook:r, content:r, or a polynomial in x and y")
      ->required();
  avg_cmd->add_option("--mode", avg_mode, "brute, formula, or both")
      ->check(CLI::IsMember({"brute", "formula", "both"}))
      ->capture_default_str();

  std::string psi_text, inv_text, qpoly_text;
  auto* psi_cmd = app.add_subcommand("psi", "Apply the operator to a polynomial");
  psi_cmd->add_option("polynomial", psi_text, "Polynomial in x and y")->required();
  auto* inv_cmd = app.add_subcommand("inv-psi", "Apply the inverse operator to a polynomial");
  inv_cmd->add_option("polynomial", inv_text, "Polynomial in x and y")->required();
  auto* qpoly_cmd = app.add_subcommand(
      "qpoly", "Q polynomial of a weight polynomial: (l+1) Q(k, l) is the average weight");
  qpoly_cmd->add_option("polynomial", qpoly_text, "Polynomial in x and y")->required();

  std::string formula_id;
  int formula_k = 0, formula_n = 0, formula_r = 0;
  auto* formula_cmd = app.add_subcommand("closed-form", "Evaluate a named closed form");
  formula_cmd
      ->add_option("id", formula_id,
                   "One of hz, wt20, wt11, empty_binom_x, binom_i, xr_at_origin")
      ->required();
  formula_cmd->add_option("--k", formula_k, "Ending shape size");
  formula_cmd->add_option("--n", formula_n, "Number of add/remove pairs");
  formula_cmd->add_option("--r", formula_r, "Binomial parameter");

  int asy_i = 0, asy_j = 0;
  std::string asy_regime;
  auto* asy_cmd = app.add_subcommand(
      "asymptotic", "Leading coefficient of the average of size^i * position^j");
  asy_cmd->add_option("--i", asy_i, "Size exponent")->required();
  asy_cmd->add_option("--j", asy_j, "Position exponent")->required();
  asy_cmd->add_option("--regime", asy_regime, "large_size or large_length")
      ->required()
      ->check(CLI::IsMember({"large_size", "large_length"}));

  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exact verification suite");
  verify_cmd->add_option("--max-size", verify_options.max_size, "Largest ending-shape size")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_options.max_n, "Largest n per shape")
      ->capture_default_str();
  verify_cmd->add_option("--max-degree", verify_options.max_degree,
                         "Degree bound for random operator checks")
      ->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  const int workers = env_workers();
  try {
    if (count_cmd->parsed()) {
      const Partition shape = count_request.shape();
      const int length = count_request.resolve_length(shape);
      const Int count = count_oscillating(shape, length);
      emit(out, format, "count", count_request.input_json(shape, length), count.get_str(),
           count.get_str());
      return 0;
    }

    if (enum_cmd->parsed()) {
      const Partition shape = enum_request.shape();
      const int length = enum_request.resolve_length(shape);
      const Int count = count_oscillating(shape, length);
      if (enum_limit < 0 && count > kEnumerateGuard) {
        err << "usage error: " << count.get_str()
            << " tableaux; pass --limit to enumerate sets larger than " << kEnumerateGuard
            << '\n';
        return 1;
      }
      long remaining = enum_limit < 0 ? kEnumerateGuard : enum_limit;
      long produced = 0;
      json items = json::array();
      enumerate_oscillating(shape, length, [&](const OscillatingTableau& t) {
        if (remaining == 0) return false;
        --remaining;
        ++produced;
        if (format == "json")
          items.push_back(json::parse(to_json_string(t)));
        else
          out << to_json_string(t) << '\n';
        return true;
      });
      if (format == "json") {
        json input = enum_request.input_json(shape, length);
        if (enum_limit >= 0) input["limit"] = enum_limit;
        emit(out, format, "enumerate", std::move(input),
             json{{"count", count.get_str()}, {"returned", produced}, {"tableaux", items}}, "");
      }
      return 0;
    }

    if (avg_cmd->parsed()) {
      const Partition shape = avg_request.shape();
      const int length = avg_request.resolve_length(shape);
      const int k = shape.size();
      if (count_oscillating(shape, length) == 0)
        throw EmptySetError("no oscillating tableaux of shape " + to_json_string(shape) +
                            " and length " + std::to_string(length));
      const int n = (length - k) / 2;
      const WeightChoice choice = parse_weight(avg_weight_text);

      std::optional<Rational> brute, formula_value;
      if (avg_mode != "formula")
        brute = average_weight_bruteforce(shape, length, to_step_weight(choice), workers);
      if (avg_mode != "brute") {
        switch (choice.kind) {
          case WeightChoice::Kind::poly:
            formula_value = average_weight_formula(k, n, choice.poly);
            break;
          case WeightChoice::Kind::hook:
            if (k != 0)
              throw ValidationError("hook:r has a closed form only for the empty partition");
            formula_value = hook_product_average(choice.r, n);
            break;
          case WeightChoice::Kind::content:
            if (k != 0)
              throw ValidationError("content:r has a closed form only for the empty partition");
            formula_value = content_product_average(choice.r, n);
            break;
        }
      }

      json input = avg_request.input_json(shape, length);
      input["weight"] = avg_weight_text;
      input["mode"] = avg_mode;
      json result;
      std::string plain;
      if (avg_mode == "brute") {
        result = {{"brute", brute->get_str()}};
        plain = brute->get_str();
      } else if (avg_mode == "formula") {
        result = {{"formula", formula_value->get_str()}};
        plain = formula_value->get_str();
      } else {
        const bool agrees = *brute == *formula_value;  // exact comparison
        result = {{"brute", brute->get_str()},
                  {"formula", formula_value->get_str()},
                  {"agrees", agrees}};
        plain = "brute: " + brute->get_str() + "\nformula: " + formula_value->get_str() +
                "\nagrees: " + (agrees ? "true" : "false");
        emit(out, format, "avg", std::move(input), std::move(result), plain);
        return agrees ? 0 : 2;
      }
      emit(out, format, "avg", std::move(input), std::move(result), plain);
      return 0;
    }

    if (psi_cmd->parsed() || inv_cmd->parsed() || qpoly_cmd->parsed()) {
      const std::string& text = psi_cmd->parsed() ? psi_text
                                : inv_cmd->parsed() ? inv_text
                                                    : qpoly_text;
      const std::string command = psi_cmd->parsed() ? "psi"
                                  : inv_cmd->parsed() ? "inv-psi"
                                                      : "qpoly";
      const BivariatePolynomial input_poly = parse_polynomial(text);
      const BivariatePolynomial result_poly = psi_cmd->parsed() ? psi_apply(input_poly)
                                              : inv_cmd->parsed() ? psi_inverse(input_poly)
                                                                  : q_polynomial(input_poly);
      json result = json::parse(to_json_string(result_poly));
      result["text"] = to_text(result_poly);
      emit(out, format, command, json{{"polynomial", to_text(input_poly)}}, std::move(result),
           to_text(result_poly));
      return 0;
    }

    if (formula_cmd->parsed()) {
      const Formula formula = parse_formula(formula_id);
      const Rational value = closed_form(formula, formula_k, formula_n, formula_r);
      emit(out, format, "closed-form",
           json{{"id", formula_id}, {"k", formula_k}, {"n", formula_n}, {"r", formula_r}},
           value.get_str(), value.get_str());
      return 0;
    }

    if (asy_cmd->parsed()) {
      const AsymptoticRegime regime = asy_regime == "large_size"
                                          ? AsymptoticRegime::large_size
                                          : AsymptoticRegime::large_length;
      const AsymptoticCoefficient coeff = asymptotic_coefficient(asy_i, asy_j, regime);
      const std::string variable = regime == AsymptoticRegime::large_size ? "size" : "2n";
      emit(out, format, "asymptotic",
           json{{"i", asy_i}, {"j", asy_j}, {"regime", asy_regime}},
           json{{"coefficient", coeff.coefficient.get_str()}, {"exponent", coeff.exponent}},
           "coefficient: " + coeff.coefficient.get_str() +
               "\nexponent: " + std::to_string(coeff.exponent) + "  (of " + variable + ")");
      return 0;
    }

    if (verify_cmd->parsed()) {
      verify_options.workers = workers;
      const std::vector<CheckResult> results = run_all_checks(verify_options);
      bool all_passed = true;
      json checks = json::array();
      for (const CheckResult& check : results) {
        all_passed = all_passed && check.passed;
        if (format == "json")
          checks.push_back(
              {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        else
          out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
              << '\n';
      }
      if (format == "json") {
        emit(out, format, "verify",
             json{{"max_size", verify_options.max_size},
                  {"max_n", verify_options.max_n},
                  {"max_degree", verify_options.max_degree}},
             json{{"checks", std::move(checks)}, {"passed", all_passed}}, "");
      } else {
        out << (all_passed ? "all checks passed" : "CHECKS FAILED") << '\n';
      }
      return all_passed ? 0 : 2;
    }
  } catch (const EmptySetError& e) {
    err << "empty tableau set: " << e.what() << '\n';
    return 1;
  } catch (const UnknownFormulaError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const AssertionFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 2;
  }
  err << "usage error: no command given\n";
  return 1;
}

}  // namespace oscitab::cli
