// fibskein: evaluate closed-braid invariants and run verification manifests.
//
// Exit codes: 0 success, 1 usage or parse error, 2 indeterminate,
// 3 verification failure.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibskein/class_search.hpp"
#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "fibskein/genfun.hpp"
#include "fibskein/poly_io.hpp"
#include "fibskein/verify.hpp"

using namespace fibskein;
using nlohmann::json;

namespace {

  enum Exit { exit_ok = 0, exit_usage = 1, exit_indeterminate = 2, exit_verify = 3 };

  struct Common {
    std::string spec   = "homfly";
    std::string format = "text";
    std::string oracle = "on";
    size_t      budget = default_search_budget;
  };

  // A built-in name, or a JSON object with l, m, r1, r2 as polynomial text.
  Specialization parse_spec(std::string const& text) {
    if (!text.empty() && text.front() == '{') {
      return Specialization::from_json(json::parse(text));
    }
    return Specialization::from_name(text);
  }

  EvalOptions eval_options(Common const& c) {
    EvalOptions o;
    o.budget          = c.budget;
    o.oracle_fallback = c.oracle == "on";
    return o;
  }

  std::vector<int> parse_ints(std::string const& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) {
        out.push_back(std::stoi(item));
      }
    }
    return out;
  }

  void emit(Common const& c, json const& j, std::string const& text) {
    if (c.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }

  int cmd_eval(Common const& c, std::string const& word) {
    auto const w     = parse_word(word);
    auto const spec  = parse_spec(c.spec);
    auto const value = eval_invariant(w, spec, eval_options(c));
    emit(c, to_json(value), to_string(value));
    return exit_ok;
  }

  void print_report(CheckReport const& r) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.summary() << "\n";
    for (auto const& n : r.notes) {
      std::cout << "  note: " << n << "\n";
    }
    for (auto const& f : r.failures) {
      std::cout << "  fail: " << f << "\n";
    }
  }

  int cmd_verify(Common const& c, std::string const& path, std::string const& check,
                 std::uint64_t seed, bool list) {
    if (list) {
      for (auto const& n : check_names()) {
        std::cout << n << "\n";
      }
      return exit_ok;
    }
    VerifyReport report;
    if (!check.empty()) {
      report.results.push_back(run_named_check(check, json::object(), seed));
    } else if (!path.empty()) {
      report = run_manifest(Manifest::load(path), seed);
    } else {
      throw CLI::ValidationError("verify", "give a manifest path or --check NAME");
    }
    if (c.format == "json") {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      for (auto const& r : report.results) {
        print_report(r);
      }
      std::cout << (report.ok() ? "all checks passed" : "verification failed") << "\n";
    }
    return report.ok() ? exit_ok : exit_verify;
  }

  int cmd_expand(Common const& c, std::string const& word, std::string const& relative) {
    auto const spec = parse_spec(c.spec);
    if (!relative.empty()) {
      auto const coeffs = relative_coefficients(spec, parse_ints(relative));
      json       j      = json::array();
      std::string text;
      for (auto const& [corner, coeff] : coeffs) {
        j.push_back({{"corner", corner}, {"coefficient", to_json(coeff)}});
        text += corner_to_string(corner) + ": " + coeff.to_string() + "\n";
      }
      text.pop_back();
      emit(c, j, text);
      return exit_ok;
    }
    auto const t     = Template::from_word(parse_word(word));
    auto const terms = expand_template(t, spec, eval_options(c));
    json       j     = {{"template", to_json(t.to_word())}, {"spec", spec.label()}};
    json       arr   = json::array();
    std::string text;
    for (auto const& term : terms) {
      arr.push_back({{"corner", term.corner},
                     {"coefficient", to_json(term.coefficient)},
                     {"corner_value", to_json(term.corner_value)}});
      text += "V" + corner_to_string(term.corner) + ": [" + term.coefficient.to_string()
              + "] * [" + term.corner_value.to_string() + "]\n";
    }
    auto const total = sum_expansion(terms);
    j["terms"]       = arr;
    j["sum"]         = to_json(total);
    emit(c, j, text + "sum: " + total.to_string());
    return exit_ok;
  }

  int cmd_genfun(Common const& c, std::string const& tmpl) {
    auto const spec = parse_spec(c.spec);
    auto const g    = build_genfun(Template::from_word(parse_word(tmpl)), spec, eval_options(c));
    emit(c, to_json(g), render(g));
    return exit_ok;
  }

  int cmd_simple(Common const& c, std::string const& word) {
    auto const r = is_simple(parse_word(word), c.budget);
    json       j = {{"explored", r.explored}};
    std::string text;
    switch (r.status) {
      case SimplicityResult::Status::simple:
        j["status"]    = "simple";
        j["partition"] = r.partition->parts;
        j["strands"]   = r.partition->strands;
        text           = "simple, A=" + r.partition->to_string();
        break;
      case SimplicityResult::Status::not_simple:
        j["status"] = "not simple";
        text        = "not simple";
        j["witness"] = to_json(r.witness);
        text += ", witness " + r.witness.to_string();
        break;
      case SimplicityResult::Status::indeterminate:
        j["status"] = "indeterminate";
        text        = "indeterminate (search budget exhausted)";
        break;
    }
    emit(c, j, text);
    return r.status == SimplicityResult::Status::indeterminate ? exit_indeterminate : exit_ok;
  }

  int cmd_classify(Common const& c, int range) {
    auto const res = classify_specializations(range);
    json       fam = json::array();
    std::string text = std::to_string(res.families.size()) + " families (range "
                       + std::to_string(range) + ", " + std::to_string(res.enumerated)
                       + " pairs enumerated, " + std::to_string(res.passed_divisibility)
                       + " pass divisibility)\n";
    for (auto const& f : res.families) {
      auto const sp = specialization_of(f);
      fam.push_back({{"n", f.n},
                     {"k", f.k},
                     {"q", f.q},
                     {"lambda2", f.lambda2.to_string()},
                     {"mu2", f.mu2.to_string()},
                     {"spec", sp.label()},
                     {"l", sp.l().to_string()},
                     {"m", sp.m().to_string()}});
      text += "  (n,k,q)=(" + std::to_string(f.n) + "," + std::to_string(f.k) + ","
              + std::to_string(f.q) + ") lambda^2=" + f.lambda2.to_string()
              + " mu^2=" + f.mu2.to_string() + "  " + sp.label() + ": l=" + sp.l().to_string()
              + ", m=" + sp.m().to_string() + "\n";
    }
    json un = json::array();
    for (auto const& [n, k] : res.unnormalizable) {
      un.push_back({n, k});
    }
    text.pop_back();
    emit(c,
         {{"range", range},
          {"enumerated", res.enumerated},
          {"passed_divisibility", res.passed_divisibility},
          {"families", fam},
          {"unnormalizable", un}},
         text);
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-braid link invariants by run-length skein recursion"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) {
      sub->add_option("--spec", c.spec,
                      "homfly | alexander | jones | degenerate | JSON {l,m,r1,r2}");
    }
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--oracle", c.oracle, "Hecke fallback when the class search is exhausted")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--budget", c.budget, "class-search budget (distinct words)");
  };

  std::string word, path, check, relative;
  std::uint64_t seed  = default_seed;
  int           range = 9;
  bool          list  = false;

  auto* eval = app.add_subcommand("eval", "invariant of the closure of a braid word");
  eval->add_option("word", word, "e.g. \"B3: 1 -2 1\"")->required();
  add_common(eval, true);

  auto* verify = app.add_subcommand("verify", "run a v1 manifest or one named check");
  verify->add_option("manifest", path, "manifest path");
  verify->add_option("--check", check, "run a single named check");
  verify->add_flag("--list", list, "list named checks");
  verify->add_option("--seed", seed, "seed for randomized suites");
  add_common(verify, false);

  auto* expand = app.add_subcommand("expand", "2^k corner expansion of a word's run template");
  expand->add_option("word", word, "braid word; its maximal runs become slots");
  expand->add_option("--relative", relative, "comma-separated k_i: relative coefficients only");
  add_common(expand, true);

  auto* genfun = app.add_subcommand("genfun", "rational generating function of a template");
  genfun->add_option("--template", word, "braid word; its maximal runs become slots")
      ->required();
  add_common(genfun, true);

  auto* simple = app.add_subcommand("simple", "recognize simple braids");
  simple->add_option("word", word)->required();
  add_common(simple, false);

  auto* classify = app.add_subcommand("classify", "rational specializations of the recurrence");
  classify->add_option("--range", range, "bound on |n|, |k|")->check(CLI::Range(1, 200));
  add_common(classify, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*eval) {
      return cmd_eval(c, word);
    }
    if (*verify) {
      return cmd_verify(c, path, check, seed, list);
    }
    if (*expand) {
      if (word.empty() && relative.empty()) {
        throw CLI::ValidationError("expand", "give a word or --relative");
      }
      return cmd_expand(c, word, relative);
    }
    if (*genfun) {
      return cmd_genfun(c, word);
    }
    if (*simple) {
      return cmd_simple(c, word);
    }
    return cmd_classify(c, range);
  } catch (IndeterminateError const& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return exit_indeterminate;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
