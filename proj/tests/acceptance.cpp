// Acceptance criteria, one PASS/FAIL line each.
//
// All comparisons are exact (zero tolerance). The only numeric tolerance is
// the wall-clock budget of the oracle-agreement corpus.
//
// Criteria 1 and 2 check two tabulated statements that the closures
// contradict; they print FAIL together with the corrected statements. The
// exit status is nonzero when any other criterion fails, when 1 or 2 stop
// failing (the defect list is stale), or with --strict when anything fails.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "fibskein/verify.hpp"

using namespace fibskein;

namespace {

  constexpr double wall_budget_seconds = 300.0;
  constexpr int    corpus_max_len      = 6;

  struct Outcome {
    bool                     pass = false;
    std::string              summary;
    std::vector<std::string> info;
  };

  Outcome from_report(CheckReport const& r) {
    Outcome o{r.ok(), r.summary(), r.notes};
    for (auto const& f : r.failures) {
      o.info.push_back("fail: " + f);
    }
    return o;
  }

  // Tabulated values, checked as printed.
  Outcome tabulated_values() {
    Outcome         o;
    InvariantEngine alex(Specialization::alexander());
    InvariantEngine degen(Specialization::degenerate());
    std::vector<LaurentPoly> const nabla{
        LaurentPoly(),
        LaurentPoly(),
        LaurentPoly(1),
        LaurentPoly::s(-1) - LaurentPoly::s(),
        LaurentPoly::s(-2) - 1 + LaurentPoly::s(2),
        LaurentPoly::s(-3) - LaurentPoly::s(-1) + LaurentPoly::s() - LaurentPoly::s(3)};
    int mismatches = 0;
    for (int j = 0; j <= 5; ++j) {
      auto const got = alex.evaluate_laurent(gamma_word(j));
      if (got != nabla[static_cast<size_t>(j)]) {
        ++mismatches;
        o.info.push_back("nabla(" + std::to_string(j) + "): closure " + got.to_string());
      }
    }
    auto const printed = d_gamma_printed_table();
    for (int j = 0; j <= 6; ++j) {
      auto const got = degen.evaluate_laurent(gamma_word(j));
      if (got != printed[static_cast<size_t>(j)]) {
        ++mismatches;
        o.info.push_back("D(" + std::to_string(j) + ") printed " + printed[j].to_string()
                         + ", closure " + got.to_string());
      }
    }
    o.pass    = mismatches == 0;
    o.summary = std::to_string(13 - mismatches) + "/13 tabulated values reproduced";
    o.info.push_back(std::string("corrected D(6) = (1/4)(-s^8 - 6s^6 + 11s^4): ")
                     + (degen.evaluate_laurent(gamma_word(6)) == d_gamma(6) ? "matches"
                                                                             : "differs"));
    return o;
  }

  Outcome closed_forms() {
    Outcome o;
    auto    part = [&](std::string const& label, CheckReport const& r) {
      o.info.push_back(std::string(r.ok() ? "ok   " : "FAIL ") + label + ": " + r.summary());
      for (size_t k = 0; k < r.failures.size() && k < 3; ++k) {
        o.info.push_back("       " + r.failures[k]);
      }
      return r.ok();
    };
    bool ok = part("two-strand closed forms, |a| <= 10",
                   run_named_check("torus2-closed-forms", {{"range", 10}}));
    ok = part("residue formulas as printed, j <= 30",
              run_named_check("nabla-gamma-closed", {{"max_j", 30}, {"start", "as_printed"}}))
         && ok;
    ok = part("D(gamma_j) support within {j+2, j+1, j} and a_j pattern, 7 <= j <= 31",
              run_named_check("d-gamma", {{"max_j", 31}, {"printed_shape", true}}))
         && ok;
    o.pass = ok;
    o.summary = ok ? "all closed forms hold" : "printed closed forms disagree with closures";

    auto const corrected = run_named_check("nabla-gamma-closed", {{"max_j", 30}});
    auto const shape     = run_named_check("d-gamma", {{"max_j", 31}});
    o.info.push_back(std::string("corrected: 6k+1 sum from i = 0 ")
                     + (corrected.ok() ? "matches" : "differs") + " for 4 <= j <= 30");
    o.info.push_back(std::string("corrected: support {j+2, j, j-2} with the a_j pattern ")
                     + (shape.ok() ? "matches" : "differs") + " for 7 <= j <= 31");
    return o;
  }

  Outcome oracle_agreement_timed() {
    AgreementOptions opts;
    opts.max_len = corpus_max_len;
    auto const t0 = std::chrono::steady_clock::now();
    auto const r  = oracle_agreement(opts);
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o = from_report(r);
    o.pass    = o.pass && secs <= wall_budget_seconds;
    o.summary += ", " + std::to_string(static_cast<int>(secs + 0.5)) + " s (budget "
                 + std::to_string(static_cast<int>(wall_budget_seconds)) + " s)";
    return o;
  }

  Outcome combined(std::vector<CheckReport> const& rs) {
    CheckReport all;
    for (auto const& r : rs) {
      all.merge(r);
    }
    return from_report(all);
  }

  struct Criterion {
    int                      id;
    std::string              title;
    std::function<Outcome()> run;
  };

}  // namespace

int main(int argc, char** argv) {
  bool const strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;

  // Criteria that check tabulated statements contradicted by the closures.
  std::map<int, std::string> const known_defects{
      {1, "tabulated D(6) constant term lacks the factor s^4"},
      {2, "6k+1 sum starts at i = 1 instead of 0; D(gamma_j) support is {j+2, j, j-2}"}};

  std::vector<Criterion> const criteria{
      {1, "tabulated values: nabla(0..5), D(0..6)", tabulated_values},
      {2, "closed forms vs engine", closed_forms},
      {3, "simple-braid formula, s_r <= 7, n <= 9",
       [] { return from_report(run_named_check("simple-braids", {{"max_total", 7}, {"max_strands", 9}})); }},
      {4, "oracle agreement, length <= 6 on B2-B4 plus named examples", oracle_agreement_timed},
      {5, "invariance suite and skein axiom",
       [] {
         return combined({run_named_check("invariance", {{"count", 1000}}),
                          run_named_check("skein-axiom", {{"count", 1000}})});
       }},
      {6, "gamma_k HOMFLY recurrences, k <= 4",
       [] { return from_report(run_named_check("homfly-gamma-recurrences", {{"k_max", 4}})); }},
      {7, "degree laws",
       [] { return from_report(run_named_check("degree-laws", {{"samples", 200}})); }},
      {8, "classifier: three families at range 9, none new up to 15",
       [] { return from_report(run_named_check("classifier", {{"range", 9}, {"max_range", 15}})); }},
      {9, "generating functions, k <= 2, n <= 3, 0 <= a_i <= 6",
       [] { return from_report(run_named_check("genfun", {{"max_exponent", 6}})); }},
      {10, "relative expansion coefficients at (-5, 6)",
       [] {
         auto o = from_report(run_named_check("ekt-coefficients"));
         o.info.push_back("excluded: the full value at (-5, 6) needs the L(0,1) diagram");
         return o;
       }},
      {11, "D properties across the corpus",
       [] {
         return from_report(
             run_named_check("d-properties", {{"max_len", corpus_max_len}, {"pairs", 500}}));
       }},
      {12, "independence probes and two-strand degrees",
       [] { return from_report(run_named_check("independence-probes")); }},
  };

  std::set<int> failed;
  for (auto const& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass    = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
              << " -- " << o.summary << "\n";
    for (auto const& line : o.info) {
      std::cout << "      " << line << "\n";
    }
    if (!o.pass) {
      failed.insert(c.id);
    }
  }

  int unexpected = 0;
  for (int id : failed) {
    if (!known_defects.contains(id)) {
      ++unexpected;
    }
  }
  int stale = 0;
  for (auto const& [id, why] : known_defects) {
    if (!failed.contains(id)) {
      ++stale;
      std::cout << "note: criterion " << id << " no longer fails; update the defect list\n";
    }
  }
  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size()
            << " criteria pass\n";
  for (int id : failed) {
    auto it = known_defects.find(id);
    std::cout << "  criterion " << id << " fails"
              << (it != known_defects.end() ? ": " + it->second : " unexpectedly") << "\n";
  }
  if (strict) {
    return failed.empty() ? 0 : 1;
  }
  return unexpected == 0 && stale == 0 ? 0 : 1;
}
