#include "doctest.h"

#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "fibskein/verify.hpp"

using namespace fibskein;

namespace {
  LaurentPoly const      s  = LaurentPoly::s();
  LaurentPoly const      si = LaurentPoly::s(-1);
  GaussianRational const quarter(1, 4);

  BraidWord runs(int n, std::vector<std::pair<int, int>> const& r) {
    std::vector<int> letters;
    for (auto [i, a] : r) {
      letters.insert(letters.end(), static_cast<size_t>(a), i);
    }
    return BraidWord(n, letters);
  }
}

TEST_SUITE("families") {
  TEST_CASE("gamma words") {
    CHECK(gamma_word(0) == BraidWord(3, {}));
    CHECK(gamma_word(5).letters() == std::vector<int>{1, 2, 1, 2, 1});
    CHECK(gamma_word(6).letters() == std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(torus2_word(-2) == parse_word("B2: -1 -1"));
  }

  TEST_CASE("alexander closed forms") {
    CHECK(nabla_gamma_closed(4) == LaurentPoly::s(-2) - 1 + s.pow(2));
    CHECK(nabla_gamma_closed(5) == LaurentPoly::s(-3) - si + s - s.pow(3));
    CHECK(nabla_gamma_closed(6) == LaurentPoly::s(-4) - LaurentPoly::s(-2) + s.pow(4) - s.pow(2));
    // the j = 6k+1 sum needs to start at i = 0
    auto const nabla7 = LaurentPoly::s(-5) - LaurentPoly::s(-3) + s.pow(3) - s.pow(5);
    CHECK(nabla_gamma_closed(7) == nabla7);
    CHECK(nabla_gamma_closed(7, SumStart::as_printed) == s.pow(3) - s.pow(5));
    CHECK(nabla_gamma_closed(10, SumStart::as_printed) == nabla_gamma_closed(10));
    CHECK_THROWS_AS(nabla_gamma_closed(3), std::domain_error);
    InvariantEngine alex(Specialization::alexander());
    for (int j = 4; j <= 24; ++j) {
      CHECK(nabla_gamma_closed(j) == alex.evaluate_laurent(gamma_word(j)));
    }
  }

  TEST_CASE("two-strand closed forms") {
    CHECK(nabla2_power(5).degree() == 4);
    CHECK(nabla2_power(5).order() == -4);
    CHECK(d2_power(5).degree() == 6);
    CHECK(d2_power(5).leading_coeff() == GaussianRational(-2));
    CHECK(d2_power(3) == -s.pow(4) + s.pow(2) * 2);
    CHECK(nabla2_power(0).is_zero());
    CHECK(nabla2_power(1) == LaurentPoly(1));
  }

  TEST_CASE("degenerate table and the a_j pattern") {
    auto const printed = d_gamma_printed_table();
    REQUIRE(printed.size() == 7);
    CHECK(d_gamma(3) == (s * 3 - s.pow(3)) * GaussianRational(1, 2));
    CHECK(printed[6] == (-s.pow(8) - s.pow(6) * 6 + 11) * quarter);
    CHECK(d_gamma(6) == (-s.pow(8) - s.pow(6) * 6 + s.pow(4) * 11) * quarter);
    for (int j = 0; j < 6; ++j) {
      CHECK(printed[static_cast<size_t>(j)] == d_gamma(j));
    }
    CHECK(d_gamma_a_pattern(8) == 4);
    CHECK(d_gamma_a_pattern(12) == 11);
    CHECK(d_gamma_a_pattern(13) == 12);
    CHECK(d_gamma_a_pattern(18) == 13);
    CHECK(d_gamma(8).coeff(10) == GaussianRational(-1));
    CHECK(d_gamma(7) == (s.pow(5) * 12 - s.pow(7) * 6 - s.pow(9) * 2) * quarter);

    auto const sh = d_gamma_shape(d_gamma(8), 8);
    CHECK(sh.support == std::set<int>{6, 8, 10});
    CHECK_FALSE(sh.printed_shape);
    REQUIRE(sh.a_observed);
    CHECK(*sh.a_observed == GaussianRational(sh.a_expected));
  }

  TEST_CASE("degree laws on examples") {
    InvariantEngine alex(Specialization::alexander());
    InvariantEngine degen(Specialization::degenerate());
    auto const      n = alex.evaluate_laurent(runs(3, {{1, 2}, {2, 2}, {1, 2}, {2, 2}}));
    CHECK(n.degree() == 6);
    CHECK(n.profile().breadth == 13);
    auto const d = degen.evaluate_laurent(runs(3, {{1, 3}, {2, 2}}));
    CHECK(d.degree() == 7);
    CHECK(d.leading_coeff() == GaussianRational(1, 2));
    CHECK(degree_laws_check({60, 7}).ok());
  }

  TEST_CASE("gamma recurrences") {
    auto const r = homfly_gamma_recurrence_check(2);
    CHECK(r.ok());
    CHECK(r.checked > 20);
  }

  TEST_CASE("classifier") {
    auto const r = classify_specializations(9);
    REQUIRE(r.families.size() == 3);
    std::set<int> ks;
    for (auto const& f : r.families) {
      CHECK(f.n == 1);
      ks.insert(f.k);
    }
    CHECK(ks == std::set<int>{-1, 1, 3});
    auto const r5 = classify_specializations(5);
    for (auto const& f : r5.families) {
      CHECK(f.k != 5);
    }
    CHECK(specialization_of(r.families[1]).delta() == Specialization::degenerate().delta());
  }

  TEST_CASE("independence probes") {
    auto const p = independence_probe(2, 2);
    CHECK(p.nabla.degree() == 8);
    CHECK(p.jones.degree() == 28);
    CHECK(p.d.degree() == 12);
    CHECK(p.d.leading_coeff() == GaussianRational(4));
    CHECK(p.checks.ok());
    CHECK_THROWS_AS(independence_probe(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(independence_probe(2, 3), std::invalid_argument);
    CHECK(two_strand_degree_check(2, 12).ok());
  }

  TEST_CASE("named checks and manifests") {
    CHECK(run_named_check("ekt-coefficients").ok());
    CHECK(run_named_check("torus2-closed-forms").ok());
    CHECK_THROWS_AS(run_named_check("no-such-check"), ManifestError);

    auto const m = Manifest::from_json(nlohmann::json::parse(R"({
      "version": "v1",
      "entries": [
        {"id": "b", "word": "B3: 1 2 1 2", "spec": "alexander", "expected_text": "s^-2 - 1 + s^2"},
        {"id": "a", "word": "B2: 1 1 1", "spec": "degenerate", "expected_text": "s^2"},
        {"id": "c", "check": "ekt-coefficients"}
      ]})"));
    auto const rep = run_manifest(m);
    REQUIRE(rep.results.size() == 3);
    CHECK(rep.results[0].name == "a");
    CHECK_FALSE(rep.results[0].ok());
    CHECK(rep.results[1].ok());
    CHECK(rep.results[2].ok());
    CHECK_FALSE(rep.ok());
    CHECK(rep.to_json()["status"] == "fail");

    CHECK_THROWS_AS(Manifest::from_json(nlohmann::json::parse(R"({"version":"v2","entries":[]})")),
                    ManifestError);
    CHECK_THROWS_AS(Manifest::from_json(nlohmann::json::parse(
                        R"({"version":"v1","entries":[{"id":"x","check":"bogus"}]})")),
                    ManifestError);
    CHECK_THROWS_AS(Manifest::from_json(nlohmann::json::parse(
                        R"({"version":"v1","entries":[{"id":"x","word":"B2: 1"}]})")),
                    ManifestError);
    CHECK_THROWS_AS(Manifest::from_json(nlohmann::json::parse(
                        R"({"version":"v1","entries":[{"id":"x","check":"genfun"},{"id":"x","check":"genfun"}]})")),
                    ManifestError);
  }

  TEST_CASE("corpus helpers") {
    CHECK(all_words(2, 3).size() == 1 + 2 + 4 + 8);
    CHECK(all_words(3, 2).size() == 1 + 4 + 16);
    std::mt19937_64 rng(3);
    auto const      w = random_word(rng, 4, 10, true);
    CHECK(w.size() == 10);
    CHECK(w.positive());
  }
}
