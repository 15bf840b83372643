#include "doctest.h"

#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "fibskein/genfun.hpp"
#include "gen.hpp"

using namespace fibskein;

namespace {
  LaurentPoly const      s  = LaurentPoly::s();
  LaurentPoly const      si = LaurentPoly::s(-1);
  GaussianRational const half(1, 2);
  Template const         two_strand{2, {1}, {1}};
}

TEST_SUITE("genfun") {
  TEST_CASE("two-strand alexander function") {
    auto const g = build_genfun(two_strand, Specialization::alexander());
    auto const q = g.denominator();
    REQUIRE(q.size() == 3);
    CHECK(q[0] == LaurentPoly(1));
    CHECK(q[1] == s - si);
    CHECK(q[2] == LaurentPoly(-1));
    // the 2-component unlink corner vanishes, leaving tau alone
    for (auto const& [e, c] : g.numerator) {
      CHECK(c == (e == std::vector<int>{1} ? LaurentPoly(1) : LaurentPoly()));
    }
    CHECK(gf_coefficient(g, {3}) == LaurentPoly::s(-2) - 1 + s.pow(2));
    CHECK(gf_coefficient(g, {0}).is_zero());
    CHECK(gf_coefficient(g, {1}) == LaurentPoly(1));
  }

  TEST_CASE("two-strand degenerate function") {
    auto const g = build_genfun(two_strand, Specialization::degenerate());
    auto const q = g.denominator();
    CHECK(q[1] == s * -2);
    CHECK(q[2] == s.pow(2));
    CHECK(g.q0_linear == s * -2);
    CHECK(g.numerator.at({0}) == (s + si) * half);
    CHECK(g.numerator.at({1}) == -s.pow(2));
    CHECK(gf_coefficient(g, {0}) == (s + si) * half);
    for (int a = 0; a <= 12; ++a) {
      CHECK(gf_coefficient(g, {a}) == d2_power(a));
    }
    // the statement's 1 - s tau drifts from the closed form at a = 1
    auto const alt = g.with_q0_linear(-s);
    CHECK(gf_coefficient(alt, {0}) == d2_power(0));
    CHECK(gf_coefficient(alt, {1}) != d2_power(1));
  }

  TEST_CASE("coefficients against the engine") {
    std::mt19937_64 rng(gen::seed + 40);
    for (auto const& spec : {Specialization::alexander(), Specialization::jones(),
                             Specialization::degenerate()}) {
      InvariantEngine eng(spec);
      for (int t = 0; t < 15; ++t) {
        int const n = gen::between(rng, 2, 4);
        Template  tp{n, {}, {}};
        int const k = gen::between(rng, 1, 3);
        for (int j = 0; j < k; ++j) {
          tp.indices.push_back(gen::between(rng, 1, n - 1));
          tp.exponents.push_back(1);
        }
        auto const g = build_genfun(tp, spec);
        for (int r = 0; r < 6; ++r) {
          std::vector<int> a;
          for (int j = 0; j < k; ++j) {
            a.push_back(gen::between(rng, 0, 5));
          }
          CHECK(gf_coefficient(g, a) == eng.evaluate_laurent(tp.with_exponents(a).to_word()));
        }
        // corners come back unchanged
        for (auto const& [corner, value] : g.corners) {
          CHECK(gf_coefficient(g, corner) == value);
        }
      }
    }
  }

  TEST_CASE("inverse denominator series") {
    for (auto const& spec : {Specialization::alexander(), Specialization::jones(),
                             Specialization::degenerate()}) {
      auto const g = build_genfun(Template{3, {1, 2}, {1, 1}}, spec);
      auto const h = inverse_denominator_series(g, 10);
      auto const q = g.denominator();
      REQUIRE(h.size() == 11);
      CHECK(h[0] == LaurentPoly(1));
      for (size_t a = 1; a < h.size(); ++a) {
        LaurentPoly conv = h[a] * q[0] + h[a - 1] * q[1];
        if (a >= 2) {
          conv += h[a - 2] * q[2];
        }
        CHECK(conv.is_zero());
      }
    }
  }

  TEST_CASE("errors and output") {
    auto const g = build_genfun(Template{3, {1, 2}, {1, 1}}, Specialization::degenerate());
    CHECK_THROWS_AS(gf_coefficient(g, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(gf_coefficient(g, {1}), std::invalid_argument);
    CHECK_THROWS(build_genfun(two_strand, Specialization::homfly()));
    auto const j = to_json(g);
    CHECK(j.contains("numerator"));
    CHECK(j.contains("denominator_per_slot"));
    CHECK(render(g).find("denominator") != std::string::npos);
  }
}
