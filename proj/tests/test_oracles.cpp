#include "doctest.h"

#include "fibskein/engine.hpp"
#include "fibskein/oracles.hpp"
#include "fibskein/poly_io.hpp"
#include "gen.hpp"
#include "tl_jones.hpp"

using namespace fibskein;

namespace {
  LaurentPoly const s  = LaurentPoly::s();
  LaurentPoly const si = LaurentPoly::s(-1);

  struct Frozen {
    char const* word;
    char const* jones;   // Temperley-Lieb closure
    char const* homfly;  // Hecke trace
    char const* alexander_class;
  };

  // Generated once by the test-side Temperley-Lieb oracle (Jones), the
  // Hecke trace (HOMFLY) and the Burau determinant (Alexander class).
  Frozen const frozen[] = {
      {"B3: 1 -2 1 -2", "s^-4 - s^-2 + 1 - s^2 + s^4", "-l^-2 - 1 + m^2 - l^2",
       "-1 + 3*s^2 - s^4"},
      {"B3: 1 1 1 2 -1 2", "s^2 - s^4 + 2*s^6 - s^8 + s^10 - s^12",
       "-l^2 + l^2*m^2 + l^4 - l^4*m^2 + l^6", "2*s^-4 - 3*s^-2 + 2"},
      {"B4: 1 -2 3 -2 1 -2 3", "-s^-6 + 3*s^-4 - 3*s^-2 + 4 - 4*s^2 + 3*s^4 - 2*s^6 + s^8",
       "-l^-2*m^2 + 2 - 2*m^2 + m^4 + 2*l^2 - 2*l^2*m^2 + l^4", "s^-2 - 5 + 9*s^2 - 5*s^4 + s^6"},
      {"B3: 1 2 1 2 1 2 1", "-s^5 - s^9 - s^13 + s^15",
       "2*l^5*m^-1 - 6*l^5*m + 5*l^5*m^3 - l^5*m^5 + 3*l^7*m^-1 - 4*l^7*m + l^7*m^3 + l^9*m^-1",
       "-s^-10 + s^-8 - s^-2 + 1"},
      {"B3: -1 -1 -1 2 2 2", "-s^-6 + s^-4 - s^-2 + 3 - s^2 + s^4 - s^6",
       "2*l^-2 - l^-2*m^2 + 5 - 4*m^2 + m^4 + 2*l^2 - l^2*m^2", "s^-2 - 2 + 3*s^2 - 2*s^4 + s^6"},
      {"B5: 1 -2 3 -4 1 -2 3 -4",
       "s^-8 - 2*s^-6 + 4*s^-4 - 5*s^-2 + 5 - 5*s^2 + 4*s^4 - 2*s^6 + s^8",
       "l^-4 + l^-2 - 2*l^-2*m^2 + 1 - m^2 + m^4 + l^2 - 2*l^2*m^2 + l^4",
       "1 - 7*s^2 + 13*s^4 - 7*s^6 + s^8"},
  };
}

TEST_SUITE("oracles") {
  TEST_CASE("state-sum Jones") {
    CHECK(kauffman_jones(BraidWord(2, {})) == -s - si);
    CHECK(kauffman_jones(parse_word("B2: 1 1")) == -s.pow(5) - s);
    CHECK(kauffman_jones(parse_word("B2: 1 1 1")) == -s.pow(8) + s.pow(6) + s.pow(2));
    CHECK(kauffman_jones(parse_word("B2: 1")) == LaurentPoly(1));
    CHECK_THROWS_AS(kauffman_jones(BraidWord(2, std::vector<int>(25, 1))), OracleError);
    CHECK_NOTHROW(kauffman_jones(BraidWord(2, std::vector<int>(5, 1)), 5));
    CHECK_THROWS_AS(kauffman_jones(BraidWord(2, std::vector<int>(6, 1)), 5), OracleError);
  }

  TEST_CASE("Burau determinant") {
    CHECK(equal_up_to_unit(burau_alexander(parse_word("B2: 1 1 1")), LaurentPoly::s(-2) - 1 + s.pow(2)));
    CHECK(equal_up_to_unit(burau_alexander(parse_word("B2: 1")), LaurentPoly(1)));
    CHECK(equal_up_to_unit(burau_alexander(parse_word("B3: 1 2 1 2")), LaurentPoly::s(-2) - 1 + s.pow(2)));
    CHECK(burau_alexander(BraidWord(3, {})).representative.is_zero());
  }

  TEST_CASE("equality up to units") {
    auto const n4 = LaurentPoly::s(-2) - 1 + s.pow(2);
    auto const w1 = equal_up_to_unit(n4, s.pow(2) * n4);
    REQUIRE(w1);
    CHECK(w1->sign == 1);
    CHECK(w1->shift == -2);
    auto const w2 = equal_up_to_unit(LaurentPoly(1), LaurentPoly(-1));
    REQUIRE(w2);
    CHECK(w2->sign == -1);
    CHECK(w2->shift == 0);
    CHECK_FALSE(equal_up_to_unit(s + 1, s - 1));
    CHECK(equal_up_to_unit(LaurentPoly(), LaurentPoly()));
    CHECK_FALSE(equal_up_to_unit(LaurentPoly(), LaurentPoly(1)));
  }

  TEST_CASE("Hecke trace") {
    auto const delta = homfly_delta();
    for (int k = 1; k <= 5; ++k) {
      CHECK(hecke_homfly(BraidWord(k, {})) == delta.pow(static_cast<unsigned>(k - 1)));
    }
    CHECK(hecke_homfly(build_simple_word({{3, 2}, 7})) == delta.pow(3));
    auto const l = TwoVarLaurent::l(), m = TwoVarLaurent::m();
    CHECK(hecke_homfly(parse_word("B2: 1 1 1")) == l.pow(2) * m.pow(2) - l.pow(2) * 2 - l.pow(4));
    CHECK_THROWS_AS(hecke_homfly(BraidWord(8, {})), OracleError);

    // quadratic relation and inverses in the algebra
    HeckeOracle::Element x{{HeckeOracle::Perm{0, 1, 2}, TwoVarLaurent(1)}};
    auto y = x;
    HeckeOracle::multiply_generator(y, 1, 1);
    HeckeOracle::multiply_generator(y, 1, 1);
    HeckeOracle::Element expected{{HeckeOracle::Perm{0, 1, 2}, -l.pow(2)},
                                  {HeckeOracle::Perm{1, 0, 2}, -(l * m)}};
    CHECK(y == expected);
    auto z = x;
    HeckeOracle::multiply_generator(z, 2, 1);
    HeckeOracle::multiply_generator(z, 1, -1);
    HeckeOracle::multiply_generator(z, 1, 1);
    HeckeOracle::multiply_generator(z, 2, -1);
    CHECK(z == x);
  }

  TEST_CASE("frozen values from independent routes") {
    InvariantEngine homfly(Specialization::homfly());
    InvariantEngine jones(Specialization::jones());
    InvariantEngine alexander(Specialization::alexander());
    for (auto const& f : frozen) {
      CAPTURE(f.word);
      auto const w = parse_word(f.word);
      auto const v = parse_laurent(f.jones);
      auto const p = parse_laurent2(f.homfly);
      CHECK(tl::jones(w) == v);
      CHECK(kauffman_jones(w) == v);
      CHECK(hecke_homfly(w) == p);
      CHECK(homfly.evaluate_homfly(w) == p);
      CHECK(jones.evaluate_laurent(w) == v);
      CHECK(tv_specialize(p, Specialization::jones()) == v);
      CHECK(equal_up_to_unit(alexander.evaluate_laurent(w), parse_laurent(f.alexander_class)));
    }
  }

  TEST_CASE("random words: Temperley-Lieb route against the state sum and the engine") {
    std::mt19937_64 rng(gen::seed + 30);
    InvariantEngine jones(Specialization::jones());
    for (int t = 0; t < 150; ++t) {
      auto const w = gen::word(rng, gen::between(rng, 2, 5), gen::between(rng, 0, 10));
      CAPTURE(w.to_string());
      auto const v = tl::jones(w);
      CHECK(kauffman_jones(w) == v);
      CHECK(jones.evaluate_laurent(w) == v);
    }
  }
}
