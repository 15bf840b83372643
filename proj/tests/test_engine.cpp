#include "doctest.h"

#include <cstdlib>

#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "gen.hpp"

using namespace fibskein;

namespace {
  LaurentPoly const      s  = LaurentPoly::s();
  LaurentPoly const      si = LaurentPoly::s(-1);
  GaussianRational const half(1, 2);
  GaussianRational const quarter(1, 4);

  // P(closure of x1^a) by iterating the HOMFLY skein relation from
  // P(x1^0) = delta, P(x1) = 1 in both directions.
  TwoVarLaurent two_strand_homfly(int a) {
    auto const    l = TwoVarLaurent::l(), m = TwoVarLaurent::m();
    TwoVarLaurent prev = homfly_delta(), cur = 1;
    if (a >= 1) {
      for (int k = 1; k < a; ++k) {
        auto next = -(l * m) * cur - l.pow(2) * prev;
        prev      = cur;
        cur       = next;
      }
      return cur;
    }
    // P(a) = (P(a+2) + lm P(a+1)) / (-l^2)
    TwoVarLaurent hi = 1, lo = homfly_delta();
    for (int k = 0; k > a; --k) {
      auto next = (hi + l * m * lo) * (-TwoVarLaurent::l(-2));
      hi        = lo;
      lo        = next;
    }
    return lo;
  }
}

TEST_SUITE("engine") {
  TEST_CASE("slot coefficients from the closed form") {
    CHECK(expansion_coefficient(Specialization::alexander(), 1, 0).is_zero());
    CHECK(expansion_coefficient(Specialization::alexander(), 2, 0) == LaurentPoly(1));
    CHECK(expansion_coefficient(Specialization::degenerate(), -5, 0) == LaurentPoly::s(-5) * 6);
    CHECK(expansion_coefficient(Specialization::degenerate(), -5, 1) == LaurentPoly::s(-6) * -5);
    CHECK_THROWS(expansion_coefficient(Specialization::homfly(), 2, 0));
  }

  TEST_CASE("slot table agrees with the closed form") {
    for (auto const& spec : {Specialization::alexander(), Specialization::jones(),
                             Specialization::degenerate()}) {
      Evaluator<LaurentPoly> ev(laurent_ring(spec));
      for (int a = -12; a <= 12; ++a) {
        auto const& [alpha, beta] = ev.slot_coefficients(a);
        CHECK(alpha == expansion_coefficient(spec, a, 0));
        CHECK(beta == expansion_coefficient(spec, a, 1));
      }
    }
  }

  TEST_CASE("HOMFLY values") {
    InvariantEngine eng(Specialization::homfly());
    auto const      l = TwoVarLaurent::l(), m = TwoVarLaurent::m();
    CHECK(eng.evaluate_homfly(parse_word("B2: 1 1 1"))
          == l.pow(2) * m.pow(2) - l.pow(2) * 2 - l.pow(4));
    for (int a = -9; a <= 9; ++a) {
      CHECK(eng.evaluate_homfly(torus2_word(a)) == two_strand_homfly(a));
    }
    CHECK(eng.evaluate_homfly(parse_word("B9: 1 2 3 5 6 8")) == homfly_delta().pow(2));
    CHECK(eng.evaluate_homfly(BraidWord(1, {})) == TwoVarLaurent(1));
  }

  TEST_CASE("one-variable values") {
    CHECK(eval_invariant(parse_word("B3: 1 2 1 2 1"), Specialization::alexander())
          == InvariantValue(LaurentPoly::s(-3) - si + s - s.pow(3)));
    // The closure of gamma_6 gives 11/4 s^4; the tabulated constant 11/4
    // lacks the s^4 factor.
    auto const d6 = eval_invariant(parse_word("B3: 1 2 1 2 1 2"), Specialization::degenerate());
    CHECK(d6 == InvariantValue((-s.pow(8) - s.pow(6) * 6 + s.pow(4) * 11) * quarter));
    CHECK(d6 != InvariantValue((-s.pow(8) - s.pow(6) * 6 + 11) * quarter));
  }

  TEST_CASE("simple base values") {
    auto const h = [](SimplePartition const& a) {
      return std::get<TwoVarLaurent>(simple_base_value(a, Specialization::homfly()));
    };
    CHECK(h({{4, 3, 2, 2}, 13}) == homfly_delta().pow(5));
    CHECK(h({{2}, 2}) == TwoVarLaurent(1));
    CHECK(std::get<LaurentPoly>(simple_base_value({{}, 3}, Specialization::degenerate()))
          == (LaurentPoly::s(-2) + 2 + s.pow(2)) * quarter);
    CHECK(std::get<LaurentPoly>(simple_base_value({{2}, 2}, Specialization::jones()))
          == LaurentPoly(1));
  }

  TEST_CASE("template expansion") {
    auto const degen = Specialization::degenerate();
    for (int a = -6; a <= 8; ++a) {
      auto const terms = expand_template(Template{2, {1}, {a}}, degen);
      CHECK(terms.size() == 2);
      CHECK(sum_expansion(terms) == d2_power(a));
    }
    // exponents in {0,1}: one surviving corner, coefficient 1
    auto const terms = expand_template(Template{3, {1, 2}, {1, 0}}, degen);
    int        nonzero = 0;
    for (auto const& t : terms) {
      if (!t.coefficient.is_zero()) {
        ++nonzero;
        CHECK(t.coefficient == LaurentPoly(1));
        CHECK(t.corner == std::vector<int>{1, 0});
      }
    }
    CHECK(nonzero == 1);

    std::mt19937_64 rng(gen::seed + 20);
    InvariantEngine jones(Specialization::jones());
    for (int t = 0; t < 40; ++t) {
      Template const tp{3,
                        {1, 2, 1},
                        {gen::between(rng, -4, 4), gen::between(rng, -4, 4),
                         gen::between(rng, -4, 4)}};
      CHECK(sum_expansion(expand_template(tp, Specialization::jones()))
            == jones.evaluate_laurent(tp.to_word()));
    }
  }

  TEST_CASE("relative expansion") {
    auto const degen = Specialization::degenerate();
    std::map<std::vector<int>, LaurentPoly> const corners{{{0}, (s + si) * half},
                                                         {{1}, LaurentPoly(1)}};
    CHECK(relative_expand(degen, corners, {3}) == -s.pow(4) + s.pow(2) * 2);
    CHECK(relative_expand(degen, corners, {1}) == LaurentPoly(1));
    CHECK_THROWS_AS(relative_expand(degen, {{{0}, LaurentPoly(1)}}, {3}), std::invalid_argument);

    auto const c = relative_coefficients(degen, {-5, 6});
    REQUIRE(c.size() == 4);
    CHECK(c[0].second == s * -30);
    CHECK(c[1].second == LaurentPoly(36));
    CHECK(c[2].second == LaurentPoly(25));
    CHECK(c[3].second == si * -30);
  }

  TEST_CASE("budget exhaustion and oracle fallback") {
    auto const  w = parse_word("B3: 1 2 1 2");
    EvalOptions strict;
    strict.budget          = 1;
    strict.oracle_fallback = false;
    CHECK_THROWS_AS(eval_invariant(w, Specialization::jones(), strict), IndeterminateError);

    EvalOptions lenient = strict;
    lenient.oracle_fallback = true;
    InvariantEngine eng(Specialization::jones(), lenient);
    CHECK(eng.evaluate(w) == eval_invariant(w, Specialization::jones()));
    CHECK(eng.stats().fallbacks >= 1);
  }

  TEST_CASE("bounded memo gives the same values") {
    EvalOptions capped;
    capped.max_cache_entries = 4;
    InvariantEngine small(Specialization::degenerate(), capped);
    InvariantEngine big(Specialization::degenerate());
    std::mt19937_64 rng(gen::seed + 21);
    for (int t = 0; t < 100; ++t) {
      auto const w = gen::word(rng, 4, gen::between(rng, 0, 9));
      CHECK(small.evaluate(w) == big.evaluate(w));
    }
    Evaluator<LaurentPoly> ev(laurent_ring(Specialization::degenerate()), capped);
    for (int t = 0; t < 50; ++t) {
      ev.evaluate(gen::word(rng, 4, 8));
      CHECK(ev.cache_size() <= 4);
    }
  }

  TEST_CASE("memo cap from the environment") {
    ::setenv("FIBSKEIN_MEMO_MAX_ENTRIES", "3", 1);
    Evaluator<LaurentPoly> ev(laurent_ring(Specialization::alexander()));
    ::unsetenv("FIBSKEIN_MEMO_MAX_ENTRIES");
    std::mt19937_64 rng(gen::seed + 22);
    for (int t = 0; t < 30; ++t) {
      ev.evaluate(gen::word(rng, 4, 8));
      CHECK(ev.cache_size() <= 3);
    }
  }

  TEST_CASE("engine stats") {
    InvariantEngine eng(Specialization::homfly());
    eng.evaluate(parse_word("B3: 1 1 1 2 2 2"));
    eng.evaluate(parse_word("B3: 2 2 2 1 1 1"));
    auto const st = eng.stats();
    CHECK(st.run_expansions > 0);
    CHECK(st.cache_hits > 0);
    CHECK(st.fallbacks == 0);
  }
}
