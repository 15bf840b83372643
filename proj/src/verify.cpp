#include "fibskein/verify.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "fibskein/engine.hpp"
#include "fibskein/families.hpp"
#include "fibskein/genfun.hpp"
#include "fibskein/oracles.hpp"
#include "fibskein/poly_io.hpp"

namespace fibskein {

  namespace {
    using json = nlohmann::json;

    constexpr size_t max_listed_failures = 25;

    // Like CheckReport::expect but keeps the failure list short on big
    // corpora; the count stays exact.
    struct Tally {
      CheckReport& rep;

      void expect(bool cond, std::string const& what) {
        ++rep.checked;
        if (cond) {
          return;
        }
        if (rep.failures.size() < max_listed_failures) {
          rep.failures.push_back(what);
        } else {
          ++rep.unlisted_failures;
        }
      }
    };

    int uniform(std::mt19937_64& rng, int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    std::array<Specialization, 4> all_specs() {
      return {Specialization::homfly(), Specialization::alexander(),
              Specialization::jones(), Specialization::degenerate()};
    }

    std::vector<InvariantEngine> engines_for(std::array<Specialization, 4> const& specs) {
      std::vector<InvariantEngine> out;
      for (auto const& sp : specs) {
        out.emplace_back(sp);
      }
      return out;
    }

    std::vector<int> letters_of(BraidWord const& w) {
      return w.letters();
    }

    BraidWord join(int n, std::initializer_list<std::vector<int>> parts) {
      std::vector<int> out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return BraidWord(n, std::move(out));
    }

    std::vector<int> power(int index, int e) {
      return std::vector<int>(static_cast<size_t>(std::abs(e)), e >= 0 ? index : -index);
    }

    int param_int(json const& params, char const* key, int fallback) {
      return params.contains(key) ? params.at(key).get<int>() : fallback;
    }

    ////////////////////////////////////////////////////////////////////
    // Individual checks
    ////////////////////////////////////////////////////////////////////

    CheckReport skein_axiom(json const& params, std::uint64_t seed) {
      CheckReport rep;
      rep.name        = "skein-axiom";
      int const count = param_int(params, "count", 1000);
      std::mt19937_64 rng(seed);
      auto const specs = all_specs();
      auto       eng   = engines_for(specs);
      for (int t = 0; t < count; ++t) {
        int const  n  = uniform(rng, 2, 4);
        int const  lu = uniform(rng, 0, 3);
        int const  lv = uniform(rng, 0, 5 - lu);
        auto const u  = letters_of(random_word(rng, n, lu));
        auto const v  = letters_of(random_word(rng, n, lv));
        int const  i  = uniform(rng, 1, n - 1);
        int const  a  = uniform(rng, -3, 1);
        auto word = [&](int e) { return join(n, {u, power(i, e), v}); };
        for (size_t k = 0; k < specs.size(); ++k) {
          auto const [c1, c2] = recurrence_coefficients(specs[k]);
          auto const v2 = eng[k].evaluate(word(a + 2));
          auto const v1 = eng[k].evaluate(word(a + 1));
          auto const v0 = eng[k].evaluate(word(a));
          bool       ok = std::visit(
              [&](auto const& x2) {
                using R = std::decay_t<decltype(x2)>;
                return x2 == std::get<R>(c1) * std::get<R>(v1)
                                 + std::get<R>(c2) * std::get<R>(v0);
              },
              v2);
          rep.expect(ok, specs[k].label() + ": skein triple fails at "
                             + word(a + 2).to_string() + " (slot x" + std::to_string(i)
                             + ", a=" + std::to_string(a) + ")");
        }
      }
      rep.notes.push_back(std::to_string(count) + " random triples x 4 specializations");
      return rep;
    }

    CheckReport invariance(json const& params, std::uint64_t seed) {
      CheckReport rep;
      rep.name        = "invariance";
      int const count = param_int(params, "count", 1000);
      std::mt19937_64 rng(seed);
      auto const specs = all_specs();
      auto       eng   = engines_for(specs);
      static char const* const kinds[] = {"rotation",      "far commutation",
                                          "braid relation", "free insertion",
                                          "stabilization", "half-twist conjugation"};
      for (int t = 0; t < count; ++t) {
        int const kind = t % 6;
        BraidWord w1, w2;
        auto      rw = [&](int n) {
          return letters_of(random_word(rng, n, uniform(rng, 0, 3)));
        };
        switch (kind) {
          case 0: {
            int const n = uniform(rng, 2, 4);
            w1          = random_word(rng, n, uniform(rng, 1, 8));
            auto l      = w1.letters();
            std::rotate(l.begin(), l.begin() + uniform(rng, 0, static_cast<int>(l.size()) - 1),
                        l.end());
            w2 = BraidWord(n, l);
            break;
          }
          case 1: {
            int const n  = uniform(rng, 4, 5);
            int const i  = uniform(rng, 1, n - 3);
            int const j  = uniform(rng, i + 2, n - 1);
            int const si = uniform(rng, 0, 1) ? 1 : -1;
            int const sj = uniform(rng, 0, 1) ? 1 : -1;
            auto      u = rw(n), v = rw(n);
            w1 = join(n, {u, {si * i, sj * j}, v});
            w2 = join(n, {u, {sj * j, si * i}, v});
            break;
          }
          case 2: {
            int const n  = uniform(rng, 3, 4);
            int const i  = uniform(rng, 1, n - 2);
            int const sg = uniform(rng, 0, 1) ? 1 : -1;
            auto      u = rw(n), v = rw(n);
            w1 = join(n, {u, {sg * i, sg * (i + 1), sg * i}, v});
            w2 = join(n, {u, {sg * (i + 1), sg * i, sg * (i + 1)}, v});
            break;
          }
          case 3: {
            int const n  = uniform(rng, 2, 4);
            int const i  = uniform(rng, 1, n - 1);
            int const sg = uniform(rng, 0, 1) ? 1 : -1;
            auto      u = rw(n), v = rw(n);
            w1 = join(n, {u, v});
            w2 = join(n, {u, {sg * i, -sg * i}, v});
            break;
          }
          case 4: {
            int const n = uniform(rng, 1, 3);
            w1          = random_word(rng, n, n == 1 ? 0 : uniform(rng, 0, 6));
            w2          = stabilize(w1, uniform(rng, 0, 1) ? 1 : -1);
            break;
          }
          default: {
            int const n = uniform(rng, 2, 4);
            w1          = random_word(rng, n, uniform(rng, 0, 7));
            auto l      = w1.letters();
            for (int& e : l) {
              e = e > 0 ? n - e : -(n + e);
            }
            w2 = BraidWord(n, l);
            break;
          }
        }
        for (size_t k = 0; k < specs.size(); ++k) {
          rep.expect(eng[k].evaluate(w1) == eng[k].evaluate(w2),
                     specs[k].label() + ": " + kinds[kind] + " changes the value, "
                         + w1.to_string() + " vs " + w2.to_string());
        }
      }
      rep.notes.push_back(std::to_string(count) + " random instances x 4 specializations");
      return rep;
    }

    CheckReport ekt_coefficients(json const&) {
      CheckReport rep;
      rep.name    = "ekt-coefficients";
      auto coeffs = relative_coefficients(Specialization::degenerate(), {-5, 6});
      std::vector<LaurentPoly> const expected{
          LaurentPoly::monomial(-30, 1), LaurentPoly(36), LaurentPoly(25),
          LaurentPoly::monomial(-30, -1)};
      for (size_t i = 0; i < expected.size(); ++i) {
        rep.expect(coeffs[i].second == expected[i],
                   "corner " + corner_to_string(coeffs[i].first) + ": got "
                       + coeffs[i].second.to_string() + ", expected "
                       + expected[i].to_string());
      }
      return rep;
    }

    CheckReport torus2_closed_forms(json const& params) {
      CheckReport rep;
      rep.name    = "torus2-closed-forms";
      int const r = param_int(params, "range", 10);
      InvariantEngine alex(Specialization::alexander());
      InvariantEngine degen(Specialization::degenerate());
      for (int a = -r; a <= r; ++a) {
        auto const w = torus2_word(a);
        rep.expect(alex.evaluate_laurent(w) == nabla2_power(a),
                   "nabla2(x1^" + std::to_string(a) + ") closed form differs");
        rep.expect(degen.evaluate_laurent(w) == d2_power(a),
                   "D2(x1^" + std::to_string(a) + ") closed form differs");
      }
      return rep;
    }

    CheckReport nabla_gamma(json const& params) {
      CheckReport rep;
      rep.name        = "nabla-gamma-closed";
      int const  top  = param_int(params, "max_j", 30);
      bool const lit  = params.value("start", std::string("corrected")) == "as_printed";
      InvariantEngine alex(Specialization::alexander());
      for (int j = 4; j <= top; ++j) {
        auto const closed = nabla_gamma_closed(j, lit ? SumStart::as_printed : SumStart::corrected);
        auto const engine = alex.evaluate_laurent(gamma_word(j));
        rep.expect(closed == engine, "j=" + std::to_string(j) + ": formula "
                                         + closed.to_string() + ", closure "
                                         + engine.to_string());
      }
      rep.notes.push_back(lit ? "6k+1 sum starts at i = 1 (as printed)"
                              : "6k+1 sum starts at i = 0");
      return rep;
    }

    CheckReport d_gamma_check(json const& params) {
      CheckReport rep;
      rep.name         = "d-gamma";
      int const  top   = param_int(params, "max_j", 31);
      bool const shape = params.value("printed_shape", false);
      InvariantEngine degen(Specialization::degenerate());
      for (int j = 0; j <= top; ++j) {
        auto const engine = degen.evaluate_laurent(gamma_word(j));
        rep.expect(d_gamma(j) == engine, "D(" + std::to_string(j)
                                             + "): table/recurrence "
                                             + d_gamma(j).to_string() + ", closure "
                                             + engine.to_string());
        if (j < 7) {
          continue;
        }
        auto const sh = d_gamma_shape(engine, j);
        rep.expect(sh.a_observed && *sh.a_observed == GaussianRational(sh.a_expected),
                   "a_" + std::to_string(j) + " = "
                       + (sh.a_observed ? sh.a_observed->to_string() : "none")
                       + ", pattern gives " + std::to_string(sh.a_expected));
        if (shape) {
          std::string sup;
          for (int e : sh.support) {
            sup += (sup.empty() ? "" : ",") + std::to_string(e);
          }
          rep.expect(sh.printed_shape, "D(" + std::to_string(j) + ") support {" + sup
                                           + "} is not within {j+2, j+1, j}");
        }
      }
      return rep;
    }

    CheckReport simple_braids(json const& params) {
      CheckReport rep;
      rep.name          = "simple-braids";
      int const max_sr  = param_int(params, "max_total", 7);
      int const max_n   = param_int(params, "max_strands", 9);
      auto const specs  = all_specs();
      auto       eng    = engines_for(specs);
      HeckeOracle hecke;

      // decreasing partitions with parts >= 2 and total <= max_sr
      std::vector<std::vector<int>> parts{{}};
      std::function<void(std::vector<int>&, int, int)> grow =
          [&](std::vector<int>& cur, int left, int cap) {
            for (int p = std::min(left, cap); p >= 2; --p) {
              cur.push_back(p);
              parts.push_back(cur);
              grow(cur, left - p, p);
              cur.pop_back();
            }
          };
      std::vector<int> scratch;
      grow(scratch, max_sr, max_sr);

      for (auto const& pa : parts) {
        int const total = std::accumulate(pa.begin(), pa.end(), 0);
        for (int n = std::max(total, 1); n <= max_n; ++n) {
          SimplePartition const A{pa, n};
          auto const            w = build_simple_word(A);
          int const             e = A.unlink_exponent();
          std::string const     tag = A.to_string() + " n=" + std::to_string(n);

          auto const h = std::get<TwoVarLaurent>(eng[0].evaluate(w));
          rep.expect(h == homfly_delta().pow(static_cast<unsigned>(e)),
                     "homfly of beta_" + tag + " is " + h.to_string());
          if (n <= hecke_max_strands) {
            rep.expect(hecke.homfly(w) == h, "Hecke oracle disagrees on beta_" + tag);
          }
          auto const nb = std::get<LaurentPoly>(eng[1].evaluate(w));
          rep.expect(nb == (e == 0 ? LaurentPoly(1) : LaurentPoly()),
                     "nabla of beta_" + tag + " is " + nb.to_string());
          auto const v = std::get<LaurentPoly>(eng[2].evaluate(w));
          rep.expect(v == LaurentPoly{{-1, -1}, {1, -1}}.pow(static_cast<unsigned>(e)),
                     "V of beta_" + tag + " is " + v.to_string());
          auto const d = std::get<LaurentPoly>(eng[3].evaluate(w));
          rep.expect(d == LaurentPoly{{-1, GaussianRational(1, 2)}, {1, GaussianRational(1, 2)}}
                              .pow(static_cast<unsigned>(e)),
                     "D of beta_" + tag + " is " + d.to_string());
          rep.expect(closure_components(w) == n - A.total() + static_cast<int>(pa.size()),
                     "component count of beta_" + tag);
          auto const simple = is_simple(w);
          rep.expect(simple.status == SimplicityResult::Status::simple && simple.partition
                         && simple.partition->parts == pa,
                     "is_simple does not recover " + tag);
        }
      }
      return rep;
    }

    CheckReport genfun_check(json const& params) {
      CheckReport rep;
      rep.name       = "genfun";
      int const top  = param_int(params, "max_exponent", 6);
      std::vector<Template> templates;
      for (int n = 2; n <= 3; ++n) {
        for (int i = 1; i < n; ++i) {
          templates.push_back({n, {i}, {1}});
          for (int j = 1; j < n; ++j) {
            templates.push_back({n, {i, j}, {1, 1}});
          }
        }
      }
      for (auto const& spec : {Specialization::alexander(), Specialization::degenerate()}) {
        InvariantEngine engine(spec);
        for (auto const& t : templates) {
          auto const g = build_genfun(t, spec);
          std::vector<int> a(t.indices.size(), 0);
          // odometer over [0, top]^k
          while (true) {
            auto const coeff = gf_coefficient(g, a);
            auto const value = engine.evaluate_laurent(t.with_exponents(a).to_word());
            rep.expect(coeff == value, spec.label() + " " + t.with_exponents(a).to_word().to_string()
                                           + ": coefficient " + coeff.to_string()
                                           + ", closure " + value.to_string());
            if (a[0] + 2 <= top) {
              auto a1 = a, a2 = a;
              a1[0] += 1;
              a2[0] += 2;
              rep.expect(gf_coefficient(g, a2)
                             == g.c1 * gf_coefficient(g, a1) + g.c2 * coeff,
                         spec.label() + ": coefficient stream breaks the recurrence");
            }
            size_t p = 0;
            while (p < a.size() && a[p] == top) {
              a[p++] = 0;
            }
            if (p == a.size()) {
              break;
            }
            ++a[p];
          }
        }
      }

      // E0 = 1 - 2s tau against the two-strand closed form; 1 - s tau fails.
      auto const degen = Specialization::degenerate();
      auto const g     = build_genfun(Template{2, {1}, {1}}, degen);
      auto const alt   = g.with_q0_linear(LaurentPoly::monomial(-1, 1));
      bool       proof_ok = true, stmt_ok = true;
      for (int a = 0; a <= top; ++a) {
        proof_ok = proof_ok && gf_coefficient(g, {a}) == d2_power(a);
        stmt_ok  = stmt_ok && gf_coefficient(alt, {a}) == d2_power(a);
      }
      rep.expect(g.q0_linear == LaurentPoly::monomial(-2, 1) && proof_ok,
                 "E0 = 1 - 2s tau does not reproduce D2(x1^a)");
      rep.expect(!stmt_ok, "E0 = 1 - s tau unexpectedly reproduces D2(x1^a)");
      rep.notes.push_back("E0 = 1 - 2s tau matches D2(x1^a) for 0 <= a <= "
                          + std::to_string(top) + "; 1 - s tau does not");
      return rep;
    }

    CheckReport classifier_check(json const& params) {
      CheckReport rep;
      rep.name      = "classifier";
      int const lo  = param_int(params, "range", 9);
      int const hi  = param_int(params, "max_range", 15);
      std::set<std::tuple<int, int, int>> const expected{{1, -1, 0}, {1, 3, 2}, {1, 1, 1}};
      for (int r = std::min(lo, 3); r <= hi; ++r) {
        auto const res = classify_specializations(r);
        std::set<std::tuple<int, int, int>> got;
        for (auto const& f : res.families) {
          got.insert({f.n, f.k, f.q});
        }
        rep.expect(got == expected, "range " + std::to_string(r) + ": "
                                        + std::to_string(got.size()) + " families");
      }
      auto const res = classify_specializations(lo);
      std::map<int, Specialization> const builtin{
          {-1, Specialization::alexander()}, {3, Specialization::jones()},
          {1, Specialization::degenerate()}};
      for (auto const& f : res.families) {
        auto const sp = specialization_of(f);
        auto const it = builtin.find(f.k);
        if (it == builtin.end()) {
          rep.expect(false, "unexpected family k=" + std::to_string(f.k));
          continue;
        }
        rep.expect(sp.l() == it->second.l() && sp.m() == it->second.m()
                       && sp.roots() == it->second.roots(),
                   "family (n,k)=(1," + std::to_string(f.k) + ") does not reproduce "
                       + it->second.label());
      }
      // (1,5): q = 3, n - q = -2 does not divide 3
      auto const r5 = classify_specializations(5);
      rep.expect(std::none_of(r5.families.begin(), r5.families.end(),
                              [](auto const& f) { return f.k == 5; }),
                 "(1,5) accepted");
      rep.notes.push_back(std::to_string(res.passed_divisibility)
                          + " pairs pass the divisibility test at range "
                          + std::to_string(lo) + ", "
                          + std::to_string(res.unnormalizable.size())
                          + " of them have no exponent +-1");
      return rep;
    }

    CheckReport independence(json const&) {
      CheckReport rep;
      rep.name = "independence-probes";
      for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
        auto const pr = independence_probe(p, n);
        rep.merge(pr.checks);
      }
      rep.merge(two_strand_degree_check(2, 12));
      return rep;
    }

    CheckReport d_properties(json const& params, std::uint64_t seed) {
      CheckReport rep;
      rep.name       = "d-properties";
      int const len  = param_int(params, "max_len", 5);
      int const rand = param_int(params, "pairs", 300);
      InvariantEngine degen(Specialization::degenerate());
      Tally           tally{rep};
      LaurentPoly const unlink2{{-1, GaussianRational(1, 2)}, {1, GaussianRational(1, 2)}};

      std::vector<BraidWord> corpus;
      for (int n = 2; n <= 4; ++n) {
        auto ws = all_words(n, len);
        corpus.insert(corpus.end(), ws.begin(), ws.end());
      }
      for (auto const& w : corpus) {
        auto const d = degen.evaluate_laurent(w);
        tally.expect(d.at_one() == GaussianRational(1), "D(1) != 1 for " + w.to_string());
        tally.expect(d.dyadic(), "non-dyadic coefficient in D of " + w.to_string());
        tally.expect(degen.evaluate_laurent(mirror(w)) == d.bar(),
                     "mirror identity fails for " + w.to_string());
        tally.expect(degen.evaluate_laurent(reverse(w)) == d,
                     "reverse identity fails for " + w.to_string());
      }
      std::mt19937_64 rng(seed);
      for (int t = 0; t < rand; ++t) {
        auto const& a  = corpus[static_cast<size_t>(uniform(rng, 0, static_cast<int>(corpus.size()) - 1))];
        auto const& b  = corpus[static_cast<size_t>(uniform(rng, 0, static_cast<int>(corpus.size()) - 1))];
        auto const  da = degen.evaluate_laurent(a);
        auto const  db = degen.evaluate_laurent(b);
        tally.expect(degen.evaluate_laurent(concat(a, b)) == da * db,
                     "connected sum fails for " + a.to_string() + " # " + b.to_string());
        tally.expect(degen.evaluate_laurent(distant_union(a, b)) == unlink2 * da * db,
                     "distant union fails for " + a.to_string() + " + " + b.to_string());
        // gamma = alpha x_n^k beta with alpha, beta on n strands
        int const  n     = uniform(rng, 2, 3);
        int const  k     = uniform(rng, -4, 4);
        auto const alpha = letters_of(random_word(rng, n, uniform(rng, 0, 3)));
        auto const beta  = letters_of(random_word(rng, n, uniform(rng, 0, 3)));
        auto const gamma = join(n + 1, {alpha, power(n, k), beta});
        tally.expect(degen.evaluate_laurent(gamma)
                         == degen.evaluate_laurent(join(n, {alpha, beta})) * d2_power(k),
                     "factorization fails for " + gamma.to_string());
      }
      rep.notes.push_back(std::to_string(corpus.size()) + " corpus words, "
                          + std::to_string(rand) + " random pairs");
      return rep;
    }

    using CheckFn = std::function<CheckReport(json const&, std::uint64_t)>;

    std::map<std::string, CheckFn> const& registry() {
      static std::map<std::string, CheckFn> const r{
          {"skein-axiom", skein_axiom},
          {"invariance", invariance},
          {"ekt-coefficients", [](json const& p, auto) { return ekt_coefficients(p); }},
          {"torus2-closed-forms", [](json const& p, auto) { return torus2_closed_forms(p); }},
          {"nabla-gamma-closed", [](json const& p, auto) { return nabla_gamma(p); }},
          {"d-gamma", [](json const& p, auto) { return d_gamma_check(p); }},
          {"homfly-gamma-recurrences",
           [](json const& p, auto) {
             return homfly_gamma_recurrence_check(param_int(p, "k_max", 4));
           }},
          {"degree-laws",
           [](json const& p, std::uint64_t seed) {
             DegreeLawOptions o;
             o.samples = static_cast<size_t>(param_int(p, "samples", 200));
             o.seed    = seed;
             return degree_laws_check(o);
           }},
          {"classifier", [](json const& p, auto) { return classifier_check(p); }},
          {"independence-probes", [](json const& p, auto) { return independence(p); }},
          {"simple-braids", [](json const& p, auto) { return simple_braids(p); }},
          {"genfun", [](json const& p, auto) { return genfun_check(p); }},
          {"d-properties", d_properties},
          {"oracle-agreement",
           [](json const& p, auto) {
             AgreementOptions o;
             o.max_len = param_int(p, "max_len", 4);
             if (p.contains("strands")) {
               o.strands = p.at("strands").get<std::vector<int>>();
             }
             return oracle_agreement(o);
           }},
      };
      return r;
    }
  }  // namespace

  std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (auto const& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }

  CheckReport run_named_check(std::string const& name, json const& params, std::uint64_t seed) {
    auto const& r  = registry();
    auto        it = r.find(name);
    if (it == r.end()) {
      throw ManifestError("unknown check \"" + name + "\"");
    }
    return it->second(params, seed);
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus
  ////////////////////////////////////////////////////////////////////////

  std::vector<BraidWord> all_words(int strands, int max_len) {
    std::vector<BraidWord> out;
    if (strands < 2) {
      out.emplace_back(std::max(strands, 1), std::vector<int>{});
      return out;
    }
    std::vector<int> alphabet;
    for (int i = 1; i < strands; ++i) {
      alphabet.push_back(i);
      alphabet.push_back(-i);
    }
    std::vector<std::vector<int>> layer{{}};
    out.emplace_back(strands, std::vector<int>{});
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<int>> next;
      next.reserve(layer.size() * alphabet.size());
      for (auto const& w : layer) {
        for (int e : alphabet) {
          auto v = w;
          v.push_back(e);
          out.emplace_back(strands, v);
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  BraidWord random_word(std::mt19937_64& rng, int strands, int length, bool positive_only) {
    std::vector<int> letters;
    if (strands < 2) {
      return BraidWord(std::max(strands, 1), {});
    }
    for (int k = 0; k < length; ++k) {
      int const i = uniform(rng, 1, strands - 1);
      letters.push_back(positive_only || uniform(rng, 0, 1) ? i : -i);
    }
    return BraidWord(strands, std::move(letters));
  }

  std::vector<BraidWord> named_examples() {
    std::vector<BraidWord> out;
    for (int j = 0; j <= 12; ++j) {
      out.push_back(gamma_word(j));
    }
    for (int a = -8; a <= 8; ++a) {
      out.push_back(torus2_word(a));
    }
    for (char const* text : {"B3: 1 -2 1 -2", "B4: 1 2 3 1 2 3", "B4: 1 -2 3 -2 1",
                             "B3: 1 1 1 1 1 2 2 2 2 2", "B3: 1 1 1 1 1 1 1 2 2 2 2 2 2 2",
                             "B7: 1 2 4", "B7: 1 2 3 5 6", "B5: 1 2 1 2 3 4 3 4",
                             "B4: 1 1 2 2 3 3 1 2 3", "B3: -1 -1 -1 2 2 2"}) {
      out.push_back(parse_word(text));
    }
    return out;
  }

  CheckReport oracle_agreement(AgreementOptions const& opts) {
    CheckReport rep;
    rep.name = "oracle-agreement";
    Tally tally{rep};
    std::vector<BraidWord> corpus;
    for (int n : opts.strands) {
      auto ws = all_words(n, opts.max_len);
      corpus.insert(corpus.end(), ws.begin(), ws.end());
    }
    size_t const exhaustive = corpus.size();
    if (opts.include_named) {
      auto named = named_examples();
      corpus.insert(corpus.end(), named.begin(), named.end());
    }

    auto const      alexander  = Specialization::alexander();
    auto const      jones      = Specialization::jones();
    auto const      degenerate = Specialization::degenerate();
    InvariantEngine eh(Specialization::homfly());
    InvariantEngine ea(alexander);
    InvariantEngine ej(jones);
    InvariantEngine ed(degenerate);
    HeckeOracle     hecke;

    for (size_t idx = 0; idx < corpus.size(); ++idx) {
      auto const& w   = corpus[idx];
      std::string tag = " on " + w.to_string();
      auto const  a   = ea.evaluate_laurent(w);
      auto const  v   = ej.evaluate_laurent(w);
      auto const  d   = ed.evaluate_laurent(w);
      if (w.strands() <= hecke_max_strands) {
        auto const p = hecke.homfly(w);
        tally.expect(eh.evaluate_homfly(w) == p, "homfly != Hecke" + tag);
        tally.expect(tv_specialize(p, alexander) == a, "alexander != specialized Hecke" + tag);
        tally.expect(tv_specialize(p, jones) == v, "jones != specialized Hecke" + tag);
        tally.expect(tv_specialize(p, degenerate) == d, "degenerate != specialized Hecke" + tag);
      }
      if (w.size() <= default_crossing_cap) {
        tally.expect(kauffman_jones(w) == v, "jones != Kauffman bracket" + tag);
      }
      tally.expect(equal_up_to_unit(burau_alexander(w), a).has_value(),
                   "alexander not a unit multiple of Burau" + tag);
      if (opts.progress && (idx + 1) % 5000 == 0) {
        opts.progress(idx + 1, corpus.size());
      }
    }
    auto const st = eh.stats();
    rep.notes.push_back(std::to_string(exhaustive) + " exhaustive words + "
                        + std::to_string(corpus.size() - exhaustive) + " named examples");
    rep.notes.push_back("homfly engine: " + std::to_string(st.fallbacks)
                        + " oracle fallbacks, " + std::to_string(st.cache_hits)
                        + " memo hits");
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Manifests
  ////////////////////////////////////////////////////////////////////////

  Manifest Manifest::from_json(json const& j) {
    if (!j.is_object() || j.value("version", std::string()) != "v1") {
      throw ManifestError("manifest must be an object with \"version\": \"v1\"");
    }
    if (!j.contains("entries") || !j.at("entries").is_array()) {
      throw ManifestError("manifest needs an \"entries\" array");
    }
    Manifest          m;
    std::set<std::string> ids;
    size_t            pos = 0;
    for (auto const& e : j.at("entries")) {
      std::string const where = "entry " + std::to_string(pos++);
      if (!e.is_object() || !e.contains("id") || !e.at("id").is_string()) {
        throw ManifestError(where + " needs a string \"id\"");
      }
      ManifestEntry me;
      me.id = e.at("id").get<std::string>();
      if (!ids.insert(me.id).second) {
        throw ManifestError("duplicate id \"" + me.id + "\"");
      }
      if (e.contains("check")) {
        me.check = e.at("check").get<std::string>();
        if (!registry().contains(*me.check)) {
          throw ManifestError("unknown check \"" + *me.check + "\" in \"" + me.id + "\"");
        }
        me.params = e.value("params", json::object());
      } else if (e.contains("word")) {
        me.word = e.at("word").get<std::string>();
        me.spec = e.value("spec", json("homfly"));
        if (e.contains("expected")) {
          me.expected = e.at("expected");
        } else if (e.contains("expected_text")) {
          me.expected_text = e.at("expected_text").get<std::string>();
        } else {
          throw ManifestError("\"" + me.id + "\" needs \"expected\" or \"expected_text\"");
        }
      } else {
        throw ManifestError("\"" + me.id + "\" needs \"word\" or \"check\"");
      }
      m.entries.push_back(std::move(me));
    }
    return m;
  }

  Manifest Manifest::load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ManifestError("cannot open manifest " + path);
    }
    json j;
    try {
      in >> j;
    } catch (json::parse_error const& e) {
      throw ManifestError(path + ": " + e.what());
    }
    return from_json(j);
  }

  bool VerifyReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](auto const& r) { return r.ok(); });
  }

  json VerifyReport::to_json() const {
    json entries = json::array();
    for (auto const& r : results) {
      entries.push_back(r.to_json());
    }
    return {{"version", "v1"}, {"status", ok() ? "pass" : "fail"}, {"entries", entries}};
  }

  VerifyReport run_manifest(Manifest const& m, std::uint64_t seed) {
    VerifyReport out;
    std::map<std::string, InvariantEngine> engines;
    for (auto const& e : m.entries) {
      CheckReport rep;
      try {
        if (e.check) {
          rep = run_named_check(*e.check, e.params, seed);
        } else {
          auto const spec = Specialization::from_json(e.spec);
          auto       it   = engines.find(spec.label());
          if (it == engines.end() || spec.name() == SpecName::custom) {
            it = engines.insert_or_assign(spec.label(), InvariantEngine(spec)).first;
          }
          auto const     value = it->second.evaluate(parse_word(*e.word));
          InvariantValue expected;
          if (e.expected) {
            expected = invariant_from_json(*e.expected);
          } else if (spec.is_homfly()) {
            expected = parse_laurent2(*e.expected_text);
          } else {
            expected = parse_laurent(*e.expected_text);
          }
          rep.expect(value == expected, *e.word + " [" + spec.label() + "]: got "
                                            + to_string(value) + ", expected "
                                            + to_string(expected));
        }
      } catch (std::exception const& ex) {
        rep.expect(false, std::string("error: ") + ex.what());
      }
      rep.name = e.id;
      out.results.push_back(std::move(rep));
    }
    std::sort(out.results.begin(), out.results.end(),
              [](auto const& a, auto const& b) { return a.name < b.name; });
    return out;
  }

}  // namespace fibskein
