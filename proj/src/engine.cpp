#include "fibskein/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string_view>

#include "fibskein/oracles.hpp"

namespace fibskein {

  namespace {
    using Runs = std::vector<std::pair<int, int>>;

    // Merges equal neighbours (cyclically) and drops zero exponents until
    // nothing changes. A single run is never merged with itself.
    void normalize(Runs& runs) {
      bool changed = true;
      while (changed) {
        changed = false;
        Runs out;
        out.reserve(runs.size());
        for (auto const& [i, a] : runs) {
          if (a == 0) {
            changed = true;
            continue;
          }
          if (!out.empty() && out.back().first == i) {
            out.back().second += a;
            changed = true;
            if (out.back().second == 0) {
              out.pop_back();
            }
          } else {
            out.emplace_back(i, a);
          }
        }
        if (out.size() >= 2 && out.front().first == out.back().first) {
          out.front().second += out.back().second;
          out.pop_back();
          changed = true;
          if (out.front().second == 0) {
            out.erase(out.begin());
          }
        }
        runs = std::move(out);
      }
    }

    Runs runs_of(BraidWord const& w) {
      Runs runs;
      runs.reserve(w.size());
      for (int e : w.letters()) {
        runs.emplace_back(std::abs(e), e > 0 ? 1 : -1);
      }
      normalize(runs);
      return runs;
    }

    std::vector<int> make_key(int n, Runs const& runs) {
      size_t const L    = runs.size();
      size_t       best = 0;
      for (size_t r = 1; r < L; ++r) {
        for (size_t k = 0; k < L; ++k) {
          auto const& a = runs[(r + k) % L];
          auto const& b = runs[(best + k) % L];
          if (a != b) {
            if (a < b) {
              best = r;
            }
            break;
          }
        }
      }
      std::vector<int> key;
      key.reserve(2 * L + 1);
      key.push_back(n);
      for (size_t k = 0; k < L; ++k) {
        auto const& [i, a] = runs[(best + k) % L];
        key.push_back(i);
        key.push_back(a);
      }
      return key;
    }

    size_t env_cache_cap() {
      char const* v = std::getenv("FIBSKEIN_MEMO_MAX_ENTRIES");
      if (v == nullptr) {
        return 0;
      }
      size_t           out = 0;
      std::string_view s(v);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() ? out : 0;
    }

    template <class Ring>
    Ring ring_pow(Ring const& x, int e) {
      return x.pow(static_cast<unsigned>(e));
    }
  }  // namespace

  template <class Ring>
  size_t Evaluator<Ring>::KeyHash::operator()(
      std::vector<int> const& v) const noexcept {
    size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return h;
  }

  template <class Ring>
  Evaluator<Ring>::Evaluator(RingData<Ring> data, EvalOptions opts)
      : _data(std::move(data)), _opts(opts) {
    if (_opts.max_cache_entries == 0) {
      _opts.max_cache_entries = env_cache_cap();
    }
    _slots.emplace(0, std::pair<Ring, Ring>{Ring(1), Ring()});
    _slots.emplace(1, std::pair<Ring, Ring>{Ring(), Ring(1)});
  }

  template <class Ring>
  std::pair<Ring, Ring> const& Evaluator<Ring>::slot_coefficients(int a) {
    if (auto it = _slots.find(a); it != _slots.end()) {
      return it->second;
    }
    if (a > 1) {
      for (int k = _slots.rbegin()->first + 1; k <= a; ++k) {
        auto const& p1 = _slots.at(k - 1);
        auto const& p2 = _slots.at(k - 2);
        _slots.emplace(k,
                       std::pair<Ring, Ring>{
                           _data.c1 * p1.first + _data.c2 * p2.first,
                           _data.c1 * p1.second + _data.c2 * p2.second});
      }
    } else {
      for (int k = _slots.begin()->first - 1; k >= a; --k) {
        auto const& p1 = _slots.at(k + 1);
        auto const& p2 = _slots.at(k + 2);
        _slots.emplace(
            k,
            std::pair<Ring, Ring>{
                (p2.first - _data.c1 * p1.first) * _data.c2_inv,
                (p2.second - _data.c1 * p1.second) * _data.c2_inv});
      }
    }
    return _slots.at(a);
  }

  template <class Ring>
  Ring Evaluator<Ring>::evaluate(BraidWord const& w) {
    return eval_runs(w.strands(), runs_of(w));
  }

  template <class Ring>
  void Evaluator<Ring>::remember(std::vector<int> key, Ring const& value) {
    if (_opts.max_cache_entries != 0
        && _cache.size() >= _opts.max_cache_entries) {
      _cache.clear();
    }
    _cache.emplace(std::move(key), value);
  }

  template <class Ring>
  Ring Evaluator<Ring>::eval_runs(int n, Runs runs) {
    normalize(runs);
    if (n == 1) {
      return Ring(1);
    }
    auto key = make_key(n, runs);
    if (auto it = _cache.find(key); it != _cache.end()) {
      ++_stats.cache_hits;
      return it->second;
    }
    ++_stats.cache_misses;

    Ring value;
    auto big = std::find_if(runs.begin(), runs.end(), [](auto const& r) {
      return r.second != 0 && r.second != 1;
    });
    if (runs.empty()) {
      value = ring_pow(_data.delta, n - 1);
    } else if (big != runs.end()) {
      ++_stats.run_expansions;
      size_t const pos = static_cast<size_t>(big - runs.begin());
      // copy: recursion may grow the slot table
      auto const coeffs = slot_coefficients(big->second);
      if (!coeffs.first.is_zero()) {
        Runs r0 = runs;
        r0.erase(r0.begin() + static_cast<long>(pos));
        value += coeffs.first * eval_runs(n, std::move(r0));
      }
      if (!coeffs.second.is_zero()) {
        Runs r1       = runs;
        r1[pos].second = 1;
        value += coeffs.second * eval_runs(n, std::move(r1));
      }
    } else {
      value = eval_reduced(n, runs);
    }
    remember(std::move(key), value);
    return value;
  }

  template <class Ring>
  Ring Evaluator<Ring>::eval_reduced(int n, Runs const& runs) {
    std::vector<int> letters;
    letters.reserve(runs.size());
    for (auto const& r : runs) {
      letters.push_back(r.first);
    }
    BraidWord const w(n, std::move(letters));
    auto            out = class_search(w, _opts.budget);
    switch (out.kind) {
      case OutcomeKind::splittable: {
        ++_stats.splits;
        if (_data.delta.is_zero()) {
          return Ring();
        }
        Ring left = evaluate(out.left);
        if (left.is_zero()) {
          return left;
        }
        return _data.delta * left * evaluate(out.right);
      }
      case OutcomeKind::destabilizable:
        ++_stats.destabilized;
        return evaluate(destabilize(out.witness));
      case OutcomeKind::square_found:
        ++_stats.squares;
        return evaluate(out.witness);
      case OutcomeKind::distinct_letters:
        ++_stats.simple_bases;
        return _data.base(cycle_partition(w));
      case OutcomeKind::exhausted:
        break;
    }
    if (!_opts.oracle_fallback || !_data.fallback) {
      throw IndeterminateError(
          "class search exhausted after " + std::to_string(out.explored)
          + " words on " + w.to_string() + " and oracle fallback is off");
    }
    ++_stats.fallbacks;
    std::clog << "fibskein: class search exhausted on " << w
              << "; using the Hecke oracle\n";
    return _data.fallback(w);
  }

  template class Evaluator<LaurentPoly>;
  template class Evaluator<TwoVarLaurent>;

  ////////////////////////////////////////////////////////////////////////
  // Ring data
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int base_exponent(SimplePartition const& a) {
      a.validate();
      return a.unlink_exponent();
    }

    TwoVarLaurent homfly_base(SimplePartition const& a) {
      return homfly_delta().pow(static_cast<unsigned>(base_exponent(a)));
    }

    LaurentPoly laurent_base(SimplePartition const& a,
                             Specialization const&  spec) {
      int const e = base_exponent(a);
      switch (spec.name()) {
        case SpecName::alexander:
          return e > 0 ? LaurentPoly() : LaurentPoly(1);
        case SpecName::jones:
          return LaurentPoly{{-1, -1}, {1, -1}}.pow(static_cast<unsigned>(e));
        case SpecName::degenerate:
          return LaurentPoly{{-1, GaussianRational(1, 2)},
                             {1, GaussianRational(1, 2)}}
              .pow(static_cast<unsigned>(e));
        default:
          return spec.delta().pow(static_cast<unsigned>(e));
      }
    }
  }  // namespace

  RingData<TwoVarLaurent> homfly_ring() {
    RingData<TwoVarLaurent> d;
    d.c1     = TwoVarLaurent::monomial(-1, 1, 1);
    d.c2     = TwoVarLaurent::monomial(-1, 2, 0);
    d.c2_inv = TwoVarLaurent::monomial(-1, -2, 0);
    d.delta  = homfly_delta();
    d.base   = homfly_base;
    auto hecke = std::make_shared<HeckeOracle>();
    d.fallback = [hecke](BraidWord const& w) { return hecke->homfly(w); };
    return d;
  }

  RingData<LaurentPoly> laurent_ring(Specialization const& spec) {
    RingData<LaurentPoly> d;
    d.c1     = -(spec.m() * spec.l());
    d.c2     = -(spec.l() * spec.l());
    d.c2_inv = *d.c2.unit_inverse();
    d.delta  = spec.delta();
    d.base   = [spec](SimplePartition const& a) { return laurent_base(a, spec); };
    auto hecke = std::make_shared<HeckeOracle>();
    d.fallback = [hecke, spec](BraidWord const& w) {
      return tv_specialize(hecke->homfly(w), spec);
    };
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // InvariantEngine
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::variant<Evaluator<LaurentPoly>, Evaluator<TwoVarLaurent>>
    make_evaluator(Specialization const& spec, EvalOptions opts) {
      if (spec.is_homfly()) {
        return Evaluator<TwoVarLaurent>(homfly_ring(), opts);
      }
      return Evaluator<LaurentPoly>(laurent_ring(spec), opts);
    }
  }  // namespace

  InvariantEngine::InvariantEngine(Specialization spec, EvalOptions opts)
      : _spec(std::move(spec)), _eval(make_evaluator(_spec, opts)) {}

  InvariantValue InvariantEngine::evaluate(BraidWord const& w) {
    return std::visit([&](auto& ev) -> InvariantValue { return ev.evaluate(w); },
                      _eval);
  }

  LaurentPoly InvariantEngine::evaluate_laurent(BraidWord const& w) {
    if (_spec.is_homfly()) {
      throw SpecializationError("evaluate_laurent called on homfly engine");
    }
    return std::get<Evaluator<LaurentPoly>>(_eval).evaluate(w);
  }

  TwoVarLaurent InvariantEngine::evaluate_homfly(BraidWord const& w) {
    if (!_spec.is_homfly()) {
      throw SpecializationError("evaluate_homfly called on " + _spec.label()
                                + " engine");
    }
    return std::get<Evaluator<TwoVarLaurent>>(_eval).evaluate(w);
  }

  EvalStats InvariantEngine::stats() const {
    return std::visit([](auto const& ev) { return ev.stats(); }, _eval);
  }

  InvariantValue eval_invariant(BraidWord const&      w,
                                Specialization const& spec,
                                EvalOptions           opts) {
    return InvariantEngine(spec, opts).evaluate(w);
  }

  std::pair<InvariantValue, InvariantValue>
  recurrence_coefficients(Specialization const& spec) {
    if (spec.is_homfly()) {
      auto d = homfly_ring();
      return {d.c1, d.c2};
    }
    return {-(spec.m() * spec.l()), -(spec.l() * spec.l())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Expansion formulas
  ////////////////////////////////////////////////////////////////////////

  namespace {
    LaurentPoly unit_pow(LaurentPoly const& r, int a) {
      if (a >= 0) {
        return r.pow(static_cast<unsigned>(a));
      }
      return r.unit_inverse()->pow(static_cast<unsigned>(-a));
    }
  }  // namespace

  LaurentPoly
  expansion_coefficient(Specialization const& spec, int a, int j) {
    if (j != 0 && j != 1) {
      throw std::invalid_argument("slot corner must be 0 or 1, got "
                                  + std::to_string(j));
    }
    auto const& [r1, r2] = spec.roots();  // throws for homfly
    if (spec.is_degenerate()) {
      // V(a) = (1-a) r^a V(0) + a r^{a-1} V(1)
      if (j == 0) {
        return unit_pow(r1, a) * GaussianRational(1 - a);
      }
      return unit_pow(r1, a - 1) * GaussianRational(a);
    }
    LaurentPoly num = j == 0 ? unit_pow(r1, a) * r2 - r1 * unit_pow(r2, a)
                             : unit_pow(r2, a) - unit_pow(r1, a);
    auto q = num.divide_exact(r2 - r1);
    if (!q) {
      throw SpecializationError("root difference does not divide the slot "
                                "coefficient numerator for "
                                + spec.label());
    }
    return *q;
  }

  InvariantValue simple_base_value(SimplePartition const& a,
                                   Specialization const&  spec) {
    if (spec.is_homfly()) {
      return homfly_base(a);
    }
    return laurent_base(a, spec);
  }

  std::string corner_to_string(std::vector<int> const& corner) {
    std::string out = "(";
    for (size_t i = 0; i < corner.size(); ++i) {
      out += (i ? "," : "") + std::to_string(corner[i]);
    }
    return out + ")";
  }

  namespace {
    std::vector<std::vector<int>> all_corners(size_t k) {
      std::vector<std::vector<int>> out;
      for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        std::vector<int> c(k);
        for (size_t i = 0; i < k; ++i) {
          c[i] = static_cast<int>((mask >> (k - 1 - i)) & 1U);
        }
        out.push_back(std::move(c));
      }
      return out;
    }
  }  // namespace

  std::vector<std::pair<std::vector<int>, LaurentPoly>>
  relative_coefficients(Specialization const& spec, std::vector<int> const& ks) {
    if (ks.size() > 20) {
      throw std::invalid_argument("too many slots for a corner expansion");
    }
    std::vector<std::pair<std::vector<int>, LaurentPoly>> out;
    for (auto& corner : all_corners(ks.size())) {
      LaurentPoly c(1);
      for (size_t i = 0; i < ks.size() && !c.is_zero(); ++i) {
        c *= expansion_coefficient(spec, ks[i], corner[i]);
      }
      out.emplace_back(std::move(corner), std::move(c));
    }
    return out;
  }

  LaurentPoly
  relative_expand(Specialization const&                          spec,
                  std::map<std::vector<int>, LaurentPoly> const& corners,
                  std::vector<int> const&                        ks) {
    auto        coeffs = relative_coefficients(spec, ks);
    LaurentPoly out;
    for (auto const& [corner, c] : coeffs) {
      auto it = corners.find(corner);
      if (it == corners.end()) {
        throw std::invalid_argument("missing corner "
                                    + corner_to_string(corner));
      }
      out += c * it->second;
    }
    return out;
  }

  std::vector<ExpansionTerm> expand_template(Template const&       t,
                                             Specialization const& spec,
                                             EvalOptions           opts) {
    if (spec.is_homfly()) {
      throw SpecializationError(
          "expand_template needs a specialization with rational roots");
    }
    InvariantEngine            engine(spec, opts);
    std::vector<ExpansionTerm> out;
    for (auto& [corner, c] : relative_coefficients(spec, t.exponents)) {
      auto word  = t.with_exponents(corner).to_word();
      auto value = engine.evaluate_laurent(word);
      out.push_back({std::move(c), std::move(corner), std::move(value)});
    }
    return out;
  }

  LaurentPoly sum_expansion(std::vector<ExpansionTerm> const& terms) {
    LaurentPoly out;
    for (auto const& t : terms) {
      out += t.coefficient * t.corner_value;
    }
    return out;
  }

}  // namespace fibskein
