#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fibskein/oracles.hpp"
#include "fibskein/specialization.hpp"

// Basis g_w, w in S_n in one-line notation with values 1..n. The quadratic
// relation g_i^2 = -ml g_i - l^2 is the skein relation itself, so the trace
// below returns the HOMFLY value directly with no writhe correction.

namespace fibskein {

  namespace {
    TwoVarLaurent const& c1() {
      static TwoVarLaurent const v = TwoVarLaurent::monomial(-1, 1, 1);
      return v;
    }
    TwoVarLaurent const& c2() {
      static TwoVarLaurent const v = TwoVarLaurent::monomial(-1, 2, 0);
      return v;
    }
    // g_i^-1 = -l^-2 g_i - m l^-1
    TwoVarLaurent const& inv_g() {
      static TwoVarLaurent const v = TwoVarLaurent::monomial(-1, -2, 0);
      return v;
    }
    TwoVarLaurent const& inv_one() {
      static TwoVarLaurent const v = TwoVarLaurent::monomial(-1, -1, 1);
      return v;
    }
    TwoVarLaurent const& delta() {
      static TwoVarLaurent const v = homfly_delta();
      return v;
    }

    void add_to(HeckeOracle::Element&  x,
                HeckeOracle::Perm const& w,
                TwoVarLaurent const&     c) {
      if (c.is_zero()) {
        return;
      }
      auto [it, inserted] = x.try_emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          x.erase(it);
        }
      }
    }

    // Right multiplication by g_i (positive generator only).
    HeckeOracle::Element times_g(HeckeOracle::Element const& x, int i) {
      HeckeOracle::Element out;
      size_t const         p = static_cast<size_t>(i - 1);
      for (auto const& [w, c] : x) {
        auto ws = w;
        std::swap(ws[p], ws[p + 1]);
        if (w[p] < w[p + 1]) {
          add_to(out, ws, c);
        } else {
          add_to(out, w, c * c1());
          add_to(out, ws, c * c2());
        }
      }
      return out;
    }
  }  // namespace

  void HeckeOracle::multiply_generator(Element& x, int i, int sign) {
    if (sign > 0) {
      x = times_g(x, i);
      return;
    }
    Element g = times_g(x, i);
    Element out;
    for (auto const& [w, c] : g) {
      add_to(out, w, c * inv_g());
    }
    for (auto const& [w, c] : x) {
      add_to(out, w, c * inv_one());
    }
    x = std::move(out);
  }

  TwoVarLaurent HeckeOracle::trace(Perm const& w) {
    size_t const n = w.size();
    if (n <= 1) {
      return TwoVarLaurent(1);
    }
    if (auto it = _memo.find(w); it != _memo.end()) {
      return it->second;
    }
    TwoVarLaurent value;
    size_t const  j = static_cast<size_t>(
        std::find(w.begin(), w.end(), static_cast<int>(n)) - w.begin());
    if (j == n - 1) {
      Perm shorter(w.begin(), w.end() - 1);
      value = delta() * trace(shorter);
    } else {
      // w = w' s_{n-1} s_{n-2} ... s_{j+1} (1-based), with w' fixing n; the
      // trace drops g_{n-1} and leaves g_{w'} g_{n-2} ... g_{j+1} in H_{n-1}.
      Perm shorter;
      shorter.reserve(n - 1);
      for (size_t p = 0; p < n; ++p) {
        if (p != j) {
          shorter.push_back(w[p]);
        }
      }
      Element x{{shorter, TwoVarLaurent(1)}};
      for (int g = static_cast<int>(n) - 2; g >= static_cast<int>(j) + 1; --g) {
        x = times_g(x, g);
      }
      value = trace(x);
    }
    _memo.emplace(w, value);
    return value;
  }

  TwoVarLaurent HeckeOracle::trace(Element const& x) {
    TwoVarLaurent out;
    for (auto const& [w, c] : x) {
      out += c * trace(w);
    }
    return out;
  }

  TwoVarLaurent HeckeOracle::homfly(BraidWord const& w) {
    int const n = w.strands();
    if (n > hecke_max_strands) {
      throw OracleError("Hecke oracle refuses " + std::to_string(n)
                        + " strands (limit "
                        + std::to_string(hecke_max_strands) + ")");
    }
    Perm id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    Element x{{id, TwoVarLaurent(1)}};
    for (int e : w.letters()) {
      multiply_generator(x, std::abs(e), e > 0 ? 1 : -1);
    }
    return trace(x);
  }

  TwoVarLaurent hecke_homfly(BraidWord const& w) {
    HeckeOracle oracle;
    return oracle.homfly(w);
  }

}  // namespace fibskein
