#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>

#include "fibskein/oracles.hpp"

namespace fibskein {

  namespace {
    struct UnionFind {
      std::vector<int> parent;

      explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[a] = b;
        return true;
      }
    };

    // Which smoothing of a positive crossing is the A-smoothing. Pinned by
    // the trefoil calibration test.
    constexpr bool positive_a_is_vertical = true;
  }  // namespace

  LaurentPoly kauffman_jones(BraidWord const& w, size_t crossing_cap) {
    size_t const c = w.size();
    if (c > crossing_cap) {
      throw OracleError("Kauffman bracket oracle: " + std::to_string(c)
                        + " crossings exceed the cap of "
                        + std::to_string(crossing_cap));
    }
    int const n = w.strands();

    // histogram[(#A - #B, loops)]
    std::map<std::pair<int, int>, long> histogram;
    if (c == 0) {
      histogram[{0, n}] = 1;
    } else {
      // Node (level k, position p); level c is level 0.
      auto node = [&](size_t k, int p) {
        return static_cast<int>((k % c) * static_cast<size_t>(n))
               + p;
      };
      for (size_t state = 0; state < (size_t{1} << c); ++state) {
        UnionFind uf(c * static_cast<size_t>(n));
        int       total = static_cast<int>(c) * n;
        int       a_minus_b = 0;
        for (size_t k = 0; k < c; ++k) {
          int const  e        = w.letters()[k];
          int const  i        = std::abs(e);
          bool const a_smooth = ((state >> k) & 1U) != 0;
          a_minus_b += a_smooth ? 1 : -1;
          bool const vertical = (a_smooth == (e > 0))
                                    ? positive_a_is_vertical
                                    : !positive_a_is_vertical;
          for (int p = 0; p < n; ++p) {
            if (p != i - 1 && p != i) {
              total -= uf.unite(node(k, p), node(k + 1, p)) ? 1 : 0;
            }
          }
          int const tl = node(k, i - 1), tr = node(k, i);
          int const bl = node(k + 1, i - 1), br = node(k + 1, i);
          if (vertical) {
            total -= uf.unite(tl, bl) ? 1 : 0;
            total -= uf.unite(tr, br) ? 1 : 0;
          } else {
            total -= uf.unite(tl, tr) ? 1 : 0;
            total -= uf.unite(bl, br) ? 1 : 0;
          }
        }
        ++histogram[{a_minus_b, total}];
      }
    }

    // Bracket in the variable A, with <O> = 1 and d = -A^2 - A^-2.
    LaurentPoly const d{{-2, -1}, {2, -1}};
    std::map<int, LaurentPoly> dpow{{0, LaurentPoly(1)}};
    LaurentPoly bracket;
    for (auto const& [key, count] : histogram) {
      auto const [ab, loops] = key;
      auto it                = dpow.find(loops - 1);
      if (it == dpow.end()) {
        it = dpow.emplace(loops - 1, d.pow(static_cast<unsigned>(loops - 1)))
                 .first;
      }
      bracket += it->second.shifted(ab) * GaussianRational(count);
    }

    // f = (-A^3)^{-writhe} <L>
    int const wr = w.writhe();
    LaurentPoly f = bracket.shifted(-3 * wr);
    if (wr % 2 != 0) {
      f = -f;
    }

    // A^e -> s^{-e/2}
    LaurentPoly out;
    for (auto const& [e, coeff] : f.terms()) {
      if (e % 2 != 0) {
        throw OracleError("Kauffman bracket oracle: odd A-exponent in "
                          + w.to_string());
      }
      out.add_term(-e / 2, coeff);
    }
    return out;
  }

}  // namespace fibskein
