#include <cstdlib>
#include <utility>

#include "fibskein/oracles.hpp"

namespace fibskein {

  namespace {
    using Matrix = std::vector<std::vector<LaurentPoly>>;

    Matrix identity(size_t d) {
      Matrix m(d, std::vector<LaurentPoly>(d));
      for (size_t i = 0; i < d; ++i) {
        m[i][i] = LaurentPoly(1);
      }
      return m;
    }

    // acc <- M * acc for the reduced Burau matrix M of x_i^{+-1}, which
    // differs from the identity only in row i-1.
    void apply_generator(Matrix& acc, int letter) {
      size_t const d = acc.size();
      int const    i = std::abs(letter);
      size_t const r = static_cast<size_t>(i - 1);
      LaurentPoly const t    = LaurentPoly::s(1);
      LaurentPoly const tinv = LaurentPoly::s(-1);
      // Row r of the generator matrix: (left, diag, right).
      LaurentPoly left, diag, right;
      if (letter > 0) {
        left  = t;
        diag  = -t;
        right = LaurentPoly(1);
      } else {
        left  = LaurentPoly(1);
        diag  = -tinv;
        right = tinv;
      }
      std::vector<LaurentPoly> row(d);
      for (size_t col = 0; col < d; ++col) {
        LaurentPoly v = diag * acc[r][col];
        if (r >= 1) {
          v += left * acc[r - 1][col];
        }
        if (r + 1 < d) {
          v += right * acc[r + 1][col];
        }
        row[col] = std::move(v);
      }
      acc[r] = std::move(row);
    }

    LaurentPoly bareiss_det(Matrix m) {
      size_t const d = m.size();
      if (d == 0) {
        return LaurentPoly(1);
      }
      LaurentPoly prev(1);
      int         sign = 1;
      for (size_t k = 0; k < d; ++k) {
        size_t piv = k;
        while (piv < d && m[piv][k].is_zero()) {
          ++piv;
        }
        if (piv == d) {
          return {};
        }
        if (piv != k) {
          std::swap(m[piv], m[k]);
          sign = -sign;
        }
        for (size_t i = k + 1; i < d; ++i) {
          for (size_t j = k + 1; j < d; ++j) {
            LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
            auto        q   = num.divide_exact(prev);
            if (!q) {
              throw OracleError("Burau oracle: inexact Bareiss step");
            }
            m[i][j] = std::move(*q);
          }
          m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
      }
      LaurentPoly det = m[d - 1][d - 1];
      return sign < 0 ? -det : det;
    }
  }  // namespace

  UnitClass burau_alexander(BraidWord const& w) {
    int const n = w.strands();
    if (n == 1) {
      return {LaurentPoly(1)};
    }
    size_t const d   = static_cast<size_t>(n - 1);
    Matrix       acc = identity(d);
    // Product taken left to right: acc = M(e_1) ... M(e_k). Applying the
    // letters in reverse as left multiplications builds the same product.
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      apply_generator(acc, *it);
    }
    Matrix diff = identity(d);
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < d; ++j) {
        diff[i][j] -= acc[i][j];
      }
    }
    LaurentPoly det = bareiss_det(std::move(diff));
    LaurentPoly cyclo;
    for (int k = 0; k < n; ++k) {
      cyclo.add_term(k, 1);
    }
    auto q = det.divide_exact(cyclo);
    if (!q) {
      throw OracleError("Burau oracle: 1 + t + ... + t^{n-1} does not divide "
                        "det(I - B) for "
                        + w.to_string());
    }
    return {q->substitute_power(-2)};
  }

  std::optional<UnitWitness> equal_up_to_unit(LaurentPoly const& a,
                                              LaurentPoly const& b) {
    if (a.is_zero() || b.is_zero()) {
      if (a.is_zero() && b.is_zero()) {
        return UnitWitness{};
      }
      return std::nullopt;
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    int const              shift = a.order() - b.order();
    GaussianRational const ratio = a.leading_coeff() / b.leading_coeff();
    int                    sign;
    if (ratio.is_one()) {
      sign = 1;
    } else if ((-ratio).is_one()) {
      sign = -1;
    } else {
      return std::nullopt;
    }
    if (b.shifted(shift) * GaussianRational(sign) != a) {
      return std::nullopt;
    }
    return UnitWitness{sign, shift};
  }

  std::optional<UnitWitness> equal_up_to_unit(UnitClass const&   a,
                                              LaurentPoly const& b) {
    return equal_up_to_unit(a.representative, b);
  }

}  // namespace fibskein
