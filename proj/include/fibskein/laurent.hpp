// Sparse Laurent polynomials in one variable with Gaussian-rational
// coefficients, plus the degree/order/breadth profile used throughout.

#ifndef FIBSKEIN_LAURENT_HPP_
#define FIBSKEIN_LAURENT_HPP_

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gaussian_rational.hpp"

namespace fibskein {

  // deg/ord are absent (the "bottom" marker) for the zero polynomial.
  struct DegreeProfile {
    std::optional<int> degree;
    std::optional<int> order;
    int                breadth = 0;

    friend bool operator==(DegreeProfile const&, DegreeProfile const&)
        = default;
  };

  class LaurentPoly {
   public:
    using term_map = std::map<int, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(GaussianRational c);  // NOLINT(runtime/explicit)
    LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT
    LaurentPoly(std::initializer_list<std::pair<int const, GaussianRational>>
                    terms);

    static LaurentPoly monomial(GaussianRational c, int exp);
    static LaurentPoly s(int exp = 1) {
      return monomial(1, exp);
    }

    term_map const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    bool is_monomial() const noexcept {
      return _terms.size() == 1;
    }
    bool is_one() const noexcept {
      return is_monomial() && _terms.begin()->first == 0
             && _terms.begin()->second.is_one();
    }
    size_t size() const noexcept {
      return _terms.size();
    }

    // Coefficient of s^exp (zero if absent).
    GaussianRational coeff(int exp) const;

    // Precondition: nonzero.
    int degree() const;
    int order() const;
    GaussianRational leading_coeff() const;

    DegreeProfile profile() const;

    // s -> s^-1
    LaurentPoly bar() const;
    // s -> s^factor
    LaurentPoly substitute_power(int factor) const;
    // multiply by s^k
    LaurentPoly shifted(int k) const;

    LaurentPoly pow(unsigned e) const;

    // Only monomials are units.
    std::optional<LaurentPoly> unit_inverse() const;

    // q with this = divisor * q, if it exists.
    std::optional<LaurentPoly> divide_exact(LaurentPoly const& divisor) const;

    // Value at s = 1.
    GaussianRational at_one() const;

    bool is_real() const;
    bool dyadic() const;

    void add_term(int exp, GaussianRational const& c);

    LaurentPoly& operator+=(LaurentPoly const& that);
    LaurentPoly& operator-=(LaurentPoly const& that);
    LaurentPoly& operator*=(LaurentPoly const& that);
    LaurentPoly& operator*=(GaussianRational const& c);

    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      return a -= b;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    friend LaurentPoly operator*(LaurentPoly a, GaussianRational const& c) {
      return a *= c;
    }
    friend LaurentPoly operator*(LaurentPoly a, long c) {
      return a *= GaussianRational(c);
    }
    LaurentPoly operator-() const;

    friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) {
      return a._terms == b._terms;
    }

    // Ascending exponents, e.g. "s^-2 - 1 + s^2".
    std::string to_string(char var = 's') const;

   private:
    term_map _terms;
  };

  std::ostream& operator<<(std::ostream& os, LaurentPoly const& p);

}  // namespace fibskein

#endif  // FIBSKEIN_LAURENT_HPP_
