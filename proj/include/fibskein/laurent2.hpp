// Sparse Laurent polynomials in the two HOMFLY variables l and m.

#ifndef FIBSKEIN_LAURENT2_HPP_
#define FIBSKEIN_LAURENT2_HPP_

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gaussian_rational.hpp"

namespace fibskein {

  class TwoVarLaurent {
   public:
    // (exponent of l, exponent of m)
    using exponent = std::pair<int, int>;
    using term_map = std::map<exponent, GaussianRational>;

    TwoVarLaurent() = default;
    TwoVarLaurent(GaussianRational c);  // NOLINT(runtime/explicit)
    TwoVarLaurent(long c) : TwoVarLaurent(GaussianRational(c)) {}  // NOLINT
    TwoVarLaurent(
        std::initializer_list<std::pair<exponent const, GaussianRational>>
            terms);

    static TwoVarLaurent monomial(GaussianRational c, int el, int em);
    static TwoVarLaurent l(int exp = 1) {
      return monomial(1, exp, 0);
    }
    static TwoVarLaurent m(int exp = 1) {
      return monomial(1, 0, exp);
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
    GaussianRational coeff(int el, int em) const;

    TwoVarLaurent pow(unsigned e) const;
    std::optional<TwoVarLaurent> unit_inverse() const;

    void add_term(int el, int em, GaussianRational const& c);

    TwoVarLaurent& operator+=(TwoVarLaurent const& that);
    TwoVarLaurent& operator-=(TwoVarLaurent const& that);
    TwoVarLaurent& operator*=(TwoVarLaurent const& that);
    TwoVarLaurent& operator*=(GaussianRational const& c);

    friend TwoVarLaurent operator+(TwoVarLaurent a, TwoVarLaurent const& b) {
      return a += b;
    }
    friend TwoVarLaurent operator-(TwoVarLaurent a, TwoVarLaurent const& b) {
      return a -= b;
    }
    friend TwoVarLaurent operator*(TwoVarLaurent const& a,
                                   TwoVarLaurent const& b);
    friend TwoVarLaurent operator*(TwoVarLaurent a, GaussianRational const& c) {
      return a *= c;
    }
    friend TwoVarLaurent operator*(TwoVarLaurent a, long c) {
      return a *= GaussianRational(c);
    }
    TwoVarLaurent operator-() const;

    friend bool operator==(TwoVarLaurent const& a, TwoVarLaurent const& b) {
      return a._terms == b._terms;
    }

    // Ascending (el, em), e.g. "-l^4 - 2*l^2 + l^2*m^2".
    std::string to_string() const;

   private:
    term_map _terms;
  };

  std::ostream& operator<<(std::ostream& os, TwoVarLaurent const& p);

}  // namespace fibskein

#endif  // FIBSKEIN_LAURENT2_HPP_
