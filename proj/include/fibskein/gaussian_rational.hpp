// Exact Gaussian rationals: a + b*i with a, b in Q.

#ifndef FIBSKEIN_GAUSSIAN_RATIONAL_HPP_
#define FIBSKEIN_GAUSSIAN_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fibskein {

  class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long re) : _re(re), _im(0) {}  // NOLINT(runtime/explicit)
    GaussianRational(long num, long den);
    GaussianRational(mpq_class re, mpq_class im);

    static GaussianRational i() {
      return GaussianRational(mpq_class(0), mpq_class(1));
    }

    // Accepts "p", "p/q" for each part.
    static GaussianRational from_strings(std::string_view re,
                                         std::string_view im);

    mpq_class const& re() const noexcept {
      return _re;
    }
    mpq_class const& im() const noexcept {
      return _im;
    }

    bool is_zero() const noexcept {
      return sgn(_re) == 0 && sgn(_im) == 0;
    }
    bool is_real() const noexcept {
      return sgn(_im) == 0;
    }
    bool is_one() const noexcept {
      return _re == 1 && sgn(_im) == 0;
    }

    GaussianRational conj() const {
      return GaussianRational(_re, -_im);
    }
    GaussianRational inverse() const;

    GaussianRational& operator+=(GaussianRational const& that);
    GaussianRational& operator-=(GaussianRational const& that);
    GaussianRational& operator*=(GaussianRational const& that);
    GaussianRational& operator/=(GaussianRational const& that);

    friend GaussianRational operator+(GaussianRational a,
                                      GaussianRational const& b) {
      return a += b;
    }
    friend GaussianRational operator-(GaussianRational a,
                                      GaussianRational const& b) {
      return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a,
                                      GaussianRational const& b) {
      return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a,
                                      GaussianRational const& b) {
      return a /= b;
    }
    GaussianRational operator-() const {
      return GaussianRational(-_re, -_im);
    }

    friend bool operator==(GaussianRational const& a,
                           GaussianRational const& b) {
      return a._re == b._re && a._im == b._im;
    }

    // Exact rendering: "3/2", "-i", "(1/2+3i)", "(1/2)i".
    std::string to_string() const;

    // True if both parts have a denominator that is a power of two.
    bool dyadic() const;

   private:
    mpq_class _re;
    mpq_class _im;
  };

  std::ostream& operator<<(std::ostream& os, GaussianRational const& x);

}  // namespace fibskein

#endif  // FIBSKEIN_GAUSSIAN_RATIONAL_HPP_
