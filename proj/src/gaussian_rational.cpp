#include "fibskein/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fibskein {

  namespace {
    mpq_class parse_rational(std::string_view text) {
      std::string s(text);
      if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
      }
      mpq_class q;
      if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal \"" + s
                                    + "\"");
      }
      if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in \"" + s + "\"");
      }
      q.canonicalize();
      return q;
    }

    bool power_of_two(mpz_class const& d) {
      return mpz_popcount(d.get_mpz_t()) == 1;
    }
  }  // namespace

  GaussianRational::GaussianRational(long num, long den) : _re(num, den), _im(0) {
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    _re.canonicalize();
  }

  GaussianRational::GaussianRational(mpq_class re, mpq_class im)
      : _re(std::move(re)), _im(std::move(im)) {
    _re.canonicalize();
    _im.canonicalize();
  }

  GaussianRational GaussianRational::from_strings(std::string_view re,
                                                  std::string_view im) {
    return GaussianRational(parse_rational(re), parse_rational(im));
  }

  GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
      throw std::domain_error("division by zero Gaussian rational");
    }
    mpq_class norm = _re * _re + _im * _im;
    return GaussianRational(mpq_class(_re / norm), mpq_class(-_im / norm));
  }

  GaussianRational& GaussianRational::operator+=(GaussianRational const& that) {
    _re += that._re;
    if (sgn(that._im) != 0) {
      _im += that._im;
    }
    return *this;
  }

  GaussianRational& GaussianRational::operator-=(GaussianRational const& that) {
    _re -= that._re;
    if (sgn(that._im) != 0) {
      _im -= that._im;
    }
    return *this;
  }

  GaussianRational& GaussianRational::operator*=(GaussianRational const& that) {
    if (sgn(_im) == 0 && sgn(that._im) == 0) {
      _re *= that._re;
      return *this;
    }
    mpq_class re = _re * that._re - _im * that._im;
    mpq_class im = _re * that._im + _im * that._re;
    _re          = std::move(re);
    _im          = std::move(im);
    return *this;
  }

  GaussianRational& GaussianRational::operator/=(GaussianRational const& that) {
    if (that.is_zero()) {
      throw std::domain_error("division by zero Gaussian rational");
    }
    if (sgn(_im) == 0 && sgn(that._im) == 0) {
      _re /= that._re;
      return *this;
    }
    return *this *= that.inverse();
  }

  std::string GaussianRational::to_string() const {
    bool has_re = sgn(_re) != 0;
    bool has_im = sgn(_im) != 0;
    if (!has_im) {
      return _re.get_str();
    }
    auto imag = [](mpq_class const& b) -> std::string {
      mpq_class const   mag  = abs(b);
      std::string const sign = sgn(b) < 0 ? "-" : "";
      if (mag == 1) {
        return sign + "i";
      }
      if (mag.get_den() == 1) {
        return sign + mag.get_str() + "i";
      }
      return sign + "(" + mag.get_str() + ")i";
    };
    if (!has_re) {
      return imag(_im);
    }
    std::string im = imag(_im);
    if (im.front() != '-') {
      im = "+" + im;
    }
    return "(" + _re.get_str() + im + ")";
  }

  bool GaussianRational::dyadic() const {
    return power_of_two(_re.get_den()) && power_of_two(_im.get_den());
  }

  std::ostream& operator<<(std::ostream& os, GaussianRational const& x) {
    return os << x.to_string();
  }

}  // namespace fibskein
