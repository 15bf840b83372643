#include "fibskein/laurent.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "render.hpp"

namespace fibskein {

  LaurentPoly::LaurentPoly(GaussianRational c) {
    if (!c.is_zero()) {
      _terms.emplace(0, std::move(c));
    }
  }

  LaurentPoly::LaurentPoly(
      std::initializer_list<std::pair<int const, GaussianRational>> terms) {
    for (auto const& [e, c] : terms) {
      add_term(e, c);
    }
  }

  LaurentPoly LaurentPoly::monomial(GaussianRational c, int exp) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
  }

  GaussianRational LaurentPoly::coeff(int exp) const {
    auto it = _terms.find(exp);
    return it == _terms.end() ? GaussianRational() : it->second;
  }

  int LaurentPoly::degree() const {
    if (is_zero()) {
      throw std::domain_error("degree of the zero polynomial");
    }
    return _terms.rbegin()->first;
  }

  int LaurentPoly::order() const {
    if (is_zero()) {
      throw std::domain_error("order of the zero polynomial");
    }
    return _terms.begin()->first;
  }

  GaussianRational LaurentPoly::leading_coeff() const {
    if (is_zero()) {
      throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return _terms.rbegin()->second;
  }

  DegreeProfile LaurentPoly::profile() const {
    if (is_zero()) {
      return {};
    }
    return {degree(), order(), degree() - order() + 1};
  }

  LaurentPoly LaurentPoly::bar() const {
    return substitute_power(-1);
  }

  LaurentPoly LaurentPoly::substitute_power(int factor) const {
    if (factor == 0) {
      return LaurentPoly(at_one());
    }
    LaurentPoly out;
    for (auto const& [e, c] : _terms) {
      out._terms.emplace(e * factor, c);
    }
    return out;
  }

  LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (auto const& [e, c] : _terms) {
      out._terms.emplace_hint(out._terms.end(), e + k, c);
    }
    return out;
  }

  LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
      if (e & 1U) {
        result *= base;
      }
      e >>= 1U;
      if (e > 0) {
        base = base * base;
      }
    }
    return result;
  }

  std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
    if (!is_monomial()) {
      return std::nullopt;
    }
    auto const& [e, c] = *_terms.begin();
    return monomial(c.inverse(), -e);
  }

  std::optional<LaurentPoly>
  LaurentPoly::divide_exact(LaurentPoly const& divisor) const {
    if (divisor.is_zero()) {
      throw std::domain_error("division by the zero polynomial");
    }
    if (is_zero()) {
      return LaurentPoly();
    }
    if (auto inv = divisor.unit_inverse()) {
      return *this * *inv;
    }
    // Long division from the top, on the shifted ordinary polynomials.
    int const        dord = divisor.order();
    int const        ddeg = divisor.degree();
    GaussianRational lead = divisor.leading_coeff().inverse();
    LaurentPoly      rem  = *this;
    LaurentPoly      quot;
    while (!rem.is_zero() && rem.degree() - rem.order() >= ddeg - dord) {
      int              shift = rem.degree() - ddeg;
      GaussianRational c     = rem.leading_coeff() * lead;
      quot.add_term(shift, c);
      LaurentPoly step = divisor.shifted(shift);
      step *= c;
      rem -= step;
    }
    if (!rem.is_zero()) {
      return std::nullopt;
    }
    return quot;
  }

  GaussianRational LaurentPoly::at_one() const {
    GaussianRational sum;
    for (auto const& [e, c] : _terms) {
      sum += c;
    }
    return sum;
  }

  bool LaurentPoly::is_real() const {
    for (auto const& [e, c] : _terms) {
      if (!c.is_real()) {
        return false;
      }
    }
    return true;
  }

  bool LaurentPoly::dyadic() const {
    for (auto const& [e, c] : _terms) {
      if (!c.dyadic()) {
        return false;
      }
    }
    return true;
  }

  void LaurentPoly::add_term(int exp, GaussianRational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& that) {
    for (auto const& [e, c] : that._terms) {
      add_term(e, c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& that) {
    for (auto const& [e, c] : that._terms) {
      add_term(e, -c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& that) {
    *this = *this * that;
    return *this;
  }

  LaurentPoly& LaurentPoly::operator*=(GaussianRational const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [e, x] : _terms) {
      x *= c;
    }
    return *this;
  }

  LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out;
    for (auto const& [ea, ca] : a._terms) {
      for (auto const& [eb, cb] : b._terms) {
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out._terms) {
      c = -c;
    }
    return out;
  }

  std::string LaurentPoly::to_string(char var) const {
    std::vector<std::pair<GaussianRational, std::string>> terms;
    terms.reserve(_terms.size());
    for (auto const& [e, c] : _terms) {
      terms.emplace_back(c, detail::power(var, e));
    }
    return detail::render_terms(terms);
  }

  std::ostream& operator<<(std::ostream& os, LaurentPoly const& p) {
    return os << p.to_string();
  }

}  // namespace fibskein
