#include "fibskein/laurent2.hpp"

#include <ostream>
#include <vector>

#include "render.hpp"

namespace fibskein {

  TwoVarLaurent::TwoVarLaurent(GaussianRational c) {
    if (!c.is_zero()) {
      _terms.emplace(exponent{0, 0}, std::move(c));
    }
  }

  TwoVarLaurent::TwoVarLaurent(
      std::initializer_list<std::pair<exponent const, GaussianRational>>
          terms) {
    for (auto const& [e, c] : terms) {
      add_term(e.first, e.second, c);
    }
  }

  TwoVarLaurent TwoVarLaurent::monomial(GaussianRational c, int el, int em) {
    TwoVarLaurent p;
    p.add_term(el, em, c);
    return p;
  }

  GaussianRational TwoVarLaurent::coeff(int el, int em) const {
    auto it = _terms.find({el, em});
    return it == _terms.end() ? GaussianRational() : it->second;
  }

  TwoVarLaurent TwoVarLaurent::pow(unsigned e) const {
    TwoVarLaurent result(1);
    TwoVarLaurent base = *this;
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

  std::optional<TwoVarLaurent> TwoVarLaurent::unit_inverse() const {
    if (!is_monomial()) {
      return std::nullopt;
    }
    auto const& [e, c] = *_terms.begin();
    return monomial(c.inverse(), -e.first, -e.second);
  }

  void TwoVarLaurent::add_term(int el, int em, GaussianRational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(exponent{el, em}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  TwoVarLaurent& TwoVarLaurent::operator+=(TwoVarLaurent const& that) {
    for (auto const& [e, c] : that._terms) {
      add_term(e.first, e.second, c);
    }
    return *this;
  }

  TwoVarLaurent& TwoVarLaurent::operator-=(TwoVarLaurent const& that) {
    for (auto const& [e, c] : that._terms) {
      add_term(e.first, e.second, -c);
    }
    return *this;
  }

  TwoVarLaurent& TwoVarLaurent::operator*=(TwoVarLaurent const& that) {
    *this = *this * that;
    return *this;
  }

  TwoVarLaurent& TwoVarLaurent::operator*=(GaussianRational const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [e, x] : _terms) {
      x *= c;
    }
    return *this;
  }

  TwoVarLaurent operator*(TwoVarLaurent const& a, TwoVarLaurent const& b) {
    TwoVarLaurent out;
    for (auto const& [ea, ca] : a._terms) {
      for (auto const& [eb, cb] : b._terms) {
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    return out;
  }

  TwoVarLaurent TwoVarLaurent::operator-() const {
    TwoVarLaurent out = *this;
    for (auto& [e, c] : out._terms) {
      c = -c;
    }
    return out;
  }

  std::string TwoVarLaurent::to_string() const {
    std::vector<std::pair<GaussianRational, std::string>> terms;
    for (auto const& [e, c] : _terms) {
      std::string lpart = detail::power('l', e.first);
      std::string mpart = detail::power('m', e.second);
      std::string mono  = lpart;
      if (!mpart.empty()) {
        mono += (mono.empty() ? "" : "*") + mpart;
      }
      terms.emplace_back(c, mono);
    }
    return detail::render_terms(terms);
  }

  std::ostream& operator<<(std::ostream& os, TwoVarLaurent const& p) {
    return os << p.to_string();
  }

}  // namespace fibskein
