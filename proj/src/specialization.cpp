#include "fibskein/specialization.hpp"

#include <climits>
#include <map>

#include "fibskein/poly_io.hpp"

namespace fibskein {

  namespace {
    GaussianRational const I = GaussianRational::i();
  }

  Specialization Specialization::homfly() {
    Specialization s;
    s._name  = SpecName::homfly;
    s._label = "homfly";
    return s;
  }

  Specialization Specialization::alexander() {
    Specialization s;
    s._name  = SpecName::alexander;
    s._label = "alexander";
    s._l     = LaurentPoly(I);
    s._m     = LaurentPoly{{-1, I}, {1, -I}};
    s._roots = {LaurentPoly::monomial(-1, 1), LaurentPoly::s(-1)};
    return s;
  }

  Specialization Specialization::jones() {
    Specialization s;
    s._name  = SpecName::jones;
    s._label = "jones";
    s._l     = LaurentPoly::monomial(I, 2);
    s._m     = LaurentPoly{{1, I}, {-1, -I}};
    s._roots = {LaurentPoly::monomial(-1, 1), LaurentPoly::s(3)};
    return s;
  }

  Specialization Specialization::degenerate() {
    Specialization s;
    s._name  = SpecName::degenerate;
    s._label = "degenerate";
    s._l     = LaurentPoly::s(1);
    s._m     = LaurentPoly(-2);
    s._roots = {LaurentPoly::s(1), LaurentPoly::s(1)};
    return s;
  }

  Specialization Specialization::custom(LaurentPoly l,
                                        LaurentPoly m,
                                        LaurentPoly r1,
                                        LaurentPoly r2,
                                        std::string label) {
    if (!l.is_monomial()) {
      throw SpecializationError("custom specialization: l = " + l.to_string()
                                + " is not a unit");
    }
    if (m.is_zero()) {
      throw SpecializationError("custom specialization: m must be nonzero");
    }
    if (!r1.is_monomial() || !r2.is_monomial()) {
      throw SpecializationError(
          "custom specialization: roots must be unit monomials");
    }
    if (r1 + r2 != -(m * l) || r1 * r2 != l * l) {
      throw SpecializationError(
          "custom specialization: roots do not solve r^2 + m l r + l^2 = 0");
    }
    Specialization s;
    s._name  = SpecName::custom;
    s._label = std::move(label);
    s._l     = std::move(l);
    s._m     = std::move(m);
    s._roots = {std::move(r1), std::move(r2)};
    (void) s.delta();  // throws if not Laurent
    return s;
  }

  Specialization Specialization::from_name(std::string_view name) {
    if (name == "homfly") {
      return homfly();
    }
    if (name == "alexander") {
      return alexander();
    }
    if (name == "jones") {
      return jones();
    }
    if (name == "degenerate") {
      return degenerate();
    }
    throw SpecializationError("unknown specialization \"" + std::string(name)
                              + "\"");
  }

  Specialization Specialization::from_json(nlohmann::json const& j) {
    if (j.is_string()) {
      return from_name(j.get<std::string>());
    }
    for (char const* key : {"l", "m", "r1", "r2"}) {
      if (!j.contains(key)) {
        throw SpecializationError(std::string("custom specialization needs \"")
                                  + key + "\"");
      }
    }
    return custom(parse_laurent(j.at("l").get<std::string>()),
                  parse_laurent(j.at("m").get<std::string>()),
                  parse_laurent(j.at("r1").get<std::string>()),
                  parse_laurent(j.at("r2").get<std::string>()),
                  j.value("label", std::string("custom")));
  }

  bool Specialization::is_degenerate() const {
    return _roots && _roots->first == _roots->second;
  }

  LaurentPoly const& Specialization::l() const {
    if (!_l) {
      throw SpecializationError("homfly has no substitution for l");
    }
    return *_l;
  }

  LaurentPoly const& Specialization::m() const {
    if (!_m) {
      throw SpecializationError("homfly has no substitution for m");
    }
    return *_m;
  }

  std::pair<LaurentPoly, LaurentPoly> const& Specialization::roots() const {
    if (!_roots) {
      throw SpecializationError(
          "homfly roots are not rational in l, m");
    }
    return *_roots;
  }

  LaurentPoly Specialization::delta() const {
    LaurentPoly num = -(l() + *l().unit_inverse());
    auto        q   = num.divide_exact(m());
    if (!q) {
      throw SpecializationError("-(l + l^-1)/m is not Laurent for "
                                + _label);
    }
    return *q;
  }

  LaurentPoly tv_specialize(TwoVarLaurent const& p, Specialization const& spec) {
    if (spec.is_homfly()) {
      throw SpecializationError("tv_specialize needs a one-variable target");
    }
    auto linv = spec.l().unit_inverse();
    if (!linv) {
      throw SpecializationError("l = " + spec.l().to_string()
                                + " is not invertible");
    }
    if (p.is_zero()) {
      return {};
    }
    int min_m = INT_MAX;
    for (auto const& [e, c] : p.terms()) {
      min_m = std::min(min_m, e.second);
    }
    int const shift = min_m < 0 ? -min_m : 0;

    std::map<int, LaurentPoly> lpow, mpow;
    auto power = [](std::map<int, LaurentPoly>& cache,
                    LaurentPoly const& base,
                    LaurentPoly const& inv_base,
                    int                e) -> LaurentPoly const& {
      auto it = cache.find(e);
      if (it == cache.end()) {
        LaurentPoly v = e >= 0 ? base.pow(static_cast<unsigned>(e))
                               : inv_base.pow(static_cast<unsigned>(-e));
        it = cache.emplace(e, std::move(v)).first;
      }
      return it->second;
    };

    LaurentPoly numerator;
    for (auto const& [e, c] : p.terms()) {
      LaurentPoly term = power(lpow, spec.l(), *linv, e.first);
      term *= power(mpow, spec.m(), spec.m(), e.second + shift);
      term *= c;
      numerator += term;
    }
    if (shift == 0) {
      return numerator;
    }
    auto q = numerator.divide_exact(spec.m().pow(static_cast<unsigned>(shift)));
    if (!q) {
      throw SpecializationError("m = " + spec.m().to_string()
                                + " does not divide the specialized value");
    }
    return *q;
  }

  TwoVarLaurent homfly_delta() {
    return TwoVarLaurent{{{1, -1}, -1}, {{-1, -1}, -1}};
  }

}  // namespace fibskein
