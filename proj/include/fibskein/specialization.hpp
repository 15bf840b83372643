// Substitutions l = l(s), m = m(s) of the HOMFLY variables, together with the
// roots of the characteristic equation r^2 + m l r + l^2 = 0.

#ifndef FIBSKEIN_SPECIALIZATION_HPP_
#define FIBSKEIN_SPECIALIZATION_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "laurent.hpp"
#include "laurent2.hpp"

namespace fibskein {

  class SpecializationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  enum class SpecName { homfly, alexander, jones, degenerate, custom };

  class Specialization {
   public:
    static Specialization homfly();
    // l = i, m = i(s^-1 - s); roots -s, s^-1
    static Specialization alexander();
    // l = i s^2, m = i(s - s^-1); roots -s, s^3
    static Specialization jones();
    // l = s, m = -2; double root s
    static Specialization degenerate();
    // Roots must be unit monomials with r1 + r2 = -m l and r1 r2 = l^2, and
    // -(l + l^-1)/m must be a Laurent polynomial.
    static Specialization custom(LaurentPoly l,
                                 LaurentPoly m,
                                 LaurentPoly r1,
                                 LaurentPoly r2,
                                 std::string label = "custom");

    // "homfly", "alexander", "jones", "degenerate"
    static Specialization from_name(std::string_view name);
    // A name string, or {"l": text, "m": text, "r1": text, "r2": text}.
    static Specialization from_json(nlohmann::json const& j);

    SpecName           name() const noexcept {
      return _name;
    }
    std::string const& label() const noexcept {
      return _label;
    }
    bool is_homfly() const noexcept {
      return _name == SpecName::homfly;
    }
    bool is_degenerate() const;

    // Precondition: !is_homfly()
    LaurentPoly const& l() const;
    LaurentPoly const& m() const;
    std::pair<LaurentPoly, LaurentPoly> const& roots() const;

    // Image of P(unlink of two components) = -(l + l^-1)/m.
    LaurentPoly delta() const;

   private:
    Specialization() = default;

    SpecName                                           _name = SpecName::homfly;
    std::string                                        _label;
    std::optional<LaurentPoly>                         _l;
    std::optional<LaurentPoly>                         _m;
    std::optional<std::pair<LaurentPoly, LaurentPoly>> _roots;
  };

  // Substitutes l(s), m(s) and expands. l must be a unit; negative powers of
  // m are cleared by exact division, which must succeed.
  LaurentPoly tv_specialize(TwoVarLaurent const& p, Specialization const& spec);

  // -(l + l^-1)/m as a two-variable Laurent polynomial.
  TwoVarLaurent homfly_delta();

}  // namespace fibskein

#endif  // FIBSKEIN_SPECIALIZATION_HPP_
