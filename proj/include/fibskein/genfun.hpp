// Generating functions sum_{a >= 0} V(t with exponents a) t_1^a_1 ... t_k^a_k
// over a template. Each slot contributes the denominator
// q(tau) = 1 - c1 tau - c2 tau^2 and the numerator factors
// Q0(tau) = 1 - c1 tau (corner value at exponent 0) and Q1(tau) = tau.

#ifndef FIBSKEIN_GENFUN_HPP_
#define FIBSKEIN_GENFUN_HPP_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "braid.hpp"
#include "engine.hpp"
#include "laurent.hpp"
#include "specialization.hpp"

namespace fibskein {

  struct RationalGF {
    Template    tmpl;
    std::string spec_label;
    // q(tau) = 1 - c1 tau - c2 tau^2, the same in every slot
    LaurentPoly c1;
    LaurentPoly c2;
    // tau-coefficient of Q0; -c1 unless overridden
    LaurentPoly q0_linear;
    std::map<std::vector<int>, LaurentPoly> corners;
    // Expanded numerator: tau-exponent vector in {0,1}^k -> coefficient.
    std::map<std::vector<int>, LaurentPoly> numerator;

    size_t slots() const noexcept {
      return tmpl.indices.size();
    }
    // Same corners, different Q0; rebuilds the numerator.
    RationalGF with_q0_linear(LaurentPoly q0) const;
    // Coefficients of 1, tau, tau^2 in q.
    std::vector<LaurentPoly> denominator() const;
  };

  // Precondition: !spec.is_homfly()
  RationalGF build_genfun(Template const&       t,
                          Specialization const& spec,
                          EvalOptions           opts = {});

  // Throws std::invalid_argument for negative exponents or wrong length.
  LaurentPoly gf_coefficient(RationalGF const& g, std::vector<int> const& a);

  // Power series of 1/q(tau) up to tau^n.
  std::vector<LaurentPoly> inverse_denominator_series(RationalGF const& g,
                                                      int               n);

  std::string    render(RationalGF const& g);
  nlohmann::json to_json(RationalGF const& g);

}  // namespace fibskein

#endif  // FIBSKEIN_GENFUN_HPP_
