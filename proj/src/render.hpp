// Shared term rendering for the polynomial types.

#ifndef FIBSKEIN_SRC_RENDER_HPP_
#define FIBSKEIN_SRC_RENDER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fibskein/gaussian_rational.hpp"

namespace fibskein::detail {

  // Each entry is (coefficient, monomial text); an empty monomial is the
  // constant term.
  inline std::string
  render_terms(std::vector<std::pair<GaussianRational, std::string>> const&
                   terms) {
    if (terms.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [c, mono] : terms) {
      bool negative = (c.is_real() && sgn(c.re()) < 0)
                      || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
      GaussianRational mag = negative ? -c : c;
      std::string      body;
      if (mono.empty()) {
        body = mag.to_string();
      } else if (mag.is_one()) {
        body = mono;
      } else {
        body = mag.to_string() + "*" + mono;
      }
      if (first) {
        out = negative ? "-" + body : body;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
      first = false;
    }
    return out;
  }

  inline std::string power(char var, int exp) {
    if (exp == 0) {
      return "";
    }
    if (exp == 1) {
      return std::string(1, var);
    }
    return std::string(1, var) + "^" + std::to_string(exp);
  }

}  // namespace fibskein::detail

#endif  // FIBSKEIN_SRC_RENDER_HPP_
