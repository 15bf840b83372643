// JSON and text forms of polynomials.
//
// JSON schema (one variable):
//   {"var":"s","terms":[{"exp":-3,"re":"1/2","im":"0"}, ...]}
// JSON schema (HOMFLY variables):
//   {"vars":["l","m"],"terms":[{"el":2,"em":2,"re":"1","im":"0"}, ...]}
// Terms are emitted in ascending exponent order, coefficients as exact
// fraction strings.

#ifndef FIBSKEIN_POLY_IO_HPP_
#define FIBSKEIN_POLY_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "laurent.hpp"
#include "laurent2.hpp"

namespace fibskein {

  using InvariantValue = std::variant<LaurentPoly, TwoVarLaurent>;

  nlohmann::json to_json(LaurentPoly const& p, char var = 's');
  nlohmann::json to_json(TwoVarLaurent const& p);
  nlohmann::json to_json(InvariantValue const& v);

  LaurentPoly   laurent_from_json(nlohmann::json const& j);
  TwoVarLaurent laurent2_from_json(nlohmann::json const& j);
  // Dispatches on the presence of "var" or "vars".
  InvariantValue invariant_from_json(nlohmann::json const& j);

  std::string to_string(InvariantValue const& v);

  // Parses the text rendering produced by to_string, and hand-written input
  // such as "1/4*s^-2 + 1/2 + 1/4*s^2" or "-l^4 - 2*l^2 + l^2*m^2".
  LaurentPoly   parse_laurent(std::string_view text, char var = 's');
  TwoVarLaurent parse_laurent2(std::string_view text);

}  // namespace fibskein

#endif  // FIBSKEIN_POLY_IO_HPP_
