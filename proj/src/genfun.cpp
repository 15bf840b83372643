#include "fibskein/genfun.hpp"

#include <stdexcept>

#include "fibskein/poly_io.hpp"

namespace fibskein {

  namespace {
    void assemble(RationalGF& g) {
      g.numerator.clear();
      size_t const k = g.slots();
      for (auto const& [corner, value] : g.corners) {
        if (value.is_zero()) {
          continue;
        }
        // Slots at corner 0 contribute 1 + q0_linear tau, slots at corner 1
        // contribute tau.
        std::vector<size_t> free;
        std::vector<int>    base(k, 0);
        for (size_t i = 0; i < k; ++i) {
          if (corner[i] == 1) {
            base[i] = 1;
          } else {
            free.push_back(i);
          }
        }
        for (size_t mask = 0; mask < (size_t{1} << free.size()); ++mask) {
          auto        tau   = base;
          LaurentPoly coeff = value;
          for (size_t f = 0; f < free.size(); ++f) {
            if ((mask >> f) & 1U) {
              tau[free[f]] = 1;
              coeff *= g.q0_linear;
            }
          }
          auto& slot = g.numerator[tau];
          slot += coeff;
        }
      }
      std::erase_if(g.numerator, [](auto const& kv) { return kv.second.is_zero(); });
    }

    std::string tau_monomial(std::vector<int> const& tau) {
      std::string out;
      for (size_t i = 0; i < tau.size(); ++i) {
        if (tau[i] != 0) {
          out += (out.empty() ? "" : "*") + std::string("t") + std::to_string(i + 1);
        }
      }
      return out;
    }
  }  // namespace

  RationalGF RationalGF::with_q0_linear(LaurentPoly q0) const {
    RationalGF g = *this;
    g.q0_linear  = std::move(q0);
    assemble(g);
    return g;
  }

  std::vector<LaurentPoly> RationalGF::denominator() const {
    return {LaurentPoly(1), -c1, -c2};
  }

  RationalGF build_genfun(Template const&       t,
                          Specialization const& spec,
                          EvalOptions           opts) {
    if (spec.is_homfly()) {
      throw SpecializationError(
          "generating functions need a one-variable specialization");
    }
    RationalGF g;
    g.tmpl       = t;
    g.spec_label = spec.label();
    auto rc      = recurrence_coefficients(spec);
    g.c1         = std::get<LaurentPoly>(rc.first);
    g.c2         = std::get<LaurentPoly>(rc.second);
    g.q0_linear  = -g.c1;

    InvariantEngine engine(spec, opts);
    size_t const    k = t.indices.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<int> corner(k);
      for (size_t i = 0; i < k; ++i) {
        corner[i] = static_cast<int>((mask >> (k - 1 - i)) & 1U);
      }
      g.corners[corner] = engine.evaluate_laurent(t.with_exponents(corner).to_word());
    }
    assemble(g);
    return g;
  }

  std::vector<LaurentPoly> inverse_denominator_series(RationalGF const& g,
                                                      int               n) {
    std::vector<LaurentPoly> h;
    h.reserve(static_cast<size_t>(std::max(n, 0) + 1));
    for (int a = 0; a <= n; ++a) {
      if (a == 0) {
        h.emplace_back(1);
      } else if (a == 1) {
        h.push_back(g.c1);
      } else {
        h.push_back(g.c1 * h[a - 1] + g.c2 * h[a - 2]);
      }
    }
    return h;
  }

  LaurentPoly gf_coefficient(RationalGF const& g, std::vector<int> const& a) {
    if (a.size() != g.slots()) {
      throw std::invalid_argument("exponent vector has "
                                  + std::to_string(a.size())
                                  + " entries, generating function has "
                                  + std::to_string(g.slots()) + " slots");
    }
    int top = 0;
    for (int x : a) {
      if (x < 0) {
        throw std::invalid_argument(
            "coefficient extraction is defined for nonnegative exponents only");
      }
      top = std::max(top, x);
    }
    auto const  h = inverse_denominator_series(g, top);
    LaurentPoly out;
    for (auto const& [tau, coeff] : g.numerator) {
      LaurentPoly term = coeff;
      for (size_t i = 0; i < a.size() && !term.is_zero(); ++i) {
        if (tau[i] > a[i]) {
          term = LaurentPoly();
        } else {
          term *= h[static_cast<size_t>(a[i] - tau[i])];
        }
      }
      out += term;
    }
    return out;
  }

  std::string render(RationalGF const& g) {
    std::string num;
    for (auto const& [tau, coeff] : g.numerator) {
      if (!num.empty()) {
        num += " + ";
      }
      std::string mono = tau_monomial(tau);
      num += "(" + coeff.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (num.empty()) {
      num = "0";
    }
    std::string den;
    std::string const q = "1 + (" + (-g.c1).to_string() + ")*t%i + ("
                          + (-g.c2).to_string() + ")*t%i^2";
    for (size_t i = 0; i < g.slots(); ++i) {
      std::string factor = q;
      std::string idx    = std::to_string(i + 1);
      for (auto p = factor.find("%i"); p != std::string::npos;
           p      = factor.find("%i")) {
        factor.replace(p, 2, idx);
      }
      den += "(" + factor + ")";
    }
    if (den.empty()) {
      den = "1";
    }
    return "numerator: " + num + "\ndenominator: " + den;
  }

  nlohmann::json to_json(RationalGF const& g) {
    nlohmann::json num = nlohmann::json::array();
    for (auto const& [tau, coeff] : g.numerator) {
      num.push_back({{"tau", tau}, {"coeff", to_json(coeff)}});
    }
    nlohmann::json corners = nlohmann::json::array();
    for (auto const& [corner, value] : g.corners) {
      corners.push_back({{"corner", corner}, {"value", to_json(value)}});
    }
    nlohmann::json den = nlohmann::json::array();
    for (auto const& c : g.denominator()) {
      den.push_back(to_json(c));
    }
    return {{"spec", g.spec_label},
            {"template",
             {{"strands", g.tmpl.strands},
              {"indices", g.tmpl.indices},
              {"exponents", g.tmpl.exponents}}},
            {"denominator_per_slot", den},
            {"numerator", num},
            {"corners", corners}};
  }

}  // namespace fibskein
