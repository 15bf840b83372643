// Reference computations that share no code path with the skein engine:
// Kauffman bracket state sum, reduced Burau determinant, and the Hecke
// algebra trace.

#ifndef FIBSKEIN_ORACLES_HPP_
#define FIBSKEIN_ORACLES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"
#include "laurent2.hpp"

namespace fibskein {

  class OracleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Laurent polynomial up to multiplication by +-s^j.
  struct UnitClass {
    LaurentPoly representative;
  };

  // a = sign * s^shift * b
  struct UnitWitness {
    int sign  = 1;
    int shift = 0;
  };

  std::optional<UnitWitness> equal_up_to_unit(LaurentPoly const& a,
                                              LaurentPoly const& b);
  std::optional<UnitWitness> equal_up_to_unit(UnitClass const&   a,
                                              LaurentPoly const& b);

  inline constexpr size_t default_crossing_cap = 24;

  // Jones polynomial in s (t = s^-2). Throws OracleError above the cap.
  LaurentPoly kauffman_jones(BraidWord const& w,
                             size_t           crossing_cap = default_crossing_cap);

  // det(I - reduced Burau) / (1 + t + ... + t^{n-1}) at t = s^-2.
  UnitClass burau_alexander(BraidWord const& w);

  inline constexpr int hecke_max_strands = 7;

  // HOMFLY via the permutation basis of the Hecke algebra and its Markov
  // trace. Trace values are memoized across calls.
  class HeckeOracle {
   public:
    TwoVarLaurent homfly(BraidWord const& w);

    using Perm    = std::vector<int>;
    using Element = std::map<Perm, TwoVarLaurent>;

    // Right multiplication by g_i^{sign}, i 1-based.
    static void multiply_generator(Element& x, int i, int sign);
    // Normalized trace with tr(1 in H_n) = delta^{n-1}.
    TwoVarLaurent trace(Element const& x);
    TwoVarLaurent trace(Perm const& w);

   private:
    std::map<Perm, TwoVarLaurent> _memo;
  };

  // Throws OracleError for more than hecke_max_strands strands.
  TwoVarLaurent hecke_homfly(BraidWord const& w);

}  // namespace fibskein

#endif  // FIBSKEIN_ORACLES_HPP_
