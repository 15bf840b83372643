// Closed-form families and checks built on the engine: the 3-braids
// gamma_j = x1 x2 x1 ... (j letters), two-strand torus links, degree laws,
// the classification of rational specializations, and leading-term probes.

#ifndef FIBSKEIN_FAMILIES_HPP_
#define FIBSKEIN_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"
#include "laurent2.hpp"
#include "report.hpp"
#include "specialization.hpp"

namespace fibskein {

  BraidWord gamma_word(int j);

  // x1^a in B2.
  BraidWord torus2_word(int a);

  // Lower limit of the first sum in the j = 6k+1 formula. The printed
  // formula starts at i = 1 and misses s^-5 - s^-3; starting at i = 0
  // matches the closure.
  enum class SumStart { corrected, as_printed };

  // Alexander-Conway polynomial of gamma_j from the six residue-class
  // formulas. Valid for j >= 4; throws std::domain_error below.
  LaurentPoly nabla_gamma_closed(int j, SumStart start = SumStart::corrected);

  // (s^-a + (-1)^{a+1} s^a) / (s + s^-1), any integer a.
  LaurentPoly nabla2_power(int a);
  // (1/2)[(1-a) s^{a+1} + (1+a) s^{a-1}], any integer a.
  LaurentPoly d2_power(int a);

  // D(gamma_j) for j = 0..6 exactly as printed; entry 6 is
  // (1/4)(-s^8 - 6s^6 + 11).
  std::vector<LaurentPoly> d_gamma_printed_table();

  // Table for j <= 6 with D(6) = (1/4)(-s^8 - 6s^6 + 11 s^4), the value
  // forced by the j = 6k recurrence from D(0..5); recurrences for j >= 7.
  LaurentPoly d_gamma(int j);

  // a_j from the stated pattern, j >= 6.
  int d_gamma_a_pattern(int j);

  struct DGammaShape {
    int           j = 0;
    LaurentPoly   value;
    std::set<int> support;
    // support within {j+2, j+1, j}
    bool printed_shape = false;
    // -4 times the coefficient of s^{j+2}
    std::optional<GaussianRational> a_observed;
    int                             a_expected = 0;
  };
  DGammaShape d_gamma_shape(LaurentPoly const& value, int j);

  // All four gamma recurrences on Hecke-oracle HOMFLY values, indices up to
  // 6 k_max + 4, and their alexander and degenerate specializations
  // against the displayed one-variable recurrences on engine values.
  CheckReport homfly_gamma_recurrence_check(int k_max);

  struct DegreeLawOptions {
    size_t        samples = 200;
    std::uint64_t seed    = 1;
  };
  CheckReport degree_laws_check(DegreeLawOptions opts = {});

  struct SpecCandidate {
    int              n = 0;
    int              k = 0;
    int              q = 0;
    GaussianRational lambda2;
    GaussianRational mu2;
  };

  struct ClassifierResult {
    std::vector<SpecCandidate> families;  // normalized, deduplicated
    size_t enumerated = 0;                // coprime pairs with n + k even
    size_t passed_divisibility = 0;
    // Accepted pairs with no exponent of absolute value 1.
    std::vector<std::pair<int, int>> unnormalizable;
  };

  ClassifierResult classify_specializations(int range);

  // Built-in specialization reconstructed from a family via
  // l = lambda mu s^q, m = -(lambda/mu) s^{n-q} - (mu/lambda) s^{q-n}.
  Specialization specialization_of(SpecCandidate const& c);

  struct ProbeReport {
    int         p = 0;
    int         n = 0;
    BraidWord   word;
    LaurentPoly nabla, jones, d;
    CheckReport checks;
  };

  // beta = x1^{2p+1} ... xn^{2p+1} in B_{n+1}. Throws std::invalid_argument
  // unless p is prime and n even.
  ProbeReport independence_probe(int p, int n);

  // deg V2(x1^n) = 3n-1, deg/ord nabla2(x1^n) = n-1 / 1-n,
  // deg D2(x1^n) = n+1.
  CheckReport two_strand_degree_check(int n_lo, int n_hi);

}  // namespace fibskein

#endif  // FIBSKEIN_FAMILIES_HPP_
