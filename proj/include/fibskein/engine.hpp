// Invariant evaluation of closed braids by the two-term skein recurrence.
//
// Every run x_i^a with a outside {0,1} is rewritten as
//   V(a) = alpha_a V(0) + beta_a V(1),
// where (alpha, beta) obey the recurrence V(a+2) = c1 V(a+1) + c2 V(a). Words
// with all exponents in {0,1} are handed to class_search.

#ifndef FIBSKEIN_ENGINE_HPP_
#define FIBSKEIN_ENGINE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "braid.hpp"
#include "class_search.hpp"
#include "laurent.hpp"
#include "laurent2.hpp"
#include "poly_io.hpp"
#include "specialization.hpp"

namespace fibskein {

  // Raised when the class search runs out of budget and oracles are off.
  class IndeterminateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct EvalOptions {
    size_t budget          = default_search_budget;
    bool   oracle_fallback = true;
    // 0 reads FIBSKEIN_MEMO_MAX_ENTRIES from the environment; unset means
    // unbounded. When full, the memo is cleared.
    size_t max_cache_entries = 0;
  };

  struct EvalStats {
    size_t cache_hits     = 0;
    size_t cache_misses   = 0;
    size_t run_expansions = 0;
    size_t splits         = 0;
    size_t destabilized   = 0;
    size_t squares        = 0;
    size_t simple_bases   = 0;
    size_t fallbacks      = 0;
  };

  template <class Ring>
  struct RingData {
    Ring c1;
    Ring c2;
    Ring c2_inv;
    Ring delta;
    std::function<Ring(SimplePartition const&)> base;
    // Used when class_search is exhausted; may be empty.
    std::function<Ring(BraidWord const&)> fallback;
  };

  // Not thread-safe; use one evaluator per thread.
  template <class Ring>
  class Evaluator {
   public:
    Evaluator(RingData<Ring> data, EvalOptions opts = {});

    Ring evaluate(BraidWord const& w);

    // (alpha_a, beta_a) with V(a) = alpha_a V(0) + beta_a V(1).
    std::pair<Ring, Ring> const& slot_coefficients(int a);

    RingData<Ring> const& data() const noexcept {
      return _data;
    }
    EvalStats const& stats() const noexcept {
      return _stats;
    }
    size_t cache_size() const noexcept {
      return _cache.size();
    }
    void clear_cache() {
      _cache.clear();
    }

   private:
    using Runs = std::vector<std::pair<int, int>>;

    struct KeyHash {
      size_t operator()(std::vector<int> const& v) const noexcept;
    };

    Ring eval_runs(int n, Runs runs);
    Ring eval_reduced(int n, Runs const& runs);
    void remember(std::vector<int> key, Ring const& value);

    RingData<Ring>                                      _data;
    EvalOptions                                         _opts;
    EvalStats                                           _stats;
    std::unordered_map<std::vector<int>, Ring, KeyHash> _cache;
    std::map<int, std::pair<Ring, Ring>>                _slots;
  };

  extern template class Evaluator<LaurentPoly>;
  extern template class Evaluator<TwoVarLaurent>;

  RingData<TwoVarLaurent> homfly_ring();
  // Precondition: !spec.is_homfly()
  RingData<LaurentPoly> laurent_ring(Specialization const& spec);

  // Holds an evaluator for one specialization; reuse it across words to share
  // the memo.
  class InvariantEngine {
   public:
    explicit InvariantEngine(Specialization spec, EvalOptions opts = {});

    InvariantValue evaluate(BraidWord const& w);
    // Precondition: !spec().is_homfly()
    LaurentPoly evaluate_laurent(BraidWord const& w);
    // Precondition: spec().is_homfly()
    TwoVarLaurent evaluate_homfly(BraidWord const& w);

    Specialization const& spec() const noexcept {
      return _spec;
    }
    EvalStats stats() const;

   private:
    Specialization                                             _spec;
    std::variant<Evaluator<LaurentPoly>, Evaluator<TwoVarLaurent>> _eval;
  };

  InvariantValue eval_invariant(BraidWord const&      w,
                                Specialization const& spec,
                                EvalOptions           opts = {});

  // (c1, c2) with V(a+2) = c1 V(a+1) + c2 V(a).
  std::pair<InvariantValue, InvariantValue>
  recurrence_coefficients(Specialization const& spec);

  // Closed-form slot coefficient from the characteristic roots. j = 0 gives
  // the coefficient of V(0), j = 1 that of V(1). Throws for homfly.
  LaurentPoly
  expansion_coefficient(Specialization const& spec, int a, int j);

  InvariantValue simple_base_value(SimplePartition const& a,
                                   Specialization const&  spec);

  struct ExpansionTerm {
    LaurentPoly      coefficient;
    std::vector<int> corner;
    LaurentPoly      corner_value;
  };

  // 2^k terms, corners in lexicographic order.
  std::vector<ExpansionTerm> expand_template(Template const&       t,
                                             Specialization const& spec,
                                             EvalOptions           opts = {});

  LaurentPoly sum_expansion(std::vector<ExpansionTerm> const& terms);

  // Coefficients multiplying each corner value, corners in lexicographic
  // order.
  std::vector<std::pair<std::vector<int>, LaurentPoly>>
  relative_coefficients(Specialization const& spec, std::vector<int> const& ks);

  // Throws std::invalid_argument naming the first missing corner.
  LaurentPoly
  relative_expand(Specialization const&                         spec,
                  std::map<std::vector<int>, LaurentPoly> const& corners,
                  std::vector<int> const&                        ks);

  std::string corner_to_string(std::vector<int> const& corner);

}  // namespace fibskein

#endif  // FIBSKEIN_ENGINE_HPP_
