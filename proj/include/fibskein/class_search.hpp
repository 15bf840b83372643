// Breadth-first exploration of the closure-equivalence class of a positive
// word under cyclic rotation, far commutation and the braid relation.
//
// The explored class is a subset of the positive conjugacy class; callers
// must treat an Exhausted outcome as "unknown", never as "no square".

#ifndef FIBSKEIN_CLASS_SEARCH_HPP_
#define FIBSKEIN_CLASS_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"

namespace fibskein {

  inline constexpr size_t default_search_budget = 100'000;

  enum class OutcomeKind {
    splittable,
    destabilizable,
    square_found,
    distinct_letters,
    exhausted
  };

  std::string to_string(OutcomeKind k);

  struct RewriteOutcome {
    OutcomeKind kind = OutcomeKind::exhausted;
    // destabilizable: x_{n-1} occurs once; square_found: letters at
    // square_position and square_position + 1 (cyclically) are equal;
    // distinct_letters: no index repeats.
    BraidWord witness;
    size_t    square_position = 0;
    // splittable: closure is the distant union of the closures of left and
    // right; unknot_count strands carry no crossing at all.
    BraidWord left;
    BraidWord right;
    int       unknot_count = 0;
    // Moves from the input to the witness, e.g. "rotate 2", "commute 3",
    // "braid 0", "flip".
    std::vector<std::string> moves;
    size_t                   explored = 0;
    // exhausted: true if the budget stopped the search, false if the
    // reachable class was closed without an outcome.
    bool budget_hit = false;
  };

  // Precondition: w positive. Throws BraidError otherwise.
  RewriteOutcome class_search(BraidWord const& w,
                              size_t           budget = default_search_budget);

  // All words reached (one representative per rotation class), in BFS order.
  std::vector<BraidWord> explore_class(BraidWord const& w,
                                       size_t budget = default_search_budget);

  // Lexicographically minimal rotation of a letter sequence.
  std::vector<int> min_rotation(std::vector<int> const& letters);

  struct SimplicityResult {
    enum class Status { simple, not_simple, indeterminate };
    Status                         status = Status::indeterminate;
    std::optional<SimplePartition> partition;
    BraidWord                      witness;
    size_t                         explored = 0;
  };

  // Simple iff some reachable word has no repeated index; not simple if some
  // reachable word has a (cyclic) square.
  SimplicityResult is_simple(BraidWord const& w,
                             size_t           budget = default_search_budget);

}  // namespace fibskein

#endif  // FIBSKEIN_CLASS_SEARCH_HPP_
