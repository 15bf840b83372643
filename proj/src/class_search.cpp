#include "fibskein/class_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <unordered_map>

namespace fibskein {

  std::string to_string(OutcomeKind k) {
    switch (k) {
      case OutcomeKind::splittable:
        return "Splittable";
      case OutcomeKind::destabilizable:
        return "Destabilizable";
      case OutcomeKind::square_found:
        return "SquareFound";
      case OutcomeKind::distinct_letters:
        return "DistinctLetters";
      case OutcomeKind::exhausted:
        return "Exhausted";
    }
    return "?";
  }

  std::vector<int> min_rotation(std::vector<int> const& letters) {
    size_t const L = letters.size();
    if (L < 2) {
      return letters;
    }
    size_t best = 0;
    for (size_t r = 1; r < L; ++r) {
      for (size_t k = 0; k < L; ++k) {
        int a = letters[(r + k) % L];
        int b = letters[(best + k) % L];
        if (a != b) {
          if (a < b) {
            best = r;
          }
          break;
        }
      }
    }
    std::vector<int> out(L);
    for (size_t k = 0; k < L; ++k) {
      out[k] = letters[(best + k) % L];
    }
    return out;
  }

  namespace {
    struct VectorHash {
      size_t operator()(std::vector<int> const& v) const noexcept {
        size_t h = v.size();
        for (int x : v) {
          h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6U)
               + (h >> 2U);
        }
        return h;
      }
    };

    struct Node {
      std::vector<int> word;
      long             parent;
      std::string      move;
    };

    // Visitor returns true to stop; the search then reports the stopping
    // node index.
    struct SearchResult {
      std::vector<Node> nodes;
      std::optional<size_t> hit;
      bool              budget_hit = false;
    };

    SearchResult
    bfs(std::vector<int> const&                             start,
        size_t                                              budget,
        std::function<bool(std::vector<int> const&)> const& visit) {
      SearchResult                                        res;
      std::unordered_map<std::vector<int>, size_t, VectorHash> seen;
      std::deque<size_t>                                  queue;

      auto push = [&](std::vector<int> w, long parent, std::string move) {
        auto canon = min_rotation(w);
        if (seen.contains(canon)) {
          return;
        }
        seen.emplace(canon, res.nodes.size());
        queue.push_back(res.nodes.size());
        res.nodes.push_back({std::move(canon), parent, std::move(move)});
      };

      push(start, -1, "");
      while (!queue.empty()) {
        size_t id = queue.front();
        queue.pop_front();
        if (visit(res.nodes[id].word)) {
          res.hit = id;
          return res;
        }
        if (res.nodes.size() >= budget) {
          res.budget_hit = true;
          continue;
        }
        std::vector<int> const w = res.nodes[id].word;
        size_t const           L = w.size();
        for (size_t p = 0; p < L && L >= 2; ++p) {
          size_t q = (p + 1) % L;
          if (std::abs(w[p] - w[q]) >= 2) {
            auto v = w;
            std::swap(v[p], v[q]);
            push(std::move(v), static_cast<long>(id), "commute " + std::to_string(p));
          }
          if (L >= 3) {
            size_t r = (p + 2) % L;
            if (w[p] == w[r] && std::abs(w[p] - w[q]) == 1) {
              auto v = w;
              v[p]   = w[q];
              v[q]   = w[p];
              v[r]   = w[q];
              push(std::move(v), static_cast<long>(id), "braid " + std::to_string(p));
            }
          }
        }
      }
      return res;
    }

    std::vector<std::string> path_to(SearchResult const& res, size_t id) {
      std::vector<std::string> moves;
      for (long k = static_cast<long>(id); k > 0;
           k      = res.nodes[static_cast<size_t>(k)].parent) {
        moves.push_back(res.nodes[static_cast<size_t>(k)].move);
        moves.push_back("rotate");
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    }

    void require_positive(BraidWord const& w) {
      if (!w.positive()) {
        throw BraidError("class search needs a positive word, got "
                         + w.to_string());
      }
    }

    std::optional<size_t> cyclic_square(std::vector<int> const& w) {
      size_t const L = w.size();
      if (L < 2) {
        return std::nullopt;
      }
      for (size_t p = 0; p < L; ++p) {
        if (w[p] == w[(p + 1) % L]) {
          return p;
        }
      }
      return std::nullopt;
    }

    bool all_distinct(std::vector<int> const& w) {
      auto v = w;
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    }
  }  // namespace

  RewriteOutcome class_search(BraidWord const& w, size_t budget) {
    require_positive(w);
    int const      n = w.strands();
    RewriteOutcome out;

    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    for (int e : w.letters()) {
      used[static_cast<size_t>(e)] = true;
    }
    for (int j = 1; j <= n - 1; ++j) {
      if (used[static_cast<size_t>(j)]) {
        continue;
      }
      std::vector<int> left, right;
      for (int e : w.letters()) {
        (e < j ? left : right).push_back(e < j ? e : e - j);
      }
      out.kind  = OutcomeKind::splittable;
      out.left  = BraidWord(j, std::move(left));
      out.right = BraidWord(n - j, std::move(right));
      for (int p = 1; p <= n; ++p) {
        bool below = p - 1 >= 1 && used[static_cast<size_t>(p - 1)];
        bool above = p <= n - 1 && used[static_cast<size_t>(p)];
        out.unknot_count += (!below && !above) ? 1 : 0;
      }
      out.witness = w;
      return out;
    }

    auto top_once = [n](std::vector<int> const& v, int index) {
      return std::count(v.begin(), v.end(), index) == 1;
    };

    auto res = bfs(w.letters(), budget, [&](std::vector<int> const& v) {
      if (n >= 2 && (top_once(v, n - 1) || top_once(v, 1))) {
        return true;
      }
      return cyclic_square(v).has_value() || all_distinct(v);
    });
    out.explored = res.nodes.size();
    if (!res.hit) {
      out.kind       = OutcomeKind::exhausted;
      out.budget_hit = res.budget_hit;
      return out;
    }
    auto const& v = res.nodes[*res.hit].word;
    out.moves     = path_to(res, *res.hit);
    if (n >= 2 && top_once(v, n - 1)) {
      out.kind    = OutcomeKind::destabilizable;
      out.witness = BraidWord(n, v);
    } else if (n >= 2 && top_once(v, 1)) {
      // conjugation by the half twist: x_i -> x_{n-i}
      std::vector<int> flipped(v);
      for (int& e : flipped) {
        e = n - e;
      }
      out.kind    = OutcomeKind::destabilizable;
      out.witness = BraidWord(n, std::move(flipped));
      out.moves.emplace_back("flip");
    } else if (auto p = cyclic_square(v)) {
      out.kind            = OutcomeKind::square_found;
      out.witness         = BraidWord(n, v);
      out.square_position = *p;
    } else {
      out.kind    = OutcomeKind::distinct_letters;
      out.witness = BraidWord(n, v);
    }
    return out;
  }

  std::vector<BraidWord> explore_class(BraidWord const& w, size_t budget) {
    require_positive(w);
    auto res = bfs(w.letters(), budget, [](auto const&) { return false; });
    std::vector<BraidWord> out;
    out.reserve(res.nodes.size());
    for (auto const& node : res.nodes) {
      out.emplace_back(w.strands(), node.word);
    }
    return out;
  }

  SimplicityResult is_simple(BraidWord const& w, size_t budget) {
    require_positive(w);
    SimplicityResult out;
    auto res = bfs(w.letters(), budget, [](std::vector<int> const& v) {
      return cyclic_square(v).has_value() || all_distinct(v);
    });
    out.explored = res.nodes.size();
    if (!res.hit) {
      return out;
    }
    auto const& v = res.nodes[*res.hit].word;
    out.witness   = BraidWord(w.strands(), v);
    if (cyclic_square(v)) {
      out.status = SimplicityResult::Status::not_simple;
    } else {
      out.status    = SimplicityResult::Status::simple;
      out.partition = cycle_partition(w);
    }
    return out;
  }

}  // namespace fibskein
