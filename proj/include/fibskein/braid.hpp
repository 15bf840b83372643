// Braid words on n strands, run-length templates, and simple-braid
// partitions.

#ifndef FIBSKEIN_BRAID_HPP_
#define FIBSKEIN_BRAID_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fibskein {

  class BraidError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A signed Artin word: letter e stands for x_|e|^sign(e), 1 <= |e| <= n-1.
  class BraidWord {
   public:
    BraidWord() = default;
    explicit BraidWord(int strands, std::vector<int> letters = {});

    int strands() const noexcept {
      return _strands;
    }
    std::vector<int> const& letters() const noexcept {
      return _letters;
    }
    size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    bool positive() const noexcept;
    int  writhe() const noexcept;
    // max |e| over letters, 0 for the empty word
    int max_index() const noexcept;

    friend bool operator==(BraidWord const&, BraidWord const&) = default;
    friend auto operator<=>(BraidWord const&, BraidWord const&) = default;

    // "B3: 1 2 -1"
    std::string to_string() const;

   private:
    int              _strands = 1;
    std::vector<int> _letters;
  };

  std::ostream& operator<<(std::ostream& os, BraidWord const& w);

  // Grammar: "Bn: e1 e2 ..." or caret form "x1 x2^3 x1^-1 @n".
  BraidWord parse_word(std::string_view text);

  nlohmann::json to_json(BraidWord const& w);
  BraidWord      word_from_json(nlohmann::json const& j);

  // Permutation of {0..n-1} induced by the word (x_i swaps i-1 and i).
  std::vector<int> braid_permutation(BraidWord const& w);

  // Number of components of the closure.
  int closure_components(BraidWord const& w);

  ////////////////////////////////////////////////////////////////////////
  // Templates
  ////////////////////////////////////////////////////////////////////////

  // x_{i_1}^{a_1} ... x_{i_k}^{a_k} on a fixed strand count.
  struct Template {
    int              strands = 1;
    std::vector<int> indices;
    std::vector<int> exponents;

    size_t slots() const noexcept {
      return indices.size();
    }
    BraidWord to_word() const;
    // Same indices, different exponents.
    Template with_exponents(std::vector<int> exps) const;

    // Maximal runs of equal index (not cyclic); exponents are signed sums.
    static Template from_word(BraidWord const& w);
  };

  ////////////////////////////////////////////////////////////////////////
  // Simple braids
  ////////////////////////////////////////////////////////////////////////

  // Decreasing parts a_1 >= ... >= a_r >= 2 with a_1 + ... + a_r <= strands.
  struct SimplePartition {
    std::vector<int> parts;
    int              strands = 1;

    int  total() const noexcept;  // s_r
    int  degree() const noexcept {
      return total() - static_cast<int>(parts.size());
    }
    // n - deg - 1, the exponent in the unlink formula
    int  unlink_exponent() const noexcept {
      return strands - degree() - 1;
    }
    void validate() const;

    friend bool operator==(SimplePartition const&, SimplePartition const&)
        = default;
    std::string to_string() const;
  };

  BraidWord build_simple_word(SimplePartition const& a);

  // Multiset of cycle lengths >= 2 of the word's permutation, decreasing.
  SimplePartition cycle_partition(BraidWord const& w);

  ////////////////////////////////////////////////////////////////////////
  // Word transforms
  ////////////////////////////////////////////////////////////////////////

  BraidWord mirror(BraidWord const& w);
  BraidWord reverse(BraidWord const& w);
  // Adds d to every index; the result lives on new_strands strands.
  BraidWord shift(BraidWord const& w, int d, int new_strands);
  // Removes the single occurrence of x_{n-1}^{+-1}.
  BraidWord destabilize(BraidWord const& w);
  // Appends x_n^{sign} on one extra strand.
  BraidWord stabilize(BraidWord const& w, int sign);
  // Word whose closure is the connected sum of the two closures.
  BraidWord concat(BraidWord const& a, BraidWord const& b);
  // Word whose closure is the distant union of the two closures.
  BraidWord distant_union(BraidWord const& a, BraidWord const& b);

}  // namespace fibskein

#endif  // FIBSKEIN_BRAID_HPP_
