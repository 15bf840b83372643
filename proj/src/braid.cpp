#include "fibskein/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fibskein {

  namespace {
    void check_letter(int e, int strands, std::string const& token) {
      if (e == 0) {
        throw BraidError("zero letter in token \"" + token + "\"");
      }
      if (std::abs(e) > strands - 1) {
        throw BraidError("generator index out of range in token \"" + token
                         + "\" (need 1 <= |e| <= "
                         + std::to_string(strands - 1) + ")");
      }
    }

    bool to_int(std::string_view s, int& out) {
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
    }

    std::vector<std::string> split_ws(std::string_view text) {
      std::istringstream       in{std::string(text)};
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }
  }  // namespace

  BraidWord::BraidWord(int strands, std::vector<int> letters)
      : _strands(strands), _letters(std::move(letters)) {
    if (strands < 1) {
      throw BraidError("strand count must be >= 1, found "
                       + std::to_string(strands));
    }
    for (int e : _letters) {
      check_letter(e, strands, std::to_string(e));
    }
  }

  bool BraidWord::positive() const noexcept {
    return std::all_of(
        _letters.begin(), _letters.end(), [](int e) { return e > 0; });
  }

  int BraidWord::writhe() const noexcept {
    int w = 0;
    for (int e : _letters) {
      w += e > 0 ? 1 : -1;
    }
    return w;
  }

  int BraidWord::max_index() const noexcept {
    int m = 0;
    for (int e : _letters) {
      m = std::max(m, std::abs(e));
    }
    return m;
  }

  std::string BraidWord::to_string() const {
    std::string out = "B" + std::to_string(_strands) + ":";
    for (int e : _letters) {
      out += " " + std::to_string(e);
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, BraidWord const& w) {
    return os << w.to_string();
  }

  BraidWord parse_word(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
      throw BraidError("empty braid word text");
    }
    text.remove_prefix(first);
    if (text.front() == 'B') {
      auto colon = text.find(':');
      if (colon == std::string_view::npos) {
        throw BraidError("missing ':' after strand count in \""
                         + std::string(text) + "\"");
      }
      int         n;
      std::string head(text.substr(1, colon - 1));
      if (!to_int(head, n) || n < 1) {
        throw BraidError("malformed strand count in token \"B" + head + ":\"");
      }
      std::vector<int> letters;
      for (auto const& tok : split_ws(text.substr(colon + 1))) {
        int e;
        if (!to_int(tok, e)) {
          throw BraidError("malformed letter token \"" + tok + "\"");
        }
        check_letter(e, n, tok);
        letters.push_back(e);
      }
      return BraidWord(n, std::move(letters));
    }
    // caret form
    std::vector<int> letters;
    int              strands = -1;
    for (auto const& tok : split_ws(text)) {
      if (tok.front() == '@') {
        if (!to_int(std::string_view(tok).substr(1), strands) || strands < 1) {
          throw BraidError("malformed strand token \"" + tok + "\"");
        }
        continue;
      }
      if (tok.front() != 'x') {
        throw BraidError("malformed token \"" + tok + "\"");
      }
      std::string_view body  = std::string_view(tok).substr(1);
      auto             caret = body.find('^');
      int              index, exp = 1;
      if (!to_int(body.substr(0, caret), index) || index < 1) {
        throw BraidError("malformed generator token \"" + tok + "\"");
      }
      if (caret != std::string_view::npos
          && !to_int(body.substr(caret + 1), exp)) {
        throw BraidError("malformed exponent in token \"" + tok + "\"");
      }
      for (int k = 0; k < std::abs(exp); ++k) {
        letters.push_back(exp > 0 ? index : -index);
      }
    }
    if (strands < 0) {
      int m = 0;
      for (int e : letters) {
        m = std::max(m, std::abs(e));
      }
      strands = m + 1;
    }
    for (int e : letters) {
      check_letter(e, strands, "x" + std::to_string(std::abs(e)));
    }
    return BraidWord(strands, std::move(letters));
  }

  nlohmann::json to_json(BraidWord const& w) {
    return {{"strands", w.strands()}, {"letters", w.letters()}};
  }

  BraidWord word_from_json(nlohmann::json const& j) {
    return BraidWord(j.at("strands").get<int>(),
                     j.at("letters").get<std::vector<int>>());
  }

  std::vector<int> braid_permutation(BraidWord const& w) {
    // perm[p] = where the strand starting at position p ends up
    std::vector<int> pos(w.strands());
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> strand_at = pos;
    for (int e : w.letters()) {
      int i = std::abs(e) - 1;
      std::swap(strand_at[i], strand_at[i + 1]);
    }
    std::vector<int> perm(w.strands());
    for (int p = 0; p < w.strands(); ++p) {
      perm[strand_at[p]] = p;
    }
    return perm;
  }

  namespace {
    std::vector<int> cycle_lengths(std::vector<int> const& perm) {
      std::vector<bool> seen(perm.size(), false);
      std::vector<int>  out;
      for (size_t p = 0; p < perm.size(); ++p) {
        if (seen[p]) {
          continue;
        }
        int    len = 0;
        size_t q   = p;
        while (!seen[q]) {
          seen[q] = true;
          q       = static_cast<size_t>(perm[q]);
          ++len;
        }
        out.push_back(len);
      }
      return out;
    }
  }  // namespace

  int closure_components(BraidWord const& w) {
    return static_cast<int>(cycle_lengths(braid_permutation(w)).size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Template
  ////////////////////////////////////////////////////////////////////////

  BraidWord Template::to_word() const {
    if (indices.size() != exponents.size()) {
      throw BraidError("template indices and exponents differ in length");
    }
    std::vector<int> letters;
    for (size_t j = 0; j < indices.size(); ++j) {
      int a = exponents[j];
      for (int k = 0; k < std::abs(a); ++k) {
        letters.push_back(a > 0 ? indices[j] : -indices[j]);
      }
    }
    return BraidWord(strands, std::move(letters));
  }

  Template Template::with_exponents(std::vector<int> exps) const {
    if (exps.size() != indices.size()) {
      throw BraidError("exponent vector has " + std::to_string(exps.size())
                       + " entries, template has "
                       + std::to_string(indices.size()) + " slots");
    }
    return Template{strands, indices, std::move(exps)};
  }

  Template Template::from_word(BraidWord const& w) {
    Template t{w.strands(), {}, {}};
    for (int e : w.letters()) {
      int i = std::abs(e);
      int s = e > 0 ? 1 : -1;
      if (!t.indices.empty() && t.indices.back() == i) {
        t.exponents.back() += s;
      } else {
        t.indices.push_back(i);
        t.exponents.push_back(s);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Simple partitions
  ////////////////////////////////////////////////////////////////////////

  int SimplePartition::total() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), 0);
  }

  void SimplePartition::validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 2) {
        throw BraidError("partition parts must be >= 2 in "
                         + to_string());
      }
      if (i > 0 && parts[i] > parts[i - 1]) {
        throw BraidError("partition must be decreasing: " + to_string());
      }
    }
    if (total() > strands) {
      throw BraidError("invalid partition " + to_string() + ": s_r = "
                       + std::to_string(total()) + " exceeds n = "
                       + std::to_string(strands));
    }
  }

  std::string SimplePartition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      out += (i ? "," : "") + std::to_string(parts[i]);
    }
    return out + ")";
  }

  BraidWord build_simple_word(SimplePartition const& a) {
    a.validate();
    std::vector<int> letters;
    int              start = 1;
    for (int part : a.parts) {
      for (int i = start; i < start + part - 1; ++i) {
        letters.push_back(i);
      }
      start += part;
    }
    return BraidWord(a.strands, std::move(letters));
  }

  SimplePartition cycle_partition(BraidWord const& w) {
    SimplePartition a{{}, w.strands()};
    for (int len : cycle_lengths(braid_permutation(w))) {
      if (len >= 2) {
        a.parts.push_back(len);
      }
    }
    std::sort(a.parts.rbegin(), a.parts.rend());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transforms
  ////////////////////////////////////////////////////////////////////////

  BraidWord mirror(BraidWord const& w) {
    std::vector<int> letters = w.letters();
    for (int& e : letters) {
      e = -e;
    }
    return BraidWord(w.strands(), std::move(letters));
  }

  BraidWord reverse(BraidWord const& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    return BraidWord(w.strands(), std::move(letters));
  }

  BraidWord shift(BraidWord const& w, int d, int new_strands) {
    bool underflow = std::any_of(w.letters().begin(),
                                 w.letters().end(),
                                 [d](int e) { return std::abs(e) + d < 1; });
    if (w.max_index() + d > new_strands - 1 || underflow) {
      throw BraidError("shift by " + std::to_string(d) + " overflows B"
                       + std::to_string(new_strands) + " for "
                       + w.to_string());
    }
    std::vector<int> letters = w.letters();
    for (int& e : letters) {
      e = e > 0 ? e + d : e - d;
    }
    return BraidWord(new_strands, std::move(letters));
  }

  BraidWord destabilize(BraidWord const& w) {
    int const top   = w.strands() - 1;
    auto      count = std::count_if(w.letters().begin(),
                               w.letters().end(),
                               [top](int e) { return std::abs(e) == top; });
    if (top < 1 || count != 1) {
      throw BraidError("cannot destabilize " + w.to_string()
                       + ": x_{n-1} must occur exactly once");
    }
    std::vector<int> letters;
    for (int e : w.letters()) {
      if (std::abs(e) != top) {
        letters.push_back(e);
      }
    }
    return BraidWord(w.strands() - 1, std::move(letters));
  }

  BraidWord stabilize(BraidWord const& w, int sign) {
    std::vector<int> letters = w.letters();
    letters.push_back(sign > 0 ? w.strands() : -w.strands());
    return BraidWord(w.strands() + 1, std::move(letters));
  }

  BraidWord concat(BraidWord const& a, BraidWord const& b) {
    int       n       = a.strands() + b.strands() - 1;
    BraidWord shifted = shift(b, a.strands() - 1, n);
    std::vector<int> letters = a.letters();
    letters.insert(
        letters.end(), shifted.letters().begin(), shifted.letters().end());
    return BraidWord(n, std::move(letters));
  }

  BraidWord distant_union(BraidWord const& a, BraidWord const& b) {
    int       n       = a.strands() + b.strands();
    BraidWord shifted = shift(b, a.strands(), n);
    std::vector<int> letters = a.letters();
    letters.insert(
        letters.end(), shifted.letters().begin(), shifted.letters().end());
    return BraidWord(n, std::move(letters));
  }

}  // namespace fibskein
