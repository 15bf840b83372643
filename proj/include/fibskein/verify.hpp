// Named verification checks and the v1 manifest format.
//
// Manifest:
//   {"version": "v1",
//    "entries": [
//      {"id": "nabla-4", "word": "B3: 1 2 1 2", "spec": "alexander",
//       "expected": <polynomial JSON> | "expected_text": "s^-2 - 1 + s^2"},
//      {"id": "ekt", "check": "ekt-coefficients", "params": {...}}]}

#ifndef FIBSKEIN_VERIFY_HPP_
#define FIBSKEIN_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "braid.hpp"
#include "report.hpp"

namespace fibskein {

  inline constexpr std::uint64_t default_seed = 20110613;

  class ManifestError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  std::vector<std::string> check_names();

  // Throws ManifestError for an unknown name.
  CheckReport run_named_check(std::string const&    name,
                              nlohmann::json const& params = nlohmann::json::object(),
                              std::uint64_t         seed   = default_seed);

  struct ManifestEntry {
    std::string                   id;
    std::optional<std::string>    word;
    nlohmann::json                spec = "homfly";
    std::optional<nlohmann::json> expected;
    std::optional<std::string>    expected_text;
    std::optional<std::string>    check;
    nlohmann::json                params = nlohmann::json::object();
  };

  struct Manifest {
    std::vector<ManifestEntry> entries;

    // Throws ManifestError on schema violations, naming the entry.
    static Manifest from_json(nlohmann::json const& j);
    static Manifest load(std::string const& path);
  };

  struct VerifyReport {
    std::vector<CheckReport> results;  // sorted by name (entry id)

    bool ok() const;
    nlohmann::json to_json() const;
  };

  VerifyReport run_manifest(Manifest const& m, std::uint64_t seed = default_seed);

  // All words with at most max_len letters over B_n, shortest first.
  std::vector<BraidWord> all_words(int strands, int max_len);

  // Uniform letters from +-{1..n-1}; positive_only restricts the sign.
  BraidWord random_word(std::mt19937_64& rng, int strands, int length,
                        bool positive_only = false);

  // Words used alongside the exhaustive corpus: the named worked examples.
  std::vector<BraidWord> named_examples();

  struct AgreementOptions {
    int              max_len = 6;
    std::vector<int> strands = {2, 3, 4};
    bool             include_named = true;
    // Called every 5000 words with (done, total).
    std::function<void(size_t, size_t)> progress;
  };
  CheckReport oracle_agreement(AgreementOptions const& opts);

}  // namespace fibskein

#endif  // FIBSKEIN_VERIFY_HPP_
