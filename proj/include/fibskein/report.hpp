#ifndef FIBSKEIN_REPORT_HPP_
#define FIBSKEIN_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace fibskein {

  // Outcome of a batch of exact checks.
  struct CheckReport {
    std::string              name;
    size_t                   checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    // Failures counted but not listed (long corpora).
    size_t unlisted_failures = 0;

    bool ok() const noexcept {
      return failures.empty() && unlisted_failures == 0;
    }
    void expect(bool cond, std::string const& what) {
      ++checked;
      if (!cond) {
        failures.push_back(what);
      }
    }
    void merge(CheckReport const& other) {
      checked += other.checked;
      failures.insert(failures.end(), other.failures.begin(), other.failures.end());
      notes.insert(notes.end(), other.notes.begin(), other.notes.end());
      unlisted_failures += other.unlisted_failures;
    }
    std::string summary() const {
      return std::to_string(checked - failures.size() - unlisted_failures) + "/"
             + std::to_string(checked) + " checks passed";
    }
    nlohmann::json to_json() const {
      return {{"name", name},
              {"status", ok() ? "pass" : "fail"},
              {"checked", checked},
              {"failures", failures},
              {"unlisted_failures", unlisted_failures},
              {"notes", notes}};
    }
  };

}  // namespace fibskein

#endif  // FIBSKEIN_REPORT_HPP_
