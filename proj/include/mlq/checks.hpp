#ifndef MLQ_CHECKS_HPP
#define MLQ_CHECKS_HPP

#include <map>
#include <string>
#include <vector>

namespace mlq {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct CheckReport {
  std::string name;    // dotted identifier, e.g. "coulomb.starlet"
  std::string params;  // canonical parameter text, e.g. "r=2" or "r=2 k=1"
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // nonempty explanation on failure (or skip reason)
  std::map<std::string, std::string> derived;  // computed constants worth reporting
  double wall_ms = 0.0;
};

// Frozen derived constants, one file per key under a directory.  With an
// empty directory nothing is enforced; in bless mode expect() writes the
// value instead of comparing.
class GoldenStore {
 public:
  GoldenStore() = default;
  GoldenStore(std::string dir, bool bless);

  bool enabled() const { return !dir_.empty(); }
  // Empty string when the stored value matches (or was just blessed, or the
  // store is disabled); a witness otherwise.
  std::string expect(const std::string& key, const std::string& value) const;

 private:
  std::string dir_;
  bool bless_ = false;
};

struct SuiteConfig {
  int r_lo = 2;
  int r_hi = 3;
  int truncate = 40;                   // series cap for the enumeration checks
  bool flavored = true;                // include the deformed-side checks
  std::vector<std::string> selectors;  // empty selects everything
  bool negative_controls = false;      // run the control.* family instead
  std::string golden_dir;
  bool bless = false;
  int jobs = 1;
};

// Dotted names of every check the registry can produce (controls included).
std::vector<std::string> available_checks();

// A selector hits a name when it equals it, is a dotted prefix of it, or
// equals one of its dot-separated segments.
bool selector_matches(const std::string& selector, const std::string& name);

// Build, filter, execute and sort.  Throws DomainError on an invalid
// configuration or a selector that matches nothing.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace mlq

#endif  // MLQ_CHECKS_HPP
