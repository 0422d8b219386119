#pragma once

#include <string>
#include <vector>

namespace nilmassey {

struct Violation {
  std::string check;    // which law failed
  std::string witness;  // where, e.g. "g=1 h=3"
};

/// Outcome of a validator. Validators never throw for bad input; they list
/// every failed check (capped) with a witness.
class ValidationReport {
 public:
  static constexpr std::size_t kMaxViolations = 32;

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t total() const { return total_; }

  void fail(std::string check, std::string witness);
  void merge(const ValidationReport& other);
  /// First violation as "check at witness", or "ok".
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
  std::size_t total_ = 0;
};

}  // namespace nilmassey
