#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace halving {

/// Outcome of one verifier: how many items were checked, how many failed,
/// and a bounded list of human-readable witnesses for the failures.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 32;

  std::string claim;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;
  std::map<std::string, std::string> metrics;
  std::vector<std::string> notes;

  explicit VerificationReport(std::string claim_name = {}) : claim(std::move(claim_name)) {}

  bool passed() const { return violations == 0; }

  void check(bool ok, const std::string& witness_if_failed);
  void fail(const std::string& witness);
  void merge(const VerificationReport& other);

  std::string summary() const;
};

}  // namespace halving
