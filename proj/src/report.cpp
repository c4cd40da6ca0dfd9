#include "halving/report.hpp"

#include <sstream>

namespace halving {

void VerificationReport::check(bool ok, const std::string& witness_if_failed) {
  ++checked;
  if (!ok) fail(witness_if_failed);
}

void VerificationReport::fail(const std::string& witness) {
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  violations += other.violations;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
  for (const auto& [k, v] : other.metrics) metrics[k] = v;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << " " << claim << ": checked=" << checked
     << " violations=" << violations;
  for (const auto& [k, v] : metrics) os << " " << k << "=" << v;
  for (const auto& w : witnesses) os << "\n  witness: " << w;
  for (const auto& n : notes) os << "\n  note: " << n;
  return os.str();
}

}  // namespace halving
