#include "halving/metrics.hpp"

#include <string>

namespace halving::metrics {

std::vector<CountsRow> counts(unsigned i_max) {
  std::vector<CountsRow> rows;
  rows.push_back({0, 1, 2, 1});
  Integer m_prev2 = 1;  // m_{-1}
  for (unsigned i = 1; i <= i_max; ++i) {
    const CountsRow& prev = rows.back();
    CountsRow row;
    row.index = i;
    row.a = ipow(Integer(2), i);
    row.m = (2 * row.a + 1) * prev.m;
    row.n = row.a * prev.n + prev.m + m_prev2;
    m_prev2 = prev.m;
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Compare lhs_coeff * 2^(num/2) against rhs, exactly, for integer num >= 0.
// Returns sign(lhs - rhs).
int compare_half_power(const Scalar& coeff, unsigned long num, const Scalar& rhs) {
  if (num % 2 == 0) return cmp(coeff * Scalar(ipow(Integer(2), num / 2)), rhs);
  // Both sides are positive here, so comparing squares preserves order.
  Scalar lhs_sq = coeff * coeff * Scalar(ipow(Integer(2), num));
  return cmp(lhs_sq, rhs * rhs);
}

}  // namespace

VerificationReport check_bounds(const std::vector<CountsRow>& table) {
  VerificationReport report("counting bounds for m_i and n_i");
  const Scalar e_squared_lower = make_scalar(271 * 271, 100 * 100);
  report.metrics["e_squared_bound"] = "271^2/100^2 (lower bound for e^2)";
  for (const auto& row : table) {
    const unsigned long i = row.index;
    const unsigned long em = i * i + 3 * i;  // exponent numerator for m
    const unsigned long en = i * i + i;      // exponent numerator for n
    const Scalar m(row.m), n(row.n);
    const std::string tag = "i=" + std::to_string(i);
    report.check(compare_half_power(make_scalar(1, 3), em, m) < 0, tag + ": m_i lower bound");
    report.check(compare_half_power(e_squared_lower / 3, em, m) > 0,
                 tag + ": m_i upper bound");
    report.check(compare_half_power(1, en, n) < 0, tag + ": n_i lower bound");
    report.check(compare_half_power(Scalar(4 * (i + 1)), en, n) > 0, tag + ": n_i upper bound");
  }
  return report;
}

bool block_intervals_overlap(unsigned i) {
  auto table = counts(i + 1);
  const Integer& ni = table[i].n;
  const Integer& nj = table[i + 1].n;
  return (2 * ipow(ni, 10) + 1) * ni > (2 * ipow(nj, 9) + 1) * nj;
}

}  // namespace halving::metrics
