#pragma once

#include <vector>

#include "halving/exact.hpp"
#include "halving/report.hpp"

namespace halving::metrics {

struct CountsRow {
  unsigned index = 0;
  Integer a;  // arithmetic-progression length factor, 2^i (1 at i = 0)
  Integer n;  // points in S_i
  Integer m;  // halving segments in H_i
};

/// Rows 0..i_max of
///   m_i = (2 a_i + 1) m_{i-1},   n_i = a_i n_{i-1} + m_{i-1} + m_{i-2},
/// with n_0 = 2, m_0 = 1 and m_{-1} = 1.
std::vector<CountsRow> counts(unsigned i_max);

/// Checks, for every row,
///   (1/3) 2^{(i^2+3i)/2} < m_i < (e^2/3) 2^{(i^2+3i)/2}
///   2^{(i^2+i)/2} < n_i < 4 (i+1) 2^{(i^2+i)/2}
/// in integer arithmetic. e^2 is replaced by the rational lower bound
/// 2.71^2 < e^2, so a passing upper check implies the true one. Odd
/// exponent numerators would be handled by squaring both sides.
VerificationReport check_bounds(const std::vector<CountsRow>& table);

/// (2 n_i^10 + 1) n_i > (2 n_{i+1}^9 + 1) n_{i+1}: consecutive block-count
/// intervals overlap. False at small levels; true from i = 20 on.
bool block_intervals_overlap(unsigned i);

}  // namespace halving::metrics
