#pragma once
// Test-only reference counters. Coordinates are cleared of denominators per
// axis and every sign test is an integer determinant; nothing here calls the
// library's predicates.

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "halving/exact.hpp"

namespace ref {

using Z = mpz_class;
using Row = std::vector<Z>;

inline std::vector<Row> integerize(const std::vector<halving::Point>& pts) {
  if (pts.empty()) return {};
  const std::size_t d = pts[0].dimension();
  std::vector<Z> l(d, 1);
  for (const auto& p : pts)
    for (std::size_t j = 0; j < d; ++j) mpz_lcm(l[j].get_mpz_t(), l[j].get_mpz_t(), p[j].get_den_mpz_t());
  std::vector<Row> out;
  for (const auto& p : pts) {
    Row r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = p[j].get_num() * (l[j] / p[j].get_den());
    out.push_back(r);
  }
  return out;
}

inline int sgn(const Z& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

// Gaussian-free cofactor determinant, fine for d <= 4.
inline Z det(std::vector<Row> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Z s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Row> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Row row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Z t = m[0][c] * det(minor);
    s += (c % 2 ? -t : t);
  }
  return s;
}

// Side of q relative to the hyperplane through `def` (d points in R^d).
inline int side(const std::vector<Row>& def, const Row& q) {
  std::vector<Row> m;
  for (std::size_t i = 1; i < def.size(); ++i) {
    Row r;
    for (std::size_t j = 0; j < q.size(); ++j) r.push_back(def[i][j] - def[0][j]);
    m.push_back(r);
  }
  Row r;
  for (std::size_t j = 0; j < q.size(); ++j) r.push_back(q[j] - def[0][j]);
  m.push_back(r);
  return sgn(det(m));
}

// Halving tuples (sorted) of the set, d = dimension. Tuples with an extra
// incident point are not halving.
inline std::set<std::vector<std::size_t>> halving_tuples(const std::vector<halving::Point>& pts) {
  auto z = integerize(pts);
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = z.size();
  if (n == 0) return out;
  const std::size_t d = z[0].size();
  std::vector<std::size_t> idx(d);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == d) {
      std::vector<Row> def;
      for (auto i : idx) def.push_back(z[i]);
      long pos_side = 0, neg_side = 0, on = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
        int s = side(def, z[k]);
        (s > 0 ? pos_side : s < 0 ? neg_side : on)++;
      }
      if (on == 0 && pos_side == neg_side) out.insert(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline bool tuple_halving(const std::vector<halving::Point>& pts, std::vector<std::size_t> t) {
  auto z = integerize(pts);
  std::vector<Row> def;
  for (auto i : t) def.push_back(z[i]);
  long a = 0, b = 0, on = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (std::find(t.begin(), t.end(), k) != t.end()) continue;
    int s = side(def, z[k]);
    (s > 0 ? a : s < 0 ? b : on)++;
  }
  return on == 0 && a == b;
}

}  // namespace ref

namespace ref {

// Number of claimed tuples that fail the reference test; integerizes once.
inline std::size_t failing_claims(const std::vector<halving::Point>& pts,
                                  const std::vector<std::vector<std::size_t>>& claims) {
  auto z = integerize(pts);
  std::size_t bad = 0;
  for (const auto& t : claims) {
    std::vector<Row> def;
    for (auto i : t) def.push_back(z[i]);
    long a = 0, b = 0, on = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (std::find(t.begin(), t.end(), k) != t.end()) continue;
      int s = side(def, z[k]);
      (s > 0 ? a : s < 0 ? b : on)++;
    }
    if (on != 0 || a != b) ++bad;
  }
  return bad;
}

}  // namespace ref
