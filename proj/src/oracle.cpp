#include "halving/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace halving::oracle {

namespace {

constexpr std::size_t kMaxDegeneracyWitnesses = 16;

using IntPoint = std::vector<Integer>;

// Scale each axis by the lcm of its denominators. A positive per-axis scaling
// preserves every orientation sign, so the oracles can work on integers.
std::vector<IntPoint> to_integer_coordinates(std::span<const Point> points, std::size_t d) {
  std::vector<Integer> lcm(d, 1);
  for (const auto& p : points) {
    require_dimension(p, d, "oracle input");
    for (std::size_t j = 0; j < d; ++j) {
      mpz_lcm(lcm[j].get_mpz_t(), lcm[j].get_mpz_t(), p[j].get_den_mpz_t());
    }
  }
  std::vector<IntPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    IntPoint q(d);
    for (std::size_t j = 0; j < d; ++j) q[j] = p[j].get_num() * (lcm[j] / p[j].get_den());
    out.push_back(std::move(q));
  }
  return out;
}

Integer int_determinant(std::vector<std::vector<Integer>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

// Cofactor normal of the hyperplane through d integer points; see
// hyperplane_normal in the kernel for the sign convention.
std::vector<Integer> int_normal(const std::vector<const IntPoint*>& defining) {
  const std::size_t d = defining.size();
  std::vector<std::vector<Integer>> rows(d - 1, std::vector<Integer>(d));
  for (std::size_t k = 1; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) rows[k - 1][j] = (*defining[k])[j] - (*defining[0])[j];
  }
  std::vector<Integer> normal(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Integer>> minor(d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) minor[r].push_back(rows[r][c]);
      }
    }
    Integer cof = int_determinant(std::move(minor));
    normal[j] = ((d - 1 + j) % 2 == 0) ? cof : Integer(-cof);
  }
  return normal;
}

struct Accumulator {
  std::vector<std::pair<IndexTuple, SideCounts>> halving;
  std::size_t degenerate = 0;
  std::vector<IndexTuple> witnesses;

  void degeneracy(IndexTuple w, std::size_t count = 1) {
    degenerate += count;
    if (witnesses.size() < kMaxDegeneracyWitnesses) witnesses.push_back(std::move(w));
  }
};

OracleResult finish(std::vector<Accumulator>& parts) {
  OracleResult r;
  std::vector<std::pair<IndexTuple, SideCounts>> all;
  for (auto& p : parts) {
    all.insert(all.end(), p.halving.begin(), p.halving.end());
    r.degenerate_incidences += p.degenerate;
    for (auto& w : p.witnesses) {
      if (r.degeneracy_witnesses.size() < kMaxDegeneracyWitnesses) r.degeneracy_witnesses.push_back(w);
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [t, s] : all) {
    r.halving_pairs.push_back(t);
    r.side_counts.push_back(s);
  }
  r.halving_count = r.halving_pairs.size();
  return r;
}

// Run body(first_index, accumulator) for first_index in [0, n) across workers
// with a static interleaved split; results merge deterministically.
template <class Body>
std::vector<Accumulator> fan_out(std::size_t n, Body body) {
  unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  std::vector<Accumulator> parts(workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i, parts[0]);
    return parts;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  return parts;
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("HALVING_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

OracleResult count_halving_lines_naive(std::span<const Point> points) {
  const std::size_t n = points.size();
  auto P = to_integer_coordinates(points, 2);
  auto parts = fan_out(n, [&](std::size_t i, Accumulator& acc) {
    Integer a, b, c, s;
    for (std::size_t j = i + 1; j < n; ++j) {
      a = P[j][0] - P[i][0];
      b = P[j][1] - P[i][1];
      // orientation(i, j, k) = sign(a * yk - b * xk + c)
      c = b * P[i][0] - a * P[i][1];
      SideCounts sc;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        s = a * P[k][1] - b * P[k][0] + c;
        int sg = sgn(s);
        if (sg > 0) {
          ++sc.left;
        } else if (sg < 0) {
          ++sc.right;
        } else {
          ++sc.on;
          acc.degeneracy({i, j, k});
        }
      }
      if (sc.on == 0 && sc.left == sc.right) acc.halving.push_back({{i, j}, sc});
    }
  });
  return finish(parts);
}

OracleResult count_halving_lines_sweep(std::span<const Point> points) {
  const std::size_t n = points.size();
  auto P = to_integer_coordinates(points, 2);

  struct Dir {
    Integer x, y;
    std::size_t index;
    int half;
  };
  auto cross = [](const Dir& u, const Dir& v) { return sgn(u.x * v.y - u.y * v.x); };

  auto parts = fan_out(n, [&](std::size_t i, Accumulator& acc) {
    std::vector<Dir> dirs;
    dirs.reserve(n);
    std::size_t coincident = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      Dir d{P[k][0] - P[i][0], P[k][1] - P[i][1], k, 0};
      if (d.x == 0 && d.y == 0) {
        ++coincident;
        continue;
      }
      d.half = (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
      dirs.push_back(std::move(d));
    }
    // Total order: half-plane, then angle (exact cross-product sign), then
    // distance from the pivot, then index.
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& u, const Dir& v) {
      if (u.half != v.half) return u.half < v.half;
      int c = cross(u, v);
      if (c != 0) return c > 0;
      int dist = cmp(u.x * u.x + u.y * u.y, v.x * v.x + v.y * v.y);
      if (dist != 0) return dist < 0;
      return u.index < v.index;
    });
    const std::size_t m = dirs.size();
    if (m == 0) return;
    // Group runs of identical direction.
    std::vector<std::size_t> group_start;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == 0 || dirs[k].half != dirs[k - 1].half || cross(dirs[k - 1], dirs[k]) != 0) {
        group_start.push_back(k);
      }
    }
    const std::size_t G = group_start.size();
    auto gsize = [&](std::size_t g) {
      g %= G;
      return (g + 1 < G ? group_start[g + 1] : m) - group_start[g];
    };
    auto rep = [&](std::size_t g) -> const Dir& { return dirs[group_start[g % G]]; };
    std::vector<std::size_t> prefix(2 * G + 1, 0);
    for (std::size_t g = 0; g < 2 * G; ++g) prefix[g + 1] = prefix[g] + gsize(g);

    std::size_t end = 1;
    for (std::size_t g = 0; g < G; ++g) {
      end = std::max(end, g + 1);
      while (end < g + G && cross(rep(g), rep(end)) > 0) ++end;
      const std::size_t left = prefix[end] - prefix[g + 1];
      std::size_t anti = 0;
      if (end < g + G && cross(rep(g), rep(end)) == 0) anti = gsize(end);
      const std::size_t own = gsize(g);
      const std::size_t right = m - own - left - anti;
      for (std::size_t k = group_start[g]; k < group_start[g] + own; ++k) {
        const std::size_t j = dirs[k].index;
        if (j < i) continue;
        SideCounts sc{left, right, own - 1 + anti + coincident};
        if (sc.on > 0) {
          acc.degeneracy({i, j}, sc.on);
          continue;
        }
        if (left == right) acc.halving.push_back({{i, j}, sc});
      }
    }
  });
  return finish(parts);
}

OracleResult count_halving_hyperplanes(std::span<const Point> points, std::size_t d) {
  if (d < 2) throw std::invalid_argument("hyperplane oracle needs d >= 2");
  const std::size_t n = points.size();
  auto P = to_integer_coordinates(points, d);
  if (n < d) return {};

  auto parts = fan_out(n, [&](std::size_t first, Accumulator& acc) {
    // Enumerate increasing tuples starting with `first`.
    std::vector<std::size_t> idx(d);
    idx[0] = first;
    std::vector<const IntPoint*> defining(d);
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      if (level == d) {
        for (std::size_t k = 0; k < d; ++k) defining[k] = &P[idx[k]];
        auto normal = int_normal(defining);
        bool zero = std::all_of(normal.begin(), normal.end(), [](const Integer& v) { return v == 0; });
        IndexTuple tuple(idx.begin(), idx.end());
        if (zero) {
          acc.degeneracy(tuple);
          return;
        }
        Integer offset = 0;
        for (std::size_t j = 0; j < d; ++j) offset += normal[j] * P[idx[0]][j];
        SideCounts sc;
        Integer s;
        std::size_t next_defining = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (next_defining < d && idx[next_defining] == k) {
            ++next_defining;
            continue;
          }
          s = -offset;
          for (std::size_t j = 0; j < d; ++j) s += normal[j] * P[k][j];
          int sg = sgn(s);
          if (sg > 0) {
            ++sc.left;
          } else if (sg < 0) {
            ++sc.right;
          } else {
            ++sc.on;
            IndexTuple w = tuple;
            w.push_back(k);
            acc.degeneracy(std::move(w));
          }
        }
        if (sc.on == 0 && sc.left == sc.right) acc.halving.push_back({std::move(tuple), sc});
        return;
      }
      for (std::size_t k = idx[level - 1] + 1; k + (d - level) <= n; ++k) {
        idx[level] = k;
        rec(level + 1);
      }
    };
    if (first + d <= n) rec(1);
  });
  return finish(parts);
}

HalvingVerdict is_halving(std::span<const Point> defining, std::span<const Point> all) {
  if (defining.empty()) throw std::invalid_argument("is_halving needs defining points");
  const std::size_t d = defining[0].dimension();
  if (defining.size() != d) {
    throw std::invalid_argument("is_halving needs exactly d defining points in R^d");
  }
  std::vector<Point> def(defining.begin(), defining.end());
  auto normal = hyperplane_normal(def);
  if (std::all_of(normal.begin(), normal.end(), [](const Scalar& v) { return v == 0; })) {
    throw std::invalid_argument("defining points are affinely dependent");
  }
  Scalar offset = dot(normal, def[0].coords);
  HalvingVerdict v;
  for (const auto& q : all) {
    require_dimension(q, d, "is_halving");
    if (std::find(def.begin(), def.end(), q) != def.end()) continue;
    int sg = sgn(dot(normal, q.coords) - offset);
    if (sg > 0) {
      ++v.sides.left;
    } else if (sg < 0) {
      ++v.sides.right;
    } else {
      ++v.sides.on;
    }
  }
  v.halving = v.sides.on == 0 && v.sides.left == v.sides.right;
  return v;
}

HalvingVerdict is_halving(std::span<const Point> all, const IndexTuple& tuple) {
  std::vector<Point> def;
  for (auto i : tuple) def.push_back(all[i]);
  return is_halving(std::span<const Point>(def), all);
}

VerificationReport general_position_check(std::span<const Point> points, std::size_t d,
                                          const GeneralPositionOptions& options) {
  VerificationReport report("general position (no " + std::to_string(d + 1) +
                            " points on a common hyperplane)");
  const std::size_t n = points.size();
  const std::size_t k = d + 1;
  if (n < k) return report;
  auto P = to_integer_coordinates(points, d);
  const std::size_t threshold =
      d == 2 ? options.exhaustive_threshold_2d : options.exhaustive_threshold_3d;

  auto test = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
    for (std::size_t r = 1; r < k; ++r) {
      for (std::size_t j = 0; j < d; ++j) m[r - 1][j] = P[idx[r]][j] - P[idx[0]][j];
    }
    std::string w;
    bool ok = int_determinant(std::move(m)) != 0;
    if (!ok) {
      for (auto i : idx) w += (w.empty() ? "" : ",") + std::to_string(i);
      w = "affinely dependent tuple (" + w + ")";
    }
    report.check(ok, w);
  };

  if (n <= threshold) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t level, std::size_t start) {
      if (level == k) {
        test(idx);
        return;
      }
      for (std::size_t i = start; i + (k - level) <= n; ++i) {
        idx[level] = i;
        rec(level + 1, i + 1);
      }
    };
    rec(0, 0);
    report.metrics["mode"] = "exhaustive";
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::set<std::size_t> chosen;
      while (chosen.size() < k) chosen.insert(pick(rng));
      test(std::vector<std::size_t>(chosen.begin(), chosen.end()));
    }
    report.metrics["mode"] = "sampled";
    report.metrics["samples"] = std::to_string(options.samples);
  }
  return report;
}

VerificationReport verify_claimed(const PointSetArtifact& artifact) {
  VerificationReport report("claimed tuples are halving");
  for (const auto& t : artifact.claimed_halving) {
    std::string w;
    bool ok = false;
    try {
      auto v = is_halving(std::span<const Point>(artifact.points), t);
      ok = v.halving;
      if (!ok) {
        w = "tuple sides left=" + std::to_string(v.sides.left) + " right=" +
            std::to_string(v.sides.right) + " on=" + std::to_string(v.sides.on);
      }
    } catch (const std::invalid_argument& e) {
      w = std::string("degenerate tuple: ") + e.what();
    }
    if (!ok) {
      std::string ids;
      for (auto i : t) ids += (ids.empty() ? "" : ",") + std::to_string(i);
      w = "(" + ids + ") " + w;
    }
    report.check(ok, w);
  }
  return report;
}

}  // namespace halving::oracle
