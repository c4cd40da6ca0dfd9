#include "halving/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "halving/oracle.hpp"
#include "halving/recursive.hpp"

namespace halving::highdim {

namespace {

Point zero_point(std::size_t d) { return Point(std::vector<Scalar>(d, Scalar(0))); }

Point negate(const Point& p) {
  Point q = p;
  for (auto& c : q.coords) c = -c;
  return q;
}

Point combine(const Scalar& a, const Point& u, const Scalar& b, const Point& v) {
  Point q = zero_point(u.dimension());
  for (std::size_t j = 0; j < u.dimension(); ++j) q[j] = a * u[j] + b * v[j];
  return q;
}

// Call body on every k-subset of [0, n) as a sorted index vector.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& body) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t level, std::size_t start) {
    if (level == k) {
      body(idx);
      return;
    }
    for (std::size_t i = start; i + (k - level) <= n; ++i) {
      idx[level] = i;
      rec(level + 1, i + 1);
    }
  };
  rec(0, 0);
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Normal of the hyperplane through the origin spanned by d-1 vectors.
std::vector<Scalar> span_normal(const std::vector<const Point*>& vectors) {
  std::vector<Point> defining{zero_point(vectors.front()->dimension())};
  for (const auto* v : vectors) defining.push_back(*v);
  return hyperplane_normal(defining);
}

// Unit vector from rounded stereographic coordinates: exact and rational.
Point from_stereographic(const std::vector<Scalar>& u) {
  Scalar norm2 = 0;
  for (const auto& c : u) norm2 += c * c;
  Point p = zero_point(u.size() + 1);
  for (std::size_t j = 0; j < u.size(); ++j) p[j] = 2 * u[j] / (1 + norm2);
  p[u.size()] = (1 - norm2) / (1 + norm2);
  return p;
}

std::vector<std::vector<double>> raw_candidates(std::size_t d, std::size_t count) {
  std::vector<std::vector<double>> out;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> e(d, 0.0);
    e[j] = 1.0;
    out.push_back(e);
  }
  if (d == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = golden * static_cast<double>(i);
      out.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return out;
  }
  static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (d > std::size(primes)) throw std::invalid_argument("direction generator supports d <= 12");
  auto halton = [](std::size_t i, int base) {
    double f = 1, r = 0;
    while (i > 0) {
      f /= base;
      r += f * static_cast<double>(i % base);
      i /= base;
    }
    return r;
  };
  for (std::size_t i = 1; out.size() < count + d && i < 50 * count; ++i) {
    std::vector<double> v(d);
    double n2 = 0;
    for (std::size_t j = 0; j < d; ++j) {
      v[j] = 2 * halton(i, primes[j]) - 1;
      n2 += v[j] * v[j];
    }
    if (n2 > 1 || n2 < 0.01) continue;
    for (auto& c : v) c /= std::sqrt(n2);
    out.push_back(v);
  }
  return out;
}

bool in_plane(const Point& q, const Point& c, const Point& e) {
  Scalar qc = dot(q.coords, c.coords), qe = dot(q.coords, e.coords);
  for (std::size_t j = 0; j < q.dimension(); ++j) {
    if (q[j] - qc * c[j] - qe * e[j] != 0) return false;
  }
  return true;
}

// Householder reflection taking e_1 to c, applied to g.
Point reflect_to(const Point& c, const Point& g) {
  Point v = negate(c);
  v[0] += 1;
  Scalar vv = dot(v.coords, v.coords);
  if (vv == 0) return g;
  Scalar f = 2 * dot(v.coords, g.coords) / vv;
  return combine(Scalar(1), g, -f, v);
}

std::string tuple_text(const IndexTuple& t) {
  std::string s;
  for (auto i : t) s += (s.empty() ? "" : ",") + std::to_string(i);
  return "(" + s + ")";
}

}  // namespace

std::vector<Point> normalize_important(const std::vector<Point>& points, const Scalar& epsilon,
                                       Scalar* y_factor) {
  if (points.size() < 2) throw std::invalid_argument("important part needs at least two points");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  Scalar lo = points.front().x(), hi = lo, ymax = 0;
  for (const auto& p : points) {
    require_dimension(p, 2, "normalize_important");
    lo = std::min<Scalar>(lo, p.x());
    hi = std::max<Scalar>(hi, p.x());
  }
  if (lo == hi) throw std::invalid_argument("important part needs distinct x-coordinates");
  const Scalar s = 1 / (hi - lo);
  for (const auto& p : points) ymax = std::max<Scalar>(ymax, abs(p.y() * s));
  Scalar f = s;
  if (ymax > 0) f = s * qpow(epsilon, 3) / (2 * ymax);
  if (y_factor) *y_factor = f;
  std::vector<Point> out;
  for (const auto& p : points) out.push_back(point2((p.x() - lo) * s + 1, p.y() * f));
  return out;
}

PlanarBlock block_A(const std::vector<Point>& important, const std::vector<IndexTuple>& claims,
                    const Scalar& epsilon) {
  const std::size_t m = important.size();
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("block A needs an even important part, m >= 2");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const Scalar e3 = qpow(epsilon, 3);
  for (const auto& p : important) {
    require_dimension(p, 2, "block_A");
    if (p.x() < 1 || p.x() > 2 || !(abs(p.y()) < e3)) {
      throw std::domain_error("important part must have x in [1, 2] and |y| < eps^3");
    }
  }
  PlanarBlock b;
  b.kind = BlockKind::A;
  b.points = important;
  b.important_count = m;
  b.claims = claims;
  const Scalar e2 = epsilon * epsilon;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    b.points.push_back(point2(-2 + make_scalar(static_cast<long>(i), static_cast<long>(m)), e2));
  }
  for (std::size_t i = 1; i <= m / 2; ++i) {
    b.points.push_back(
        point2(make_scalar(-3, 2) + make_scalar(static_cast<long>(i), static_cast<long>(m)), -e2));
  }
  return b;
}

PlanarBlock block_B(std::size_t m, const Scalar& epsilon, BVariant variant) {
  if (m < 1) throw std::invalid_argument("block B needs m >= 1");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  PlanarBlock b;
  b.kind = BlockKind::B;
  const long mm = static_cast<long>(m);
  for (long i = 1; i <= mm; ++i) b.points.push_back(point2(-2 + make_scalar(i, mm), epsilon));
  for (long i = 1; i <= mm; ++i) {
    long step = variant == BVariant::literal ? i : i - 1;
    b.points.push_back(point2(1 + make_scalar(step, mm), -epsilon));
  }
  return b;
}

VerificationReport verify_block_A(const PlanarBlock& block) {
  VerificationReport report("important halving pairs halve block A");
  for (const auto& c : block.claims) {
    auto v = oracle::is_halving(std::span<const Point>(block.points), c);
    report.check(v.halving, "pair " + tuple_text(c) + " sides " + std::to_string(v.sides.left) +
                                "/" + std::to_string(v.sides.right));
  }
  return report;
}

std::vector<Point> DirectionSet::with_antipodes() const {
  std::vector<Point> out = centers;
  for (const auto& c : centers) out.push_back(negate(c));
  return out;
}

DirectionSet sphere_directions(std::size_t m, std::size_t d, std::uint64_t seed,
                               std::optional<std::size_t> max_count) {
  if (d < 3) throw std::invalid_argument("directions need d >= 3");
  if (m < 1) throw std::invalid_argument("directions need m >= 1");
  double target = 16.0 * std::pow(static_cast<double>(m), static_cast<double>(d - 1));
  const std::size_t count = static_cast<std::size_t>(std::clamp(target, 64.0, 20000.0));
  const auto raw = raw_candidates(d, count);
  const Scalar min_sep = make_scalar(Integer(1), Integer(m) * m);
  const Scalar dot_cap = 1 - min_sep / 2;  // chord^2 = 2 - 2 c.k
  constexpr int kBits = 20;
  constexpr unsigned kRetries = 8;

  for (unsigned attempt = 0; attempt < kRetries; ++attempt) {
    DirectionSet set;
    set.dimension = d;
    set.min_separation = min_sep;
    set.seed = seed + attempt;
    std::mt19937_64 rng(set.seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    for (const auto& v0 : raw) {
      if (max_count && set.centers.size() >= *max_count) break;
      ++set.generated;
      std::vector<double> v = v0;
      if (v[d - 1] < 0) {
        for (auto& c : v) c = -c;
      }
      std::vector<Scalar> u(d - 1);
      bool origin = true;
      for (std::size_t j = 0; j + 1 < d; ++j) {
        double uj = v[j] / (1.0 + v[d - 1]) + std::ldexp(jitter(rng), -12);
        u[j] = dyadic_approximation(uj, kBits);
        origin = origin && u[j] == 0;
      }
      if (origin) continue;  // would be the last axis itself
      Point c = from_stereographic(u);
      bool ok = true;
      for (const auto& k : set.centers) {
        if (abs(dot(c.coords, k.coords)) > dot_cap) {
          ok = false;
          break;
        }
      }
      if (ok) set.centers.push_back(std::move(c));
    }
    // No d centers linearly dependent: exhaustive when cheap, sampled otherwise.
    bool independent = true;
    auto test = [&](const std::vector<std::size_t>& idx) {
      std::vector<std::vector<Scalar>> rows;
      for (auto i : idx) rows.push_back(set.centers[i].coords);
      if (determinant(rows) == 0) independent = false;
    };
    if (binomial(set.centers.size(), d) <= 50000) {
      for_each_subset(set.centers.size(), d, test);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, set.centers.size() - 1);
      for (int s = 0; s < 20000 && independent; ++s) {
        std::set<std::size_t> chosen;
        while (chosen.size() < d) chosen.insert(pick(rng));
        test(std::vector<std::size_t>(chosen.begin(), chosen.end()));
      }
    }
    if (independent) return set;
  }
  throw std::domain_error("could not generate linearly independent directions");
}

std::vector<Point> select_directions(const DirectionSet& set, std::size_t count,
                                     const Scalar& epsilon) {
  const std::size_t d = set.dimension;
  const Scalar sep2 = 16 * epsilon * epsilon;
  std::vector<Point> picked;
  auto acceptable = [&](const std::vector<Point>& trial) {
    bool ok = true;
    for_each_subset(trial.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
      if (!ok) return;
      std::vector<const Point*> vs;
      for (auto i : idx) vs.push_back(&trial[i]);
      auto normal = span_normal(vs);
      Scalar n2 = dot(normal, normal);
      if (n2 == 0 || 16 * normal[d - 1] * normal[d - 1] < n2) {
        ok = false;
        return;
      }
      for (std::size_t t = 0; t < trial.size(); ++t) {
        if (std::find(idx.begin(), idx.end(), t) != idx.end()) continue;
        Scalar h = dot(normal, trial[t].coords);
        if (h * h < sep2 * n2) {
          ok = false;
          return;
        }
      }
    });
    return ok;
  };
  for (const auto& c : set.centers) {
    if (picked.size() == count) break;
    auto trial = picked;
    trial.push_back(c);
    if (acceptable(trial)) picked = std::move(trial);
  }
  if (picked.size() < count) {
    throw std::domain_error("only " + std::to_string(picked.size()) + " of " +
                            std::to_string(count) + " well-spread directions available");
  }
  return picked;
}

SpatialAssembly assemble(std::size_t d, std::size_t m, const Scalar& epsilon,
                         const std::vector<Point>& directions, const PlanarBlock& a_template,
                         const AssemblyOptions& options) {
  if (d < 3) throw std::invalid_argument("assembly needs d >= 3");
  const std::size_t blocks = options.a_blocks + options.b_blocks;
  if (directions.size() < blocks) throw std::invalid_argument("not enough directions for the blocks");
  if (a_template.kind != BlockKind::A || a_template.important_count != m) {
    throw std::invalid_argument("block A template does not match m");
  }
  if (options.b_blocks + 2 < d) throw std::invalid_argument("assembly needs at least d-2 B blocks");
  for (std::size_t k = 0; k < blocks; ++k) require_dimension(directions[k], d, "assemble");
  const PlanarBlock b_template = block_B(m, epsilon, options.b_variant);

  SpatialAssembly as;
  as.dimension = d;
  as.m = m;
  as.epsilon = epsilon;
  for (std::size_t k = 0; k < blocks; ++k) {
    const Point& c = directions[k];
    const bool is_a = k < options.a_blocks;
    // Sweep rational in-plane directions until the plane misses every other axis.
    std::optional<Point> plane;
    for (long r = 0; r < 256 && !plane; ++r) {
      Point g = zero_point(d);
      Rotation rot = rational_rotation(
          make_scalar(r + 1 + static_cast<long>(options.seed % 5), 7 + static_cast<long>(k)));
      g[1] = rot.cos;
      g[2] = rot.sin;
      Point e = reflect_to(c, g);
      bool clean = true;
      for (std::size_t j = 0; j < blocks && clean; ++j) {
        if (j != k && in_plane(directions[j], c, e)) clean = false;
      }
      if (clean) plane = e;
    }
    if (!plane) throw std::domain_error("no block plane avoids the other axes");
    as.axes.push_back(c);
    as.plane_dirs.push_back(*plane);
    as.block_kind.push_back(is_a ? BlockKind::A : BlockKind::B);

    const PlanarBlock& tpl = is_a ? a_template : b_template;
    const std::size_t base = as.points.size();
    for (std::size_t i = 0; i < tpl.points.size(); ++i) {
      as.points.push_back(combine(tpl.points[i].x(), c, tpl.points[i].y(), *plane));
      as.block_of.push_back(k);
      as.role.push_back(!is_a ? Role::symmetric
                              : (i < tpl.important_count ? Role::important : Role::unimportant));
    }
    if (is_a) {
      std::vector<IndexTuple> claims;
      for (const auto& t : tpl.claims) {
        IndexTuple g;
        for (auto i : t) g.push_back(base + i);
        claims.push_back(std::move(g));
      }
      as.a_claims.push_back(std::move(claims));
    }
  }

  // Jitter well below the smallest pre-jitter distance, then demand general position.
  Scalar min_d2 = -1;
  for (std::size_t i = 0; i < as.points.size(); ++i) {
    for (std::size_t j = i + 1; j < as.points.size(); ++j) {
      Scalar s = squared_distance(as.points[i], as.points[j]);
      if (min_d2 < 0 || s < min_d2) min_d2 = s;
    }
  }
  if (min_d2 == 0) throw std::domain_error("assembled blocks share a point");
  long eexp = 0;
  while (pow2(-eexp) > epsilon) ++eexp;
  long jexp = 3 * eexp + 20;
  while (100 * 4 * Scalar(static_cast<long>(d)) * pow2(-2 * jexp) >= min_d2) ++jexp;
  as.jitter_exponent = jexp;

  const std::vector<Point> clean_points = as.points;
  oracle::GeneralPositionOptions gp;
  gp.exhaustive_threshold_2d = options.general_position_threshold;
  gp.exhaustive_threshold_3d = options.general_position_threshold;
  gp.seed = options.seed;
  constexpr unsigned kRetries = 8;
  const Scalar unit = pow2(-(jexp + 10));
  for (unsigned attempt = 0; attempt < kRetries; ++attempt) {
    std::mt19937_64 rng(options.seed * 1000003ULL + attempt);
    std::uniform_int_distribution<long> pick(-1024, 1024);
    as.points = clean_points;
    for (auto& p : as.points) {
      for (auto& c : p.coords) c += unit * pick(rng);
    }
    as.jitter_retries = attempt;
    if (oracle::general_position_check(std::span<const Point>(as.points), d, gp).passed()) {
      return as;
    }
  }
  throw std::domain_error("general position not reached within the retry budget");
}

std::vector<IndexTuple> candidates(const SpatialAssembly& as) {
  const std::size_t d = as.dimension;
  std::vector<std::size_t> b_ids;
  for (std::size_t k = 0; k < as.block_kind.size(); ++k) {
    if (as.block_kind[k] == BlockKind::B) b_ids.push_back(k);
  }
  std::vector<std::vector<std::size_t>> members(as.block_kind.size());
  for (std::size_t i = 0; i < as.points.size(); ++i) {
    if (as.block_of[i] < members.size()) members[as.block_of[i]].push_back(i);
  }
  std::vector<IndexTuple> out;
  for (const auto& claims : as.a_claims) {
    for (const auto& pair : claims) {
      for_each_subset(b_ids.size(), d - 2, [&](const std::vector<std::size_t>& chosen) {
        IndexTuple t = pair;
        std::function<void(std::size_t)> rec = [&](std::size_t level) {
          if (level == chosen.size()) {
            out.push_back(t);
            return;
          }
          for (auto i : members[b_ids[chosen[level]]]) {
            t.push_back(i);
            rec(level + 1);
            t.pop_back();
          }
        };
        rec(0);
      });
    }
  }
  return out;
}

Integer expected_candidate_count(const SpatialAssembly& as) {
  const std::size_t d = as.dimension;
  std::size_t pairs = 0, b = 0;
  for (const auto& c : as.a_claims) pairs += c.size();
  for (auto k : as.block_kind) b += k == BlockKind::B;
  return Integer(pairs) * binomial(b, d - 2) * ipow(Integer(2 * as.m), d - 2);
}

DiffResult diff_of_hyperplane(const std::vector<Point>& points, const std::vector<Point>& defining) {
  if (defining.empty()) throw std::invalid_argument("diff needs defining points");
  const std::size_t d = defining.front().dimension();
  if (defining.size() != d) throw std::invalid_argument("diff needs exactly d defining points");
  auto normal = hyperplane_normal(defining);
  if (std::all_of(normal.begin(), normal.end(), [](const Scalar& v) { return v == 0; })) {
    throw std::invalid_argument("defining points are affinely dependent");
  }
  const int up = sgn(normal[d - 1]);
  if (up == 0) throw std::invalid_argument("hyperplane is parallel to the last axis");
  const Scalar offset = dot(normal, defining.front().coords);
  DiffResult r;
  for (const auto& q : points) {
    require_dimension(q, d, "diff_of_hyperplane");
    if (std::find(defining.begin(), defining.end(), q) != defining.end()) continue;
    int s = sgn(dot(normal, q.coords) - offset);
    if (s == 0) {
      ++r.on;
    } else if (s == up) {
      ++r.above;
    } else {
      ++r.below;
    }
  }
  return r;
}

DiffResult diff_of_hyperplane(const std::vector<Point>& points, const IndexTuple& tuple) {
  std::vector<Point> def;
  for (auto i : tuple) def.push_back(points.at(i));
  return diff_of_hyperplane(points, def);
}

ParityFix parity_fix(const SpatialAssembly& assembly) {
  ParityFix fix;
  fix.assembly = assembly;
  const auto cands = candidates(assembly);
  std::map<long, std::size_t> freq;
  for (const auto& t : cands) {
    long v = diff_of_hyperplane(assembly.points, t).diff();
    fix.diffs_before.push_back(v);
    ++freq[v];
  }
  long x = 0;
  std::size_t best = 0;
  for (const auto& [v, c] : freq) {
    bool better = c > best || (c == best && (std::labs(v) < std::labs(x) ||
                                             (std::labs(v) == std::labs(x) && v < x)));
    if (better) {
      x = v;
      best = c;
    }
  }
  SpatialAssembly& as = fix.assembly;
  if (x > 0) {
    for (auto& p : as.points) p[as.dimension - 1] = -p[as.dimension - 1];
    as.reflected = !as.reflected;
    x = -x;
  }
  fix.majority = x;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    long v = as.reflected != assembly.reflected ? -fix.diffs_before[k] : fix.diffs_before[k];
    if (v == x) fix.retained.push_back(cands[k]);
  }
  const std::size_t d = as.dimension;
  if (d == 3 && -x > 1) throw std::domain_error("three-dimensional majority beyond one apex point");
  const long n = static_cast<long>(as.points.size());
  for (long i = 1; i <= -x; ++i) {
    Point apex = zero_point(d);
    apex[d - 1] = d == 3 ? Scalar(2) : 2 + make_scalar(i, n);
    as.apex.push_back(as.points.size());
    as.points.push_back(std::move(apex));
    as.block_of.push_back(std::numeric_limits<std::size_t>::max());
    as.role.push_back(Role::apex);
  }
  return fix;
}

PointSetArtifact to_artifact(const ParityFix& fix) {
  const SpatialAssembly& as = fix.assembly;
  PointSetArtifact art;
  art.dimension = as.dimension;
  art.points = as.points;
  art.construction = "highdim";
  art.claimed_halving = fix.retained;
  art.parameters["dimension"] = std::to_string(as.dimension);
  art.parameters["m"] = std::to_string(as.m);
  art.parameters["epsilon"] = as.epsilon.get_str();
  art.parameters["majority_diff"] = std::to_string(fix.majority);
  art.parameters["reflected"] = as.reflected ? "true" : "false";
  art.parameters["apex_points"] = std::to_string(as.apex.size());
  art.parameters["jitter_exponent"] = std::to_string(as.jitter_exponent);
  std::size_t a = 0;
  for (auto k : as.block_kind) a += k == BlockKind::A;
  art.parameters["a_blocks"] = std::to_string(a);
  art.parameters["b_blocks"] = std::to_string(as.block_kind.size() - a);
  for (std::size_t i = 0; i < as.role.size(); ++i) {
    if (as.role[i] == Role::important || as.role[i] == Role::apex) art.bold.push_back(i);
  }
  return art;
}

PointSetArtifact important_base(std::size_t m) {
  auto table_size = [](unsigned i) { return recursive::build(i, i).points.size(); };
  for (unsigned i = 0; i <= 3; ++i) {
    if (table_size(i) == m) return recursive::finalize_diagonal(recursive::build(i, i));
  }
  throw std::invalid_argument("important part size m must be 2, 6, 30 or 290");
}

Scalar default_epsilon(std::size_t m) {
  long e = 2;
  while ((std::size_t{1} << (e - 2)) < m) ++e;
  return pow2(-e);
}

Pipeline run_pipeline(std::size_t d, std::size_t m, std::uint64_t seed,
                      const AssemblyOptions& options, std::optional<Scalar> epsilon) {
  Pipeline p;
  const Scalar eps = epsilon ? *epsilon : default_epsilon(m);
  const PointSetArtifact base = important_base(m);
  Scalar f;
  p.a_template = block_A(normalize_important(base.points, eps, &f), base.claimed_halving, eps);
  p.directions = sphere_directions(m, d, seed);
  p.chosen = select_directions(p.directions, options.a_blocks + options.b_blocks, eps);
  AssemblyOptions opt = options;
  opt.seed = seed;
  p.assembly = assemble(d, m, eps, p.chosen, p.a_template, opt);
  p.candidate_list = candidates(p.assembly);
  p.fix = parity_fix(p.assembly);
  p.diffs = p.fix.diffs_before;
  p.artifact = to_artifact(p.fix);
  p.artifact.parameters["seed"] = std::to_string(seed);
  p.artifact.parameters["important_y_factor"] = f.get_str();
  p.artifact.parameters["b_variant"] =
      options.b_variant == BVariant::literal ? "literal" : "symmetric";
  return p;
}

}  // namespace halving::highdim
