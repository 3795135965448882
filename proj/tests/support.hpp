#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// deliberately avoid the library's algorithms: weights are recomputed from
// the raw weight matrix, minima come from exhaustive search, and reductor
// sets are tested inequality by inequality.

#include "gorbit/family.hpp"
#include "gorbit/io.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gorbit::testing {

inline std::string data_path(const std::string& name) { return std::string(GORBIT_DATA_DIR) + "/" + name; }

inline Problem load(const std::string& name) { return load_problem(data_path(name)); }

inline Rational r(long num, long den = 1) { return Rational(num, den); }

inline RatVector eighths(std::initializer_list<long> values) {
  RatVector out;
  for (auto v : values) out.push_back(Rational(v, 8));
  return out;
}

inline IntVector iv(std::initializer_list<long> values) {
  IntVector out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<RatVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      RatVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// Character index of an exponent, from the raw weight matrix.
inline std::size_t raw_weight_index(const GroupData& g, const std::vector<long>& m) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.orders().size(); ++j) {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * g.weight_matrix()[j][i];
    const long d = g.orders()[j];
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(((s % d) + d) % d);
  }
  return idx;
}

inline void for_each_box_point(std::size_t n, long bound, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> m(n, 0);
  while (true) {
    fn(m);
    std::size_t k = 0;
    while (k < n && m[k] == bound) m[k++] = 0;
    if (k == n) return;
    ++m[k];
  }
}

/// min e(m) over 0 <= m_j <= |G| with weight(m) = chi, for every chi.
inline RatVector brute_minima(const GroupData& g, const RatVector& ray) {
  std::vector<std::optional<Rational>> best(g.order());
  for_each_box_point(g.dimension(), static_cast<long>(g.order()), [&](const std::vector<long>& m) {
    Rational v = 0;
    for (std::size_t i = 0; i < m.size(); ++i) v += ray[i] * m[i];
    auto& slot = best[raw_weight_index(g, m)];
    if (!slot || v < *slot) slot = v;
  });
  RatVector out;
  for (auto& b : best) out.push_back(*b);
  return out;
}

inline std::size_t raw_inverse_index(const GroupData& g, std::size_t idx) {
  return g.index(g.inverse(g.character(idx)));
}

/// Per-ray inequalities q_chi + e(u_j) - q_{chi rho(u_j)} >= 0, checked directly.
inline bool per_ray_ok(const GroupData& g, const RatVector& ray, const RatVector& q) {
  for (std::size_t c = 0; c < g.order(); ++c) {
    for (std::size_t j = 0; j < g.dimension(); ++j) {
      // chi * rho(u_j) via the raw weight of (rep(chi) + u_j) is avoided:
      // add residues directly.
      std::vector<std::int64_t> res = g.character(c).residues();
      for (std::size_t k = 0; k < res.size(); ++k)
        res[k] = (res[k] + g.weight_matrix()[k][j]) % g.orders()[k];
      const std::size_t target = g.index(Character(res));
      if (q[c] + ray[j] - q[target] < 0) return false;
    }
  }
  return true;
}

/// All normalized per-ray rows by exhaustive search of the congruence grid
/// inside the maximal shift window.
inline std::set<RatVector> brute_per_ray(const GroupData& g, const RatVector& ray) {
  const RatVector upper = brute_minima(g, ray);
  std::vector<std::vector<Rational>> choices(g.order());
  for (std::size_t c = 0; c < g.order(); ++c) {
    const Rational lo = -upper[raw_inverse_index(g, c)];
    for (Rational v = lo; v <= upper[c]; v += 1) choices[c].push_back(v);
  }
  std::set<RatVector> rows;
  RatVector q(g.order());
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == g.order()) {
      if (per_ray_ok(g, ray, q)) rows.insert(q);
      return;
    }
    for (const auto& v : choices[c]) {
      q[c] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return rows;
}

/// Number of normalized reductor sets found by testing every congruent
/// coefficient table in the maximal shift window against the full condition.
inline std::size_t brute_count_normalized(const Fan& fan, const GroupData& g) {
  std::vector<RatVector> uppers;
  for (const auto& ray : fan.rays()) uppers.push_back(brute_minima(g, ray));
  // Flatten (ray, chi) slots.
  struct Slot {
    std::size_t ray;
    std::size_t chi;
    std::vector<Rational> values;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    for (std::size_t c = 0; c < g.order(); ++c) {
      Slot s{i, c, {}};
      for (Rational v = -uppers[i][raw_inverse_index(g, c)]; v <= uppers[i][c]; v += 1) s.values.push_back(v);
      slots.push_back(std::move(s));
    }
  std::vector<RatVector> q(fan.rays().size(), RatVector(g.order()));
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == slots.size()) {
      for (std::size_t i = 0; i < fan.rays().size(); ++i)
        if (!per_ray_ok(g, fan.ray(i), q[i])) return;
      ++count;
      return;
    }
    for (const auto& v : slots[k].values) {
      q[slots[k].ray][slots[k].chi] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

/// The running example's canonical table, columns E4..E7 (rays 3..6), rows chi_0..chi_7.
inline std::vector<RatVector> reference_canonical() {
  return {eighths({0, 0, 0, 0}), eighths({1, 2, 4, 5}), eighths({2, 4, 0, 2}), eighths({3, 6, 4, 7}),
          eighths({4, 0, 0, 4}), eighths({5, 2, 4, 1}), eighths({6, 4, 0, 6}), eighths({7, 6, 4, 3})};
}

inline std::vector<RatVector> reference_maxshift() {
  return {eighths({0, 0, 0, 0}), eighths({1, 2, 4, 5}), eighths({2, 4, 0, 2}), eighths({3, 6, 4, 7}),
          eighths({4, 8, 0, 4}), eighths({5, 2, 4, 1}), eighths({6, 4, 0, 6}), eighths({7, 6, 4, 3})};
}

/// Reference per-ray solution tables for E4..E7 of the running example.
inline std::map<std::size_t, std::set<RatVector>> reference_per_ray() {
  std::map<std::size_t, std::set<RatVector>> t;
  t[3] = {eighths({0, 1, 2, 3, 4, 5, 6, 7}),    eighths({0, 1, 2, 3, 4, 5, 6, -1}),
          eighths({0, 1, 2, 3, 4, 5, -2, -1}),  eighths({0, 1, 2, 3, 4, -3, -2, -1}),
          eighths({0, 1, 2, 3, -4, -3, -2, -1}), eighths({0, 1, 2, -5, -4, -3, -2, -1}),
          eighths({0, 1, -6, -5, -4, -3, -2, -1}), eighths({0, -7, -6, -5, -4, -3, -2, -1})};
  t[4] = {eighths({0, 2, 4, 6, 8, 2, 4, 6}),     eighths({0, 2, 4, 6, 0, 2, 4, 6}),
          eighths({0, 2, 4, -2, 0, 2, 4, 6}),    eighths({0, 2, 4, 6, 0, 2, 4, -2}),
          eighths({0, 2, 4, -2, 0, 2, 4, -2}),   eighths({0, 2, -4, -2, 0, 2, 4, -2}),
          eighths({0, 2, 4, -2, 0, 2, -4, -2}),  eighths({0, 2, -4, -2, 0, 2, -4, -2}),
          eighths({0, -6, -4, -2, 0, 2, -4, -2}), eighths({0, 2, -4, -2, 0, -6, -4, -2}),
          eighths({0, -6, -4, -2, 0, -6, -4, -2}), eighths({0, -6, -4, -2, -8, -6, -4, -2})};
  t[5] = {eighths({0, 4, 0, 4, 0, 4, 0, 4}), eighths({0, -4, 0, -4, 0, -4, 0, -4})};
  t[6] = {eighths({0, 5, 2, 7, 4, 1, 6, 3}),    eighths({0, 5, 2, -1, 4, 1, 6, 3}),
          eighths({0, 5, 2, -1, 4, 1, -2, 3}),  eighths({0, -3, 2, -1, 4, 1, -2, 3}),
          eighths({0, -3, 2, -1, -4, 1, -2, 3}), eighths({0, -3, 2, -1, -4, 1, -2, -5}),
          eighths({0, -3, -6, -1, -4, -7, -2, -5})};
  return t;
}

/// Exact (numerator, denominator) pairs of the coefficient table. Ordering
/// these is much cheaper than ordering tables of big rationals.
using SetKey = std::vector<std::int64_t>;

inline SetKey key(const ReductorSet& s, std::size_t rays) {
  SetKey out;
  out.reserve(2 * rays * s.size());
  for (const auto& row : s.table(rays))
    for (const auto& q : row) {
      out.push_back(numerator(q).convert_to<std::int64_t>());
      out.push_back(denominator(q).convert_to<std::int64_t>());
    }
  return out;
}

inline std::set<SetKey> collect_normalized(const Fan& fan, const GroupData& g) {
  std::set<SetKey> out;
  enumerate_normalized(fan, g, [&](const ReductorSet& s) {
    out.insert(key(s, fan.rays().size()));
    return true;
  });
  return out;
}

}  // namespace gorbit::testing
