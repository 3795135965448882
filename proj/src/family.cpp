#include "gorbit/family.hpp"

#include <algorithm>
#include <queue>

namespace gorbit {

std::vector<RatVector> ReductorSet::table(std::size_t ray_count) const {
  std::vector<RatVector> out;
  out.reserve(divisors_.size());
  for (const auto& d : divisors_) {
    RatVector row(ray_count, 0);
    for (const auto& [ray, q] : d.coeffs())
      if (ray < ray_count) row[ray] = q;
    out.push_back(std::move(row));
  }
  return out;
}

ReductorReport check_reductor(const Fan& fan, const GroupData& group, const ReductorSet& set) {
  ReductorReport report;
  if (set.size() != group.order()) {
    report.shape_errors.push_back("expected " + std::to_string(group.order()) + " divisors, got " +
                                  std::to_string(set.size()));
    return report;
  }
  for (std::size_t c = 0; c < set.size(); ++c) {
    const auto& d = set[c];
    if (d.character() != group.character(c)) {
      report.shape_errors.push_back("divisor " + std::to_string(c) + " has character " + group.name(d.character()) +
                                    ", expected " + group.name(group.character(c)));
      continue;
    }
    for (auto ray : congruence_failures(fan, group, d)) {
      report.shape_errors.push_back("D_" + group.name(d.character()) + ": coefficient of " + Fan::ray_name(ray) +
                                    " violates the congruence condition");
    }
  }
  if (!report.shape_errors.empty()) return report;

  for (std::size_t c = 0; c < set.size(); ++c) {
    for (std::size_t j = 0; j < group.dimension(); ++j) {
      const std::size_t target = group.step(c, j);
      for (std::size_t i = 0; i < fan.rays().size(); ++i) {
        const Rational value = set.coefficient(c, i) + fan.ray(i)[j] - set.coefficient(target, i);
        if (value < 0) report.violations.push_back({c, j, i, value});
      }
    }
  }
  return report;
}

ReductorSet canonical_family(const Fan& fan, const GroupData& group) {
  std::vector<GWeilDivisor> divisors;
  for (const auto& chi : group.characters()) {
    GWeilDivisor d(chi);
    for (std::size_t i = 0; i < fan.rays().size(); ++i) d.set(i, frac_val(fan.ray(i), group, chi));
    divisors.push_back(std::move(d));
  }
  return ReductorSet(std::move(divisors));
}

RatVector maximal_shift_minima(const GroupData& group, std::span<const Rational> ray) {
  const std::size_t order = group.order();
  std::vector<std::optional<Rational>> dist(order);
  std::vector<bool> settled(order, false);
  using Entry = std::pair<Rational, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = Rational(0);
  queue.emplace(Rational(0), 0);
  while (!queue.empty()) {
    auto [d, c] = queue.top();
    queue.pop();
    if (settled[c]) continue;
    settled[c] = true;
    for (std::size_t j = 0; j < group.dimension(); ++j) {
      const std::size_t next = group.step(c, j);
      const Rational candidate = d + ray[j];
      if (!dist[next] || candidate < *dist[next]) {
        dist[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }
  RatVector out;
  out.reserve(order);
  for (auto& d : dist) out.push_back(*d);
  return out;
}

ReductorSet maximal_shift_family(const Fan& fan, const GroupData& group) {
  std::vector<GWeilDivisor> divisors;
  for (const auto& chi : group.characters()) divisors.emplace_back(chi);
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    const RatVector minima = maximal_shift_minima(group, fan.ray(i));
    for (std::size_t c = 0; c < minima.size(); ++c) divisors[c].set(i, minima[c]);
  }
  return ReductorSet(std::move(divisors));
}

namespace {

// Domain of one per-ray unknown: the grid lo, lo + 1, ..., hi.
struct Interval {
  Rational lo;
  Rational hi;
};

class PerRaySearch {
 public:
  PerRaySearch(const GroupData& group, std::span<const Rational> ray, std::span<const Rational> minima)
      : group_(group), ray_(ray.begin(), ray.end()) {
    const std::size_t order = group.order();
    predecessors_.resize(order * group.dimension());
    for (std::size_t c = 0; c < order; ++c)
      for (std::size_t j = 0; j < group.dimension(); ++j) predecessors_[group.step(c, j) * group.dimension() + j] = c;
    std::vector<Interval> domains(order);
    for (std::size_t c = 0; c < order; ++c) {
      const std::size_t inv = group.index(group.inverse(group.character(c)));
      domains[c] = {-minima[inv], minima[c]};
    }
    row_.resize(order);
    if (feasible(domains)) search(0, domains);
  }

  std::vector<RatVector> take() { return std::move(rows_); }

 private:
  static bool feasible(const std::vector<Interval>& domains) {
    return std::all_of(domains.begin(), domains.end(), [](const Interval& d) { return d.lo <= d.hi; });
  }

  // Largest grid point <= bound, where the grid is anchor + Z.
  static Rational snap_down(const Rational& bound, const Rational& anchor) {
    return anchor + Rational(floor(bound - anchor));
  }
  static Rational snap_up(const Rational& bound, const Rational& anchor) {
    return anchor + Rational(ceil(bound - anchor));
  }

  void search(std::size_t c, const std::vector<Interval>& domains) {
    if (c == domains.size()) {
      rows_.push_back(row_);
      return;
    }
    const std::size_t n = group_.dimension();
    for (Rational value = domains[c].lo; value <= domains[c].hi; value += 1) {
      std::vector<Interval> next = domains;
      next[c] = {value, value};
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        // q_{c rho_j} <= q_c + e(u_j)
        Interval& succ = next[group_.step(c, j)];
        succ.hi = std::min(succ.hi, snap_down(value + ray_[j], succ.hi));
        // q_c <= q_{c rho_j^{-1}} + e(u_j)
        Interval& pred = next[predecessors_[c * n + j]];
        pred.lo = std::max(pred.lo, snap_up(value - ray_[j], pred.lo));
        ok = succ.lo <= succ.hi && pred.lo <= pred.hi;
      }
      if (!ok) continue;
      row_[c] = value;
      search(c + 1, next);
    }
  }

  const GroupData& group_;
  RatVector ray_;
  std::vector<std::size_t> predecessors_;
  RatVector row_;
  std::vector<RatVector> rows_;
};

}  // namespace

PerRayTable enumerate_per_ray(const GroupData& group, std::span<const Rational> ray_vector, std::size_t ray,
                              std::span<const Rational> minima) {
  PerRaySearch search(group, ray_vector, minima);
  return {ray, search.take()};
}

PerRayTable enumerate_per_ray(const Fan& fan, const GroupData& group, std::size_t ray) {
  const RatVector minima = maximal_shift_minima(group, fan.ray(ray));
  return enumerate_per_ray(group, fan.ray(ray), ray, minima);
}

NormalizedEnumeration::NormalizedEnumeration(const Fan& fan, const GroupData& group) : group_(group) {
  for (std::size_t i = 0; i < fan.rays().size(); ++i) tables_.push_back(enumerate_per_ray(fan, group, i));
  reset();
}

Integer NormalizedEnumeration::count() const {
  Integer total = 1;
  for (const auto& t : tables_) total *= t.rows.size();
  return total;
}

void NormalizedEnumeration::reset() {
  cursor_.assign(tables_.size(), 0);
  done_ = std::any_of(tables_.begin(), tables_.end(), [](const PerRayTable& t) { return t.rows.empty(); });
}

ReductorSet NormalizedEnumeration::assemble(std::span<const std::size_t> choice) const {
  std::vector<GWeilDivisor> divisors;
  for (const auto& chi : group_.characters()) divisors.emplace_back(chi);
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& row = tables_[i].rows.at(choice[i]);
    for (std::size_t c = 0; c < row.size(); ++c) divisors[c].set(tables_[i].ray, row[c]);
  }
  return ReductorSet(std::move(divisors));
}

std::optional<ReductorSet> NormalizedEnumeration::next() {
  if (done_) return std::nullopt;
  ReductorSet out = assemble(cursor_);
  std::size_t i = tables_.size();
  while (i > 0) {
    --i;
    if (++cursor_[i] < tables_[i].rows.size()) break;
    cursor_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (tables_.empty()) done_ = true;
  return out;
}

std::size_t enumerate_normalized(const Fan& fan, const GroupData& group,
                                 const std::function<bool(const ReductorSet&)>& sink, std::optional<std::size_t> limit) {
  NormalizedEnumeration stream(fan, group);
  std::size_t produced = 0;
  while (!limit || produced < *limit) {
    auto set = stream.next();
    if (!set) break;
    ++produced;
    if (!sink(*set)) break;
  }
  return produced;
}

ReductorSet normalize(const GroupData& group, const ReductorSet& set) {
  std::vector<GWeilDivisor> divisors;
  for (const auto& d : set.divisors()) divisors.push_back(difference(group, d, set[0]));
  return ReductorSet(std::move(divisors));
}

ReductorSet lambda_shift(const GroupData& group, const ReductorSet& set, const Character& lambda) {
  const Character lambda_inv = group.inverse(lambda);
  const GWeilDivisor& base = set[group.index(lambda_inv)];
  std::vector<GWeilDivisor> divisors;
  for (const auto& psi : group.characters()) {
    const auto& source = set[group.index(group.multiply(psi, lambda_inv))];
    divisors.push_back(difference(group, source, base));
  }
  return ReductorSet(std::move(divisors));
}

ReductorSet reflect(const GroupData& group, const ReductorSet& set) {
  std::vector<GWeilDivisor> divisors;
  for (const auto& chi : group.characters()) divisors.push_back(negate(group, set[group.index(group.inverse(chi))]));
  return ReductorSet(std::move(divisors));
}

BoundsReport bounds_check(const Fan& fan, const GroupData& group, const ReductorSet& set, const ReductorSet& maxshift) {
  BoundsReport report;
  report.normalized = set.normalized();
  for (std::size_t c = 0; c < set.size() && c < group.order(); ++c) {
    const std::size_t inv = group.index(group.inverse(group.character(c)));
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
      const Rational q = set.coefficient(c, i);
      const Rational upper = maxshift.coefficient(c, i);
      const Rational lower = -maxshift.coefficient(inv, i);
      if (q > upper) report.violations.push_back({c, i, true, q, upper});
      if (q < lower) report.violations.push_back({c, i, false, q, lower});
    }
  }
  return report;
}

BoundsReport bounds_check(const Fan& fan, const GroupData& group, const ReductorSet& set) {
  return bounds_check(fan, group, set, maximal_shift_family(fan, group));
}

ReductorPiece reductor_piece(const Fan& fan, const GroupData& group, const ReductorSet& set, std::size_t cone) {
  const Cone& sigma = fan.cone(cone);
  const auto dual = dual_basis(fan, sigma);
  ReductorPiece piece{cone, {}};
  for (std::size_t c = 0; c < set.size(); ++c) {
    RatVector p(fan.dimension(), 0);
    for (std::size_t k = 0; k < sigma.rays.size(); ++k) {
      const Rational q = set.coefficient(c, sigma.rays[k]);
      if (q == 0) continue;
      for (std::size_t x = 0; x < p.size(); ++x) p[x] += q * Rational(dual[k][x]);
    }
    if (!std::all_of(p.begin(), p.end(), [](const Rational& q) { return is_integer(q); })) {
      throw CongruenceViolation("p_" + group.name(set[c].character()) + " is not integral on cone " +
                                std::to_string(cone + 1));
    }
    piece.exponents.push_back(to_integer(p));
  }
  return piece;
}

bool QuiverRep::regular() const {
  for (const auto& a : arrows)
    for (const auto& q : a.local)
      if (q < 0) return false;
  return true;
}

std::vector<std::size_t> QuiverRep::surviving_at_origin() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (std::all_of(arrows[k].local.begin(), arrows[k].local.end(), [](const Rational& q) { return q == 0; }))
      out.push_back(k);
  return out;
}

QuiverRep quiver(const Fan& fan, const GroupData& group, const ReductorSet& set, std::size_t cone) {
  const ReductorPiece piece = reductor_piece(fan, group, set, cone);
  const Cone& sigma = fan.cone(cone);
  QuiverRep rep;
  rep.cone = cone;
  rep.vertices = group.order();
  for (std::size_t c = 0; c < group.order(); ++c) {
    for (std::size_t j = 0; j < group.dimension(); ++j) {
      const std::size_t target = group.step(c, j);
      IntVector label = piece.exponents[c];
      label[j] += 1;
      for (std::size_t x = 0; x < label.size(); ++x) label[x] -= piece.exponents[target][x];
      RatVector local;
      for (auto i : sigma.rays) local.push_back(pairing(fan.ray(i), label));
      rep.arrows.push_back({c, target, j, std::move(label), std::move(local)});
    }
  }
  return rep;
}

std::optional<Equivalence> equivalence_witness(const Fan& fan, const GroupData& group, const ReductorSet& first,
                                               const ReductorSet& second) {
  if (first.size() != second.size() || first.size() == 0) return std::nullopt;
  const auto shift = subtract(second[0].coeffs(), first[0].coeffs());
  for (std::size_t c = 1; c < first.size(); ++c)
    if (subtract(second[c].coeffs(), first[c].coeffs()) != shift) return std::nullopt;
  Equivalence eq{GWeilDivisor(group.trivial_character(), shift), std::nullopt};
  eq.isomorphism = linear_equivalence_witness(fan, group, GWeilDivisor(group.trivial_character()), eq.shift);
  return eq;
}

}  // namespace gorbit
