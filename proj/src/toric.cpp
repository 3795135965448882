#include "gorbit/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gorbit {

namespace mp = boost::multiprecision;

Lattice Lattice::from_group(const GroupData& group) {
  const std::size_t n = group.dimension();
  Integer scale = 1;
  for (auto d : group.orders()) scale = lcm(scale, Integer(d));

  std::vector<IntVector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row(n, 0);
    row[i] = scale;
    generators.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < group.orders().size(); ++j) {
    const Integer f = scale / group.orders()[j];
    IntVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = f * group.weight_matrix()[j][i];
    generators.push_back(std::move(row));
  }
  const auto hnf = hermite_normal_form(std::move(generators));

  Lattice l;
  l.basis_ = RatMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) l.basis_(r, c) = Rational(hnf[r][c], scale);
  l.inverse_ = invert(l.basis_);
  const Rational inv_det = 1 / mp::abs(det(l.basis_));
  l.index_ = numerator(inv_det);

  std::set<RatVector> cosets;
  for (const auto& g : group.elements()) {
    RatVector v(n, 0);
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += Rational(g[j] * group.weight_matrix()[j][i], group.orders()[j]);
    for (auto& q : v) q = frac(q);
    cosets.insert(std::move(v));
  }
  l.cosets_.assign(cosets.begin(), cosets.end());
  return l;
}

bool Lattice::contains(std::span<const Rational> v) const {
  if (v.size() != dimension()) return false;
  RatVector f(v.begin(), v.end());
  for (auto& q : f) q = frac(q);
  return std::binary_search(cosets_.begin(), cosets_.end(), f);
}

RatVector Lattice::coordinates(std::span<const Rational> v) const {
  const std::size_t n = dimension();
  RatVector c(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) c[j] += v[i] * inverse_(i, j);
  return c;
}

bool Lattice::is_primitive(std::span<const Rational> v) const {
  const RatVector c = coordinates(v);
  Integer g = 0;
  for (const auto& q : c) {
    if (!is_integer(q)) return false;
    g = gcd(g, numerator(q));
  }
  return g == 1;
}

Fan::Fan(Lattice lattice, std::vector<RatVector> rays, std::vector<Cone> cones)
    : lattice_(std::move(lattice)), rays_(std::move(rays)), cones_(std::move(cones)) {
  const std::size_t n = lattice_.dimension();
  std::set<RatVector> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != n) throw InvalidInput(ray_name(i) + " has wrong dimension");
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; }))
      throw InvalidInput(ray_name(i) + " is zero");
    if (!lattice_.contains(r)) throw InvalidInput(ray_name(i) + " is not a point of the lattice L");
    if (!seen.insert(r).second) throw InvalidInput(ray_name(i) + " duplicates another ray");
  }
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    const auto& c = cones_[k].rays;
    if (c.size() != n) throw InvalidInput("cone " + std::to_string(k + 1) + " must have exactly n rays");
    std::set<std::size_t> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) throw InvalidInput("cone " + std::to_string(k + 1) + " repeats a ray");
    for (auto i : c)
      if (i >= rays_.size()) throw InvalidInput("cone " + std::to_string(k + 1) + " references an unknown ray");
  }
}

std::optional<std::size_t> Fan::find_cone(std::vector<std::size_t> ray_indices) const {
  std::sort(ray_indices.begin(), ray_indices.end());
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    auto r = cones_[k].rays;
    std::sort(r.begin(), r.end());
    if (r == ray_indices) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> Fan::cones_containing(std::size_t ray_index) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cones_.size(); ++k)
    if (std::find(cones_[k].rays.begin(), cones_[k].rays.end(), ray_index) != cones_[k].rays.end()) out.push_back(k);
  return out;
}

Rational pairing(std::span<const Rational> e, std::span<const Integer> m) { return dot(e, m); }

std::vector<IntVector> dual_basis(const Lattice& lattice, const std::vector<RatVector>& rays) {
  const RatMatrix r(rays);
  if (!r.square() || r.rows() != lattice.dimension()) throw NotBasic("cone does not have n rays");
  const Rational d = det(r);
  if (mp::abs(d) != lattice.covolume()) {
    throw NotBasic("cone is not basic: |det| = " + to_string(mp::abs(d)) + ", expected " +
                   to_string(lattice.covolume()));
  }
  const RatMatrix inv = invert(r);
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < r.rows(); ++j) out.push_back(to_integer(inv.column(j)));
  return out;
}

std::vector<IntVector> dual_basis(const Fan& fan, const Cone& cone) {
  std::vector<RatVector> rays;
  for (auto i : cone.rays) rays.push_back(fan.ray(i));
  return dual_basis(fan.lattice(), rays);
}

std::vector<RatVector> junior_simplex(const Lattice& lattice) {
  const std::size_t n = lattice.dimension();
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector u(n, 0);
    u[i] = 1;
    out.push_back(std::move(u));
  }
  // Cosets are sorted and reduced to [0,1)^n; a point of L in the closed
  // simplex is either a unit vector or its own coset representative.
  for (const auto& c : lattice.cosets()) {
    Rational s = 0;
    for (const auto& q : c) s += q;
    if (s == 1) out.push_back(c);
  }
  return out;
}

Rational discrepancy(std::span<const Rational> e) {
  Rational s = 0;
  for (const auto& q : e) s += q;
  return s - 1;
}

Rational x_valuation_on_X(const Lattice& lattice, std::size_t axis) {
  if (axis >= lattice.dimension()) throw InvalidInput("axis out of range");
  Rational best = 1;
  for (const auto& c : lattice.cosets()) {
    bool on_axis = c[axis] > 0;
    for (std::size_t k = 0; k < c.size() && on_axis; ++k)
      if (k != axis && c[k] != 0) on_axis = false;
    if (on_axis && c[axis] < best) best = c[axis];
  }
  return best;
}

bool is_crepant(const Fan& fan) {
  const auto junior = junior_simplex(fan.lattice());
  const std::set<RatVector> a(junior.begin(), junior.end());
  const std::set<RatVector> b(fan.rays().begin(), fan.rays().end());
  return a == b;
}

namespace {

// Facet normals of the simplicial cone spanned by `rays`: x is in the cone
// iff every normal pairs nonnegatively with x.
std::vector<RatVector> facet_normals(const std::vector<RatVector>& rays) {
  const RatMatrix inv = invert(RatMatrix(rays));
  std::vector<RatVector> normals;
  for (std::size_t j = 0; j < inv.cols(); ++j) normals.push_back(inv.column(j));
  return normals;
}

void for_each_subset(std::size_t total, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > total) return;
  while (true) {
    fn(idx);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == total - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<RatVector> intersection_rays(const std::vector<RatVector>& first, const std::vector<RatVector>& second) {
  auto normals = facet_normals(first);
  for (auto& v : facet_normals(second)) normals.push_back(std::move(v));
  const std::size_t n = first.size();

  std::set<RatVector> found;
  for_each_subset(normals.size(), n - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<RatVector> rows;
    for (auto i : subset) rows.push_back(normals[i]);
    if (n == 1) return;
    const auto kernel = null_space(RatMatrix(rows));
    if (kernel.size() != 1) return;
    for (int sign : {1, -1}) {
      RatVector v = kernel.front();
      for (auto& q : v) q *= sign;
      bool inside = true;
      for (const auto& a : normals)
        if (dot(std::span<const Rational>(a), std::span<const Rational>(v)) < 0) {
          inside = false;
          break;
        }
      if (!inside) continue;
      Rational s = 0;
      for (const auto& q : v) s += q;
      if (s == 0) continue;
      for (auto& q : v) q /= s;
      found.insert(std::move(v));
    }
  });
  return {found.begin(), found.end()};
}

bool FanReport::all_basic() const {
  return std::all_of(cones.begin(), cones.end(), [](const ConeCheck& c) { return c.basic; });
}

bool FanReport::ok() const {
  return all_basic() && rays_outside_orthant.empty() && rays_not_primitive.empty() && rays_without_cone.empty() &&
         overlaps.empty() && covers();
}

FanReport validate_fan(const Fan& fan) {
  FanReport report;
  const auto& lattice = fan.lattice();

  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    const auto& r = fan.ray(i);
    if (std::any_of(r.begin(), r.end(), [](const Rational& q) { return q < 0; })) report.rays_outside_orthant.push_back(i);
    if (!lattice.is_primitive(r)) report.rays_not_primitive.push_back(i);
    if (fan.cones_containing(i).empty()) report.rays_without_cone.push_back(i);
  }

  std::vector<bool> degenerate(fan.cones().size(), false);
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    std::vector<RatVector> rows;
    for (auto i : fan.cone(k).rays) rows.push_back(fan.ray(i));
    const Rational d = det(RatMatrix(rows));
    degenerate[k] = d == 0;
    report.cones.push_back({k, d, mp::abs(d) == lattice.covolume()});
  }

  for (std::size_t a = 0; a < fan.cones().size(); ++a) {
    for (std::size_t b = a + 1; b < fan.cones().size(); ++b) {
      if (degenerate[a] || degenerate[b]) continue;
      std::vector<RatVector> ra;
      std::vector<RatVector> rb;
      for (auto i : fan.cone(a).rays) ra.push_back(fan.ray(i));
      for (auto i : fan.cone(b).rays) rb.push_back(fan.ray(i));
      const std::set<std::size_t> shared_b(fan.cone(b).rays.begin(), fan.cone(b).rays.end());
      if (shared_b == std::set<std::size_t>(fan.cone(a).rays.begin(), fan.cone(a).rays.end())) {
        report.overlaps.push_back({a, b});
        continue;
      }
      // The intersection is a common face iff each of its extreme rays has
      // zero coordinates (in cone a's ray basis) on rays not shared with b.
      const RatMatrix inv = invert(RatMatrix(ra));
      bool proper = true;
      for (const auto& v : intersection_rays(ra, rb)) {
        for (std::size_t j = 0; j < ra.size() && proper; ++j) {
          if (shared_b.count(fan.cone(a).rays[j])) continue;
          Rational coeff = 0;
          for (std::size_t i = 0; i < v.size(); ++i) coeff += v[i] * inv(i, j);
          if (coeff != 0) proper = false;
        }
        if (!proper) break;
      }
      if (!proper) report.overlaps.push_back({a, b});
    }
  }

  if (report.rays_outside_orthant.empty() && std::none_of(degenerate.begin(), degenerate.end(), [](bool d) { return d; })) {
    Rational volume = 0;
    for (const auto& cone : fan.cones()) {
      std::vector<RatVector> projected;
      for (auto i : cone.rays) {
        RatVector p = fan.ray(i);
        const Rational s = discrepancy(p) + 1;
        for (auto& q : p) q /= s;
        projected.push_back(std::move(p));
      }
      volume += mp::abs(det(RatMatrix(projected)));
    }
    report.covered_volume = volume;
  } else {
    report.warnings.push_back("support coverage not checked: degenerate cone or ray outside the orthant");
  }
  if (!is_crepant(fan)) report.warnings.push_back("fan is not crepant: rays differ from the junior simplex");
  return report;
}

}  // namespace gorbit
