#include "gorbit/group.hpp"

#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

namespace gorbit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t d) {
  const std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}

std::int64_t mod(const Integer& a, std::int64_t d) {
  Integer r = a % d;
  if (r < 0) r += d;
  return r.convert_to<std::int64_t>();
}

}  // namespace

GroupData::GroupData(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> weight_matrix)
    : orders_(std::move(orders)), weights_(std::move(weight_matrix)) {
  if (weights_.size() != orders_.size()) throw InvalidInput("weight matrix needs one row per cyclic factor");
  if (orders_.empty()) throw InvalidInput("at least one cyclic factor is required");
  dimension_ = weights_.front().size();
  if (dimension_ == 0) throw InvalidInput("ambient dimension must be positive");
  constexpr std::size_t kMaxOrder = std::size_t{1} << 24;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (orders_[j] < 1) throw InvalidInput("cyclic orders must be >= 1");
    if (weights_[j].size() != dimension_) throw InvalidInput("weight matrix rows must have equal length");
    for (auto& w : weights_[j]) w = mod(w, orders_[j]);
    order_ *= static_cast<std::size_t>(orders_[j]);
    if (order_ > kMaxOrder) throw InvalidInput("group order too large");
  }

  all_.reserve(order_);
  for (std::size_t idx = 0; idx < order_; ++idx) {
    std::vector<std::int64_t> res(orders_.size());
    std::size_t rest = idx;
    for (std::size_t j = orders_.size(); j-- > 0;) {
      res[j] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(orders_[j]));
      rest /= static_cast<std::size_t>(orders_[j]);
    }
    all_.emplace_back(std::move(res));
  }

  for (std::size_t i = 0; i < dimension_; ++i) {
    std::vector<std::int64_t> res(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) res[j] = weights_[j][i];
    generator_weights_.emplace_back(std::move(res));
  }

  steps_.resize(order_ * dimension_);
  for (std::size_t c = 0; c < order_; ++c)
    for (std::size_t i = 0; i < dimension_; ++i) steps_[c * dimension_ + i] = index(multiply(all_[c], generator_weights_[i]));

  // BFS from the trivial character; the resulting tree gives minimal-degree
  // representatives and doubles as the surjectivity check.
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(order_, kUnseen);
  std::vector<std::size_t> via(order_, 0);
  parent[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < dimension_; ++i) {
      const std::size_t next = step(c, i);
      if (parent[next] != kUnseen) continue;
      parent[next] = c;
      via[next] = i;
      queue.push_back(next);
    }
  }
  representatives_.assign(order_, IntVector(dimension_, 0));
  for (std::size_t c = 0; c < order_; ++c) {
    if (parent[c] == kUnseen) {
      throw InvalidInput("the action is not faithful: coordinate weights do not generate the character group");
    }
    for (std::size_t cur = c; cur != 0; cur = parent[cur]) representatives_[c][via[cur]] += 1;
  }
}

GroupData GroupData::cyclic(std::int64_t order, std::vector<std::int64_t> weights) {
  return GroupData({order}, {std::move(weights)});
}

GroupData GroupData::trivial(std::size_t dimension) {
  return GroupData({1}, {std::vector<std::int64_t>(dimension, 0)});
}

bool GroupData::in_sl() const {
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::int64_t s = 0;
    for (auto w : weights_[j]) s = mod(s + w, orders_[j]);
    if (s != 0) return false;
  }
  return true;
}

Character GroupData::trivial_character() const { return all_.front(); }

Character GroupData::weight(std::span<const Integer> exponent) const {
  if (exponent.size() != dimension_) throw Error("weight: exponent has wrong length");
  std::vector<std::int64_t> res(orders_.size(), 0);
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < dimension_; ++i) s += exponent[i] * weights_[j][i];
    res[j] = mod(s, orders_[j]);
  }
  return Character(std::move(res));
}

Character GroupData::multiply(const Character& a, const Character& b) const {
  std::vector<std::int64_t> res(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) res[j] = mod(a.residues()[j] + b.residues()[j], orders_[j]);
  return Character(std::move(res));
}

Character GroupData::inverse(const Character& a) const {
  std::vector<std::int64_t> res(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) res[j] = mod(-a.residues()[j], orders_[j]);
  return Character(std::move(res));
}

Character GroupData::power(const Character& a, std::int64_t k) const {
  std::vector<std::int64_t> res(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) res[j] = mod(Integer(a.residues()[j]) * k, orders_[j]);
  return Character(std::move(res));
}

std::vector<Character> GroupData::characters() const { return all_; }

void GroupData::check(const Character& chi) const {
  const auto& r = chi.residues();
  if (r.size() != orders_.size()) throw InvalidInput("character has wrong number of residues");
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] < 0 || r[j] >= orders_[j]) throw InvalidInput("character residue out of range");
}

std::size_t GroupData::index(const Character& chi) const {
  check(chi);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j)
    idx = idx * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(chi.residues()[j]);
  return idx;
}

IntVector GroupData::representative_monomial(const Character& chi) const { return representatives_[index(chi)]; }

std::vector<std::vector<std::int64_t>> GroupData::elements() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(order_);
  for (const auto& c : all_) out.push_back(c.residues());
  return out;
}

std::string GroupData::name(const Character& chi) const {
  if (is_cyclic()) return "chi_" + std::to_string(chi.residues()[0]);
  std::ostringstream os;
  os << "chi(";
  for (std::size_t j = 0; j < chi.residues().size(); ++j) os << (j ? "," : "") << chi.residues()[j];
  os << ")";
  return os.str();
}

Character GroupData::parse_character(const std::string& text) const {
  std::string s = text;
  for (const std::string prefix : {"chi_", "chi", "χ_", "χ"}) {
    if (s.rfind(prefix, 0) == 0) {
      s = s.substr(prefix.size());
      break;
    }
  }
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::int64_t> res;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const Rational q = parse_rational(part);
    if (!is_integer(q)) throw InvalidInput("character residues must be integers: '" + text + "'");
    res.push_back(numerator(q).convert_to<std::int64_t>());
  }
  if (res.size() != orders_.size()) throw InvalidInput("character '" + text + "' has wrong number of residues");
  for (std::size_t j = 0; j < res.size(); ++j) res[j] = mod(res[j], orders_[j]);
  return Character(std::move(res));
}

}  // namespace gorbit
