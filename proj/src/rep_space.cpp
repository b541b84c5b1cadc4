#include "lfd/rep_space.hpp"

#include <algorithm>
#include <functional>

namespace lfd {

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

std::vector<DimVector> perp_dimension_vectors(const Quiver& q, const DimVector& d, long long entry_bound, Side side) {
  require_same_length(q, d);
  if (entry_bound < 1) throw InputError("entry bound must be at least 1");
  const std::size_t n = q.vertex_count();
  const IntMatrix e = euler_matrix(q);
  // Linear constraint w . x = 0 with w = E^T d (right) or E d (left).
  std::vector<long long> w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[j] += side == Side::right ? d[i] * e(i, j) : e(j, i) * d[i];

  std::optional<std::size_t> solved;
  for (std::size_t j = 0; j < n; ++j)
    if (w[j] != 0 && (!solved || std::abs(w[j]) < std::abs(w[*solved]))) solved = j;

  std::vector<DimVector> out;
  DimVector x = DimVector::zero(n);
  while (true) {
    std::size_t i = 0;
    while (i < n && (i == solved || x[i] == entry_bound)) {
      if (i != solved) x[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++x[i];
    if (solved) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != *solved) s += w[j] * x[j];
      if (s % w[*solved] != 0) continue;
      const long long v = -s / w[*solved];
      if (v < 0 || v > entry_bound) continue;
      x[*solved] = v;
    }
    if (!x.is_zero() && tits_form(q, x) == 1) out.push_back(x);
    if (solved) x[*solved] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PerpCandidate> simple_perp_candidates(const std::vector<PerpCandidate>& candidates) {
  std::vector<PerpCandidate> out;
  for (Side side : {Side::left, Side::right}) {
    std::vector<DimVector> pool;
    for (const auto& c : candidates)
      if (c.side == side) pool.push_back(c.e);
    std::unordered_set<DimVector, DimVectorHash> members(pool.begin(), pool.end());
    std::unordered_map<DimVector, bool, DimVectorHash> memo;
    // Whether v is a sum of one or more pool vectors.
    std::function<bool(const DimVector&)> sum_of_pool = [&](const DimVector& v) -> bool {
      if (members.count(v)) return true;
      if (auto it = memo.find(v); it != memo.end()) return it->second;
      bool found = false;
      for (const auto& c : pool)
        if (c.less(v) && sum_of_pool(v - c)) {
          found = true;
          break;
        }
      memo.emplace(v, found);
      return found;
    };
    for (const auto& v : pool) {
      bool split = false;
      for (const auto& c : pool)
        if (c.less(v) && sum_of_pool(v - c)) {
          split = true;
          break;
        }
      if (!split) out.push_back({v, side});
    }
  }
  return out;
}

Json representation_to_json(const Representation<PrimeField>& m) {
  Json j;
  j["modulus"] = m.field.characteristic();
  j["dim"] = dim_to_json(m.quiver, m.dim);
  Json arrows = Json::object();
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.maps[a].cols(); ++c) row.push_back(m.maps[a](r, c));
      rows.push_back(row);
    }
    arrows[std::to_string(a)] = rows;
  }
  j["arrows"] = arrows;
  return j;
}

Representation<PrimeField> representation_from_json(const Quiver& q, const Json& j) {
  try {
    const PrimeField k(j.at("modulus").get<std::uint64_t>());
    DimVector d = DimVector::zero(q.vertex_count());
    for (auto it = j.at("dim").begin(); it != j.at("dim").end(); ++it) d[q.index_of(it.key())] = it.value().get<long long>();
    auto m = zero_representation(k, q, d);
    for (auto it = j.at("arrows").begin(); it != j.at("arrows").end(); ++it) {
      const std::size_t a = std::stoul(it.key());
      if (a >= q.arrow_count()) throw InputError("arrow id out of range: " + it.key());
      auto& f = m.maps[a];
      const auto& rows = it.value();
      if (rows.size() != f.rows()) throw DimensionMismatch("arrow " + it.key() + ": wrong number of rows");
      for (std::size_t r = 0; r < f.rows(); ++r) {
        if (rows[r].size() != f.cols()) throw DimensionMismatch("arrow " + it.key() + ": wrong number of columns");
        for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = k.from_int(rows[r][c].get<long long>());
      }
    }
    return m;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed representation JSON: ") + e.what());
  }
}

}  // namespace lfd
