#include "lfd/roots.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "lfd/errors.hpp"
#include "lfd/linalg.hpp"

namespace lfd {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

DimVector reflect(const Quiver& q, std::size_t k, const DimVector& d) {
  require_same_length(q, d);
  if (k >= q.vertex_count()) throw InputError("vertex index out of range");
  if (q.has_loop_at(k)) throw LoopAtVertex("no reflection at vertex " + q.name(k) + ": it carries a loop");
  DimVector r = d;
  r[k] -= sym_form(q, d, DimVector::unit(q.vertex_count(), k));
  return r;
}

namespace {

bool is_unit(const DimVector& d) {
  long long ones = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 1) {
      ++ones;
    } else if (d[i] != 0) {
      return false;
    }
  }
  return ones == 1;
}

// Height descent for a positive vector with q_Q = 1. Returns nullopt when it
// gets stuck on loop vertices.
std::optional<Verdict> descend(const Quiver& q, DimVector d) {
  const std::size_t n = q.vertex_count();
  while (!is_unit(d)) {
    std::optional<std::size_t> step;
    for (std::size_t k = 0; k < n && !step; ++k) {
      if (d[k] > 0 && !q.has_loop_at(k) && sym_form(q, d, DimVector::unit(n, k)) > 0) step = k;
    }
    if (!step) return std::nullopt;
    d = reflect(q, *step, d);
    if (!d.is_nonnegative()) return Verdict::no;
  }
  return Verdict::yes;
}

}  // namespace

Verdict is_real_root(const Quiver& q, const DimVector& d, std::size_t depth_bound) {
  require_same_length(q, d);
  if (tits_form(q, d) != 1) return Verdict::no;
  if (d.is_nonnegative()) {
    if (auto v = descend(q, d)) return *v;
  } else if ((-d).is_nonnegative()) {
    if (auto v = descend(q, -d)) return *v;
  } else {
    return Verdict::no;  // roots are positive or negative
  }
  std::unordered_set<DimVector, DimVectorHash> seen{d};
  std::deque<DimVector> queue{d};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (is_unit(v) || is_unit(-v)) return Verdict::yes;
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
      if (q.has_loop_at(k)) continue;
      auto w = reflect(q, k, v);
      if (seen.insert(w).second) {
        if (seen.size() > depth_bound) return Verdict::inconclusive;
        queue.push_back(std::move(w));
      }
    }
  }
  return Verdict::no;
}

namespace {

bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : q.arrows()) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : q.arrows())
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return seen == n;
}

IntMatrix to_int(const FieldMatrix<RationalField>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) throw Error("Coxeter matrix is not integral");
      out(r, c) = m(r, c).get_num().get_si();
    }
  return out;
}

}  // namespace

CoxeterMatrix coxeter_matrix(const Quiver& q) {
  if (!is_acyclic(q)) throw CyclicQuiver("Coxeter transformation needs a quiver without oriented cycles");
  RationalField k;
  const auto e = to_field(k, euler_matrix(q));
  const auto e_inv = inverse(k, e);
  const auto et = e.transposed();
  const auto et_inv = e_inv.transposed();
  CoxeterMatrix c;
  c.phi = -to_int(multiply(k, e_inv, et));
  c.phi_inv = -to_int(multiply(k, et_inv, e));
  return c;
}

DimVector apply(const IntMatrix& m, const DimVector& d) { return DimVector(m * d.entries()); }

DimVector tau_dim(const CoxeterMatrix& c, const DimVector& d, long steps) {
  DimVector r = d;
  const IntMatrix& m = steps >= 0 ? c.phi : c.phi_inv;
  for (long i = 0; i < std::abs(steps); ++i) r = apply(m, r);
  return r;
}

DimVector tau_dim(const Quiver& q, const DimVector& d, long steps) {
  require_same_length(q, d);
  return tau_dim(coxeter_matrix(q), d, steps);
}

long long defect(const Quiver& q, const DimVector& d) {
  const auto g = classify_graph(q);
  if (g.kind != GraphClass::Kind::Tame) throw NotTame("defect is defined for tame quivers only");
  return euler_form(q, *g.delta, d);
}

const DimVector& Tube::simple(long slot) const {
  const long p = static_cast<long>(period());
  return simples[static_cast<std::size_t>(((slot % p) + p) % p)];
}

DimVector Tube::brick_dim(long slot, std::size_t length) const {
  DimVector d = DimVector::zero(simples.front().size());
  for (std::size_t i = 0; i < length; ++i) d = d + simple(slot + static_cast<long>(i));
  return d;
}

std::vector<DimVector> regular_real_roots_below_delta(const Quiver& q, long long entry_bound) {
  const auto g = classify_graph(q);
  if (g.kind != GraphClass::Kind::Tame) throw NotTame("tube search needs a tame quiver");
  const DimVector& delta = *g.delta;
  const std::size_t n = q.vertex_count();
  DimVector cap = delta;
  if (entry_bound > 0)
    for (std::size_t i = 0; i < n; ++i) cap[i] = std::min(cap[i], entry_bound);

  std::vector<DimVector> out;
  DimVector e = DimVector::zero(n);
  while (true) {
    std::size_t i = 0;
    while (i < n && e[i] == cap[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
    if (e == delta) continue;
    if (tits_form(q, e) == 1 && euler_form(q, delta, e) == 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tube> find_tubes(const Quiver& q, long long entry_bound) {
  const auto g = classify_graph(q);
  if (g.kind != GraphClass::Kind::Tame) throw NotTame("tube search needs a tame quiver");
  const auto cox = coxeter_matrix(q);
  const auto candidates = regular_real_roots_below_delta(q, entry_bound);
  std::unordered_set<DimVector, DimVectorHash> pool(candidates.begin(), candidates.end());
  std::unordered_set<DimVector, DimVectorHash> visited;

  std::vector<Tube> tubes;
  for (const auto& start : candidates) {  // sorted, so each orbit starts at its smallest member
    if (visited.count(start)) continue;
    std::vector<DimVector> orbit{start};
    bool closed = true;
    DimVector cur = apply(cox.phi, start);
    while (cur != start) {
      if (!pool.count(cur) || orbit.size() > candidates.size()) {
        closed = false;
        break;
      }
      orbit.push_back(cur);
      cur = apply(cox.phi, cur);
    }
    for (const auto& v : orbit) visited.insert(v);
    if (!closed) continue;
    DimVector sum = DimVector::zero(q.vertex_count());
    for (const auto& v : orbit) sum = sum + v;
    if (sum == *g.delta) tubes.push_back(Tube{std::move(orbit)});
  }
  std::stable_sort(tubes.begin(), tubes.end(), [](const Tube& a, const Tube& b) { return a.period() > b.period(); });
  return tubes;
}

bool tube_ext_nonzero(const Tube& t, const TubeBrick& x1, const TubeBrick& x2) {
  const long p = static_cast<long>(t.period());
  if (x1.length < 1 || x2.length < 1 || static_cast<long>(x1.length) > p || static_cast<long>(x2.length) > p)
    throw InputError("tube bricks need 1 <= length <= period");
  const long r1 = static_cast<long>(x1.length), r2 = static_cast<long>(x2.length);
  auto mod = [p](long v) { return ((v % p) + p) % p; };
  for (long a = 1; a <= r1; ++a) {
    const long b = a + r2 - r1;
    if (b < 1 || b > r2) continue;
    const bool tops = mod(x2.slot) == mod(x1.slot + a);
    const bool socles = mod(x2.slot + r2 - 1) == mod(x1.slot + r1 - 1 + b);
    if (tops && socles) return true;
  }
  return false;
}

bool tube_chain_acyclic(const Tube& t, const std::vector<TubeBrick>& parts) {
  const std::size_t k = parts.size();
  DimVector total = DimVector::zero(t.simples.front().size());
  for (const auto& x : parts) total = total + t.brick_dim(x.slot, x.length);
  DimVector delta = DimVector::zero(total.size());
  for (const auto& s : t.simples) delta = delta + s;
  if (!total.less(delta)) throw InputError("parts must have total dimension strictly below delta");

  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (tube_ext_nonzero(t, parts[i], parts[j])) out[i].push_back(j);
  // Kahn's algorithm; self-loops keep a vertex from ever becoming ready.
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (auto j : out[i]) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < k; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto i = ready.back();
    ready.pop_back();
    ++removed;
    for (auto j : out[i])
      if (--indeg[j] == 0) ready.push_back(j);
  }
  return removed == k;
}

}  // namespace lfd
