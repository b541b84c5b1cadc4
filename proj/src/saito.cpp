#include "lfd/saito.hpp"

#include <algorithm>
#include <numeric>

namespace lfd {

void LinearForm::add(std::size_t coordinate, long long coefficient) {
  if (coefficient == 0) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), coordinate,
                             [](const auto& t, std::size_t c) { return t.first < c; });
  if (it != terms.end() && it->first == coordinate) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  } else {
    terms.insert(it, {coordinate, coefficient});
  }
}

namespace {

std::vector<std::size_t> arrow_offsets(const Quiver& q, const DimVector& d) {
  std::vector<std::size_t> off(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    off[a + 1] = off[a] + static_cast<std::size_t>(d[q.arrow(a).source] * d[q.arrow(a).target]);
  return off;
}

}  // namespace

std::size_t rep_coordinate(const Quiver& q, const DimVector& d, std::size_t arrow, std::size_t row, std::size_t col) {
  std::size_t off = 0;
  for (std::size_t a = 0; a < arrow; ++a) off += static_cast<std::size_t>(d[q.arrow(a).source] * d[q.arrow(a).target]);
  return off + col * static_cast<std::size_t>(d[q.arrow(arrow).target]) + row;
}

std::vector<LinearForm> unit_vector_field(const Quiver& q, const DimVector& d, const MatrixUnit& u) {
  const auto off = arrow_offsets(q, d);
  auto coord = [&](std::size_t a, long long r, long long c) {
    return off[a] + static_cast<std::size_t>(c * d[q.arrow(a).target] + r);
  };
  const auto r = static_cast<long long>(u.row), c = static_cast<long long>(u.col);
  std::vector<LinearForm> field(off.back());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (ar.target == u.vertex)  // E_rc x_a: row r receives row c of x_a
      for (long long j = 0; j < d[ar.source]; ++j) field[coord(a, r, j)].add(coord(a, c, j), 1);
    if (ar.source == u.vertex)  // -x_a E_rc: column c receives column r of x_a
      for (long long k = 0; k < d[ar.target]; ++k) field[coord(a, k, c)].add(coord(a, k, r), -1);
  }
  return field;
}

SaitoMatrix build_saito_matrix(const Quiver& q, const DimVector& d) {
  require_same_length(q, d);
  if (!q.is_connected()) throw DisconnectedQuiver("Saito matrix needs a connected quiver");
  if (!d.is_sincere()) throw NotSincere("dimension vector " + d.to_string() + " is not sincere");
  long long units = 0;
  for (std::size_t i = 0; i < d.size(); ++i) units += d[i] * d[i];
  const long long n = rep_dimension(q, d);
  if (units - 1 != n)
    throw NonSquare("dim gl(Q,d) - 1 = " + std::to_string(units - 1) + " but dim Rep(Q,d) = " + std::to_string(n));

  SaitoMatrix s{q, d, {}, {}};
  const std::size_t last = q.vertex_count() - 1;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (long long r = 0; r < d[i]; ++r)
      for (long long c = 0; c < d[i]; ++c) {
        if (i == last && r == c && r == d[i] - 1) continue;
        const MatrixUnit u{i, static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
        s.rows.push_back(u);
        s.entries.push_back(unit_vector_field(q, d, u));
      }
  return s;
}

FieldPoly<PrimeField> restrict_to_line(const SaitoMatrix& s, const PrimeField& k,
                                       const std::vector<PrimeField::Element>& a,
                                       const std::vector<PrimeField::Element>& b) {
  const std::size_t n = s.size();
  if (k.characteristic() <= n) throw PrimeTooSmall("prime must exceed the degree " + std::to_string(n));
  std::vector<std::pair<PrimeField::Element, PrimeField::Element>> points;
  std::vector<PrimeField::Element> x(a.size());
  for (std::size_t t = 0; t <= n; ++t) {
    const auto tt = k.from_int(static_cast<long long>(t));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = k.add(a[i], k.mul(tt, b[i]));
    points.push_back({tt, evaluate_f(s, k, x)});
  }
  return interpolate(k, points);
}

const char* to_string(Reducedness r) {
  switch (r) {
    case Reducedness::reduced:
      return "reduced";
    case Reducedness::not_reduced:
      return "not_reduced";
    case Reducedness::identically_zero:
      return "identically_zero";
    case Reducedness::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::vector<std::uint64_t> primes_below(std::uint64_t start, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = start; p >= 3 && out.size() < count; --p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

ReducednessResult reducedness_test(const SaitoMatrix& s, const std::vector<std::uint64_t>& primes, std::size_t trials,
                                   Rng& rng, std::uint64_t seed_for_record) {
  if (primes.empty()) throw InputError("reducedness test needs at least one prime");
  if (trials < 1) throw InputError("reducedness test needs at least one trial");
  const long long n = static_cast<long long>(s.size());
  ReducednessResult res;
  res.provenance = {primes, seed_for_record, trials};
  for (auto p : primes)
    if (p <= static_cast<std::uint64_t>(n)) throw PrimeTooSmall("prime " + std::to_string(p) + " does not exceed the degree " + std::to_string(n));
  if (n == 0) {  // f is a nonzero constant: the empty divisor
    res.verdict = Reducedness::reduced;
    return res;
  }
  const std::size_t dim = static_cast<std::size_t>(rep_dimension(s.quiver, s.dim));
  bool all_zero = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const PrimeField k(primes[t % primes.size()]);
    std::vector<PrimeField::Element> a(dim), b(dim);
    for (auto& v : a) v = k.random(rng);
    for (auto& v : b) v = k.random(rng);
    const auto g = restrict_to_line(s, k, a, b);
    if (!g.is_zero()) all_zero = false;
    if (g.degree() != n) continue;
    ++res.full_degree_trials;
    if (is_squarefree(k, g)) ++res.squarefree_witnesses;
  }
  if (res.squarefree_witnesses > 0) {
    res.verdict = Reducedness::reduced;
  } else if (all_zero) {
    res.verdict = Reducedness::identically_zero;
  } else if (res.full_degree_trials > 0) {
    res.verdict = Reducedness::not_reduced;
  } else {
    res.verdict = Reducedness::inconclusive;
  }
  return res;
}

bool single_coordinate_basis_check(const SaitoMatrix& s) {
  for (const auto& row : s.entries) {
    std::vector<std::size_t> used;
    for (const auto& e : row) {
      if (e.constant != 0 || e.terms.size() > 1) return false;
      if (e.terms.size() == 1) used.push_back(e.terms.front().first);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;
  }
  return true;
}

DimVector character(const Quiver& q, const DimVector& m, Side side) {
  require_same_length(q, m);
  const auto e = euler_matrix(q);
  DimVector chi = DimVector::zero(q.vertex_count());
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = 0; j < chi.size(); ++j) chi[i] += side == Side::right ? e(i, j) * m[j] : -e(j, i) * m[j];
  return chi;
}

long long component_degree(const Quiver& q, const DimVector& d, const DimVector& m, Side side) {
  require_same_length(q, d);
  require_same_length(q, m);
  if (!is_tree(q)) throw InputError("component degrees need a tree quiver");
  const long long pairing = side == Side::right ? euler_form(q, d, m) : euler_form(q, m, d);
  if (pairing != 0)
    throw OrthogonalityViolated("Euler pairing of " + d.to_string() + " and " + m.to_string() + " on the " +
                                to_string(side) + " side is " + std::to_string(pairing));
  const auto h = stages(q);
  const auto chi = character(q, m, side);
  long long deg = 0;
  for (std::size_t i = 0; i < d.size(); ++i) deg += h.level[i] * d[i] * chi[i];
  return deg;
}

DegreeSumCertificate degree_sum_check(const Quiver& q, const DimVector& d, const std::vector<PerpCandidate>& perps) {
  DegreeSumCertificate cert;
  for (const auto& p : perps) cert.degrees.push_back(component_degree(q, d, p.e, p.side));
  const std::size_t want = q.vertex_count() - 1;
  const long long target = rep_dimension(q, d);
  std::size_t solutions = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, long long)> dfs = [&](std::size_t from, long long sum) {
    if (solutions >= 2) return;
    if (chosen.size() == want) {
      if (sum == target) {
        if (solutions++ == 0) cert.subset = chosen;
      }
      return;
    }
    for (std::size_t i = from; i < perps.size(); ++i) {
      chosen.push_back(i);
      dfs(i + 1, sum + cert.degrees[i]);
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  cert.found = solutions > 0;
  cert.non_unique = solutions > 1;
  return cert;
}

const char* to_string(LfdVerdict v) {
  switch (v) {
    case LfdVerdict::linear_free:
      return "linear_free";
    case LfdVerdict::not_linear_free:
      return "not_linear_free";
    case LfdVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ComponentDegrees component_degrees(const Quiver& q, const DimVector& d, const Config& config, Side side, Rng& rng) {
  const PrimeField k(config.prime);
  ComponentDegrees out;
  const auto generic = sample_brick(q, d, k, rng, config.trials);
  if (!generic) return out;
  const long long bound = config.entry_bound > 0 ? config.entry_bound : std::max<long long>(1, d.max_entry());
  out.simples = simple_perp_candidates(perp_candidates(*generic, bound, config.trials, side, rng));
  out.certificate = degree_sum_check(q, d, out.simples);
  for (auto i : out.certificate.subset) out.degrees.push_back(out.certificate.degrees[i]);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

namespace {

LfdReport sincere_verdict(const Quiver& q, const DimVector& d, const Config& config) {
  LfdReport rep;
  rep.method =
      "Saito criterion: f = det(Saito matrix) reduced of degree dim Rep(Q,d); reducedness by squarefree "
      "restrictions to random lines over F_p (replaces the minimal-degeneration condition)";
  rep.provenance = {primes_below(config.prime, config.trials), config.seed, config.trials};
  rep.q_value = tits_form(q, d);
  rep.degree = rep_dimension(q, d);
  rep.tree = is_tree(q);
  Rng rng(config.seed);

  if (!rep.tree) rep.reasons.push_back("not a tree");
  if (rep.q_value != 1) rep.reasons.push_back("q_Q(d) = " + std::to_string(rep.q_value) + " != 1 (NonSquare)");
  if (!rep.reasons.empty()) {
    rep.verdict = LfdVerdict::not_linear_free;
    return rep;
  }

  const PrimeField k(config.prime);
  rep.schur = is_schur_root(q, d, k, rng, config.trials);
  if (*rep.schur != Verdict::yes) rep.reasons.push_back("no brick found in " + std::to_string(config.trials) + " samples");

  const auto s = build_saito_matrix(q, d);
  rep.reduced = reducedness_test(s, rep.provenance.primes, config.trials, rng, config.seed);
  switch (rep.reduced->verdict) {
    case Reducedness::reduced:
      rep.verdict = LfdVerdict::linear_free;
      break;
    case Reducedness::not_reduced:
      rep.verdict = LfdVerdict::not_linear_free;
      rep.reasons.push_back("f is not reduced");
      break;
    case Reducedness::identically_zero:
      rep.verdict = LfdVerdict::not_linear_free;
      rep.reasons.push_back("f vanishes identically (no open orbit)");
      break;
    case Reducedness::inconclusive:
      rep.verdict = LfdVerdict::inconclusive;
      rep.reasons.push_back("no restriction of full degree");
      break;
  }
  if (rep.verdict == LfdVerdict::linear_free) rep.reasons.clear();
  if (config.component_degrees && rep.verdict == LfdVerdict::linear_free && rep.degree > 0)
    rep.components = component_degrees(q, d, config, Side::right, rng);
  return rep;
}

}  // namespace

LfdReport lfd_verdict(const Quiver& q, const DimVector& d, const Config& config) {
  require_same_length(q, d);
  if (!d.is_nonnegative()) throw InputError("dimension vector " + d.to_string() + " has a negative entry");
  if (d.is_sincere()) return sincere_verdict(q, d, config);

  // Rep(Q,d) only sees the full subquiver on the support of d.
  auto sup = support_subquiver(q, d);
  if (sup.quiver.vertex_count() == 0 || !sup.quiver.is_connected()) {
    LfdReport rep;
    rep.method = "support check";
    rep.provenance = {primes_below(config.prime, config.trials), config.seed, config.trials};
    rep.q_value = tits_form(q, d);
    rep.degree = rep_dimension(q, d);
    rep.tree = is_tree(sup.quiver);
    rep.reasons.push_back(sup.quiver.vertex_count() == 0 ? "zero dimension vector" : "support is disconnected");
    rep.verdict = LfdVerdict::not_linear_free;
    rep.support = std::move(sup);
    return rep;
  }
  auto rep = sincere_verdict(sup.quiver, sup.dim, config);
  rep.support = std::move(sup);
  return rep;
}

Json to_json(const Provenance& p) {
  return Json{{"primes", p.primes}, {"seed", p.seed}, {"trials", p.trials}};
}

Json to_json(const ComponentDegrees& c, const Quiver& q) {
  Json simples = Json::array();
  for (std::size_t i = 0; i < c.simples.size(); ++i) {
    Json e{{"dim", dim_to_json(q, c.simples[i].e)}, {"side", to_string(c.simples[i].side)}};
    if (i < c.certificate.degrees.size()) e["degree"] = c.certificate.degrees[i];
    simples.push_back(e);
  }
  return Json{{"perp_simples", simples},
              {"degrees", c.degrees},
              {"degree_sum_certified", c.certificate.found},
              {"certifying_subset", c.certificate.subset},
              {"non_unique", c.certificate.non_unique}};
}

Json to_json(const LfdReport& r, const Quiver& q) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["reasons"] = r.reasons;
  j["q_value"] = r.q_value;
  j["degree"] = r.degree;
  j["tree"] = r.tree;
  j["schur"] = r.schur ? Json(to_string(*r.schur)) : Json(nullptr);
  if (r.reduced) {
    j["reducedness"] = Json{{"verdict", to_string(r.reduced->verdict)},
                            {"squarefree_witnesses", r.reduced->squarefree_witnesses},
                            {"full_degree_trials", r.reduced->full_degree_trials},
                            {"provenance", to_json(r.reduced->provenance)}};
  } else {
    j["reducedness"] = nullptr;
  }
  const Quiver& named = r.support ? r.support->quiver : q;
  j["component_degrees"] = r.components ? to_json(*r.components, named) : Json(nullptr);
  if (r.support) j["support"] = quiver_to_json(r.support->quiver, r.support->dim);
  j["method"] = r.method;
  j["provenance"] = to_json(r.provenance);
  return j;
}

bool euler_homogeneity_witness(const Quiver& q, const DimVector& d, const DimVector& m, const DimVector& n) {
  require_same_length(q, d);
  require_same_length(q, m);
  require_same_length(q, n);
  if (m + n != d) throw InputError("split " + m.to_string() + " + " + n.to_string() + " does not add up to " + d.to_string());
  if (!m.is_positive() || !n.is_positive()) throw InputError("both parts of a split must be positive");
  return euler_form(q, m, n) != euler_form(q, n, m);
}

std::vector<std::vector<DimVector>> root_decompositions(const Quiver& q, const DimVector& d, std::size_t min_parts) {
  require_same_length(q, d);
  const std::size_t n = d.size();
  std::vector<DimVector> roots;
  DimVector e = DimVector::zero(n);
  while (true) {
    std::size_t i = 0;
    while (i < n && e[i] == d[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
    if (tits_form(q, e) == 1 && is_real_root(q, e) == Verdict::yes) roots.push_back(e);
  }
  std::sort(roots.begin(), roots.end());

  std::vector<std::vector<DimVector>> out;
  std::vector<DimVector> parts;
  std::function<void(const DimVector&, std::size_t)> rec = [&](const DimVector& rest, std::size_t from) {
    if (rest.is_zero()) {
      if (parts.size() >= min_parts) out.push_back(parts);
      return;
    }
    for (std::size_t i = from; i < roots.size(); ++i) {
      if (!roots[i].leq(rest)) continue;
      parts.push_back(roots[i]);
      rec(rest - roots[i], i);
      parts.pop_back();
    }
  };
  rec(d, 0);
  return out;
}

std::optional<std::pair<DimVector, DimVector>> witness_for_decomposition(const Quiver& q,
                                                                         const std::vector<DimVector>& parts) {
  if (parts.size() < 2 || parts.size() > 20) throw InputError("decomposition must have between 2 and 20 parts");
  const std::size_t n = q.vertex_count();
  for (std::uint32_t mask = 1; mask + 1 < (1u << parts.size()); ++mask) {
    DimVector m = DimVector::zero(n), rest = DimVector::zero(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      DimVector& side = (mask >> i & 1u) ? m : rest;
      side = side + parts[i];
    }
    if (euler_form(q, m, rest) != euler_form(q, rest, m)) return std::make_pair(m, rest);
  }
  return std::nullopt;
}

const char* to_string(Quasihomogeneity c) {
  switch (c) {
    case Quasihomogeneity::quasihomogeneous:
      return "quasihomogeneous";
    case Quasihomogeneity::weakly:
      return "weakly";
    case Quasihomogeneity::none_found:
      return "none_found";
  }
  return "?";
}

QuasihomCertificate certificate_from_ext(const std::vector<std::vector<long long>>& ext) {
  const std::size_t k = ext.size();
  QuasihomCertificate cert;
  if (k < 2) return cert;

  // Edge i -> j when Ext(M_i, M_j) != 0. A topological order read backwards
  // has Ext(M_i, M_j) = 0 whenever i comes no later than j.
  bool self_loop = false;
  for (std::size_t i = 0; i < k; ++i) self_loop = self_loop || ext[i][i] != 0;
  std::vector<std::size_t> indeg(k, 0), topo;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && ext[i][j] != 0) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = k; i-- > 0;)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto i = ready.back();
    ready.pop_back();
    topo.push_back(i);
    for (std::size_t j = k; j-- > 0;)
      if (i != j && ext[i][j] != 0 && --indeg[j] == 0) ready.push_back(j);
  }
  if (!self_loop && topo.size() == k) {
    cert.kind = Quasihomogeneity::quasihomogeneous;
    cert.order.assign(topo.rbegin(), topo.rend());
    return cert;
  }

  // Strongly connected components via reachability (k is small).
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < k; ++j)
      if (ext[i][j] != 0) reach[i][j] = true;
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;
  // A source component: nothing outside reaches it.
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> comp;
    bool source = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (reach[i][j] && reach[j][i]) comp.push_back(j);
      else if (reach[j][i]) source = false;
    }
    if (source && comp.size() < k) {
      cert.kind = Quasihomogeneity::weakly;
      cert.first_group = comp;
      return cert;
    }
  }
  return cert;
}

namespace {

std::vector<std::vector<long long>> ext_table(const std::vector<Representation<PrimeField>>& reps) {
  std::vector<std::vector<long long>> ext(reps.size(), std::vector<long long>(reps.size(), 0));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) ext[i][j] = hom_ext(reps[i], reps[j]).ext;
  return ext;
}

std::optional<std::pair<std::size_t, TubeBrick>> locate_in_tubes(const std::vector<Tube>& tubes, const DimVector& e) {
  for (std::size_t t = 0; t < tubes.size(); ++t) {
    const long p = static_cast<long>(tubes[t].period());
    for (long slot = 0; slot < p; ++slot)
      for (std::size_t len = 1; len <= tubes[t].period(); ++len)
        if (tubes[t].brick_dim(slot, len) == e) return std::make_pair(t, TubeBrick{slot, len});
  }
  return std::nullopt;
}

}  // namespace

QuasihomCertificate quasihom_certificate(const Quiver& q, const DimVector& d, const std::vector<DimVector>& parts,
                                         const std::optional<std::vector<Representation<PrimeField>>>& part_reps,
                                         const Config& config) {
  require_same_length(q, d);
  DimVector total = DimVector::zero(q.vertex_count());
  for (const auto& p : parts) {
    require_same_length(q, p);
    if (!p.is_positive()) throw InputError("part " + p.to_string() + " is not positive");
    total = total + p;
  }
  if (total != d) throw InputError("parts add up to " + total.to_string() + ", not " + d.to_string());
  if (part_reps && part_reps->size() != parts.size()) throw InputError("one representation per part expected");

  QuasihomCertificate cert;
  if (parts.size() < 2) {
    cert.method = "needs at least two parts";
    return cert;
  }
  if (part_reps) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if ((*part_reps)[i].dim != parts[i] || !((*part_reps)[i].quiver == q))
        throw DimensionMismatch("representation " + std::to_string(i) + " does not match its part");
    cert = certificate_from_ext(ext_table(*part_reps));
    cert.method = "Ext graph of the given representations";
    return cert;
  }

  const auto g = classify_graph(q);
  if (g.kind == GraphClass::Kind::Tame) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (euler_form(q, *g.delta, parts[i]) != 0) {
        cert.kind = Quasihomogeneity::weakly;
        cert.first_group = {i};
        cert.method = "non-regular point (part " + std::to_string(i) + " has nonzero defect)";
        return cert;
      }
    const auto tubes = find_tubes(q);
    std::vector<std::pair<std::size_t, TubeBrick>> where;
    for (const auto& p : parts) {
      auto w = locate_in_tubes(tubes, p);
      if (!w) {
        cert.method = "regular part " + p.to_string() + " is not a brick of an exceptional tube";
        return cert;
      }
      where.push_back(*w);
    }
    std::vector<std::vector<long long>> ext(parts.size(), std::vector<long long>(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (where[i].first == where[j].first)
          ext[i][j] = tube_ext_nonzero(tubes[where[i].first], where[i].second, where[j].second) ? 1 : 0;
    auto method = std::string("tube combinatorics on regular bricks");
    cert = certificate_from_ext(ext);
    cert.method = method;
    return cert;
  }

  const PrimeField k(config.prime);
  Rng rng(config.seed);
  std::vector<Representation<PrimeField>> reps;
  for (const auto& p : parts) {
    auto b = sample_brick(q, p, k, rng, config.trials);
    if (!b) {
      cert.method = "no brick sampled for part " + p.to_string();
      return cert;
    }
    reps.push_back(std::move(*b));
  }
  cert = certificate_from_ext(ext_table(reps));
  cert.method = "Ext graph of sampled bricks";
  return cert;
}

Json to_json(const QuasihomCertificate& c) {
  return Json{{"certificate", to_string(c.kind)}, {"order", c.order}, {"first_group", c.first_group}, {"method", c.method}};
}

}  // namespace lfd
