#include <doctest.h>

#include "lfd/saito.hpp"
#include "support.hpp"

using namespace lfd;
using namespace lfdtest;

namespace {

const PrimeField kP(kDefaultPrime);

/// g . M with (g . M)_a = g_{t a} M_a g_{s a}^{-1}.
Representation<PrimeField> act(const std::vector<FieldMatrix<PrimeField>>& g, const Representation<PrimeField>& m) {
  auto out = m;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& ar = m.quiver.arrow(a);
    out.maps[a] = multiply(kP, multiply(kP, g[ar.target], m.maps[a]), inverse(kP, g[ar.source]));
  }
  return out;
}

std::vector<FieldMatrix<PrimeField>> random_group_element(const DimVector& d, Rng& rng) {
  std::vector<FieldMatrix<PrimeField>> g;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto n = static_cast<std::size_t>(d[i]);
    FieldMatrix<PrimeField> m(n, n);
    do {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = kP.random(rng);
    } while (det(kP, m) == 0);
    g.push_back(m);
  }
  return g;
}

Representation<PrimeField> scaled(const Representation<PrimeField>& m, std::uint64_t lambda) {
  auto out = m;
  for (auto& f : out.maps)
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = kP.mul(lambda, f(r, c));
  return out;
}

/// Degree of x -> fn(a + t b) measured by interpolation through `nodes` points.
long measured_degree(const std::function<std::uint64_t(const Representation<PrimeField>&)>& fn,
                     const Representation<PrimeField>& a, const Representation<PrimeField>& b, std::size_t nodes) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  for (std::uint64_t t = 0; t < nodes; ++t) {
    auto x = a;
    for (std::size_t i = 0; i < x.maps.size(); ++i)
      for (std::size_t r = 0; r < x.maps[i].rows(); ++r)
        for (std::size_t c = 0; c < x.maps[i].cols(); ++c)
          x.maps[i](r, c) = kP.add(a.maps[i](r, c), kP.mul(t, b.maps[i](r, c)));
    pts.push_back({t, fn(x)});
  }
  return interpolate(kP, pts).degree();
}

std::uint64_t minor2(const FieldMatrix<PrimeField>& u, const FieldMatrix<PrimeField>& v) {
  return kP.sub(kP.mul(u(0, 0), v(1, 0)), kP.mul(u(1, 0), v(0, 0)));
}

}  // namespace

TEST_SUITE("saito-engine") {

TEST_CASE("A2 Saito matrix is a single coordinate") {
  const auto s = build_saito_matrix(a2(), {1, 1});
  REQUIRE(s.size() == 1);
  REQUIRE(s.entries[0][0].terms.size() == 1);
  CHECK(s.entries[0][0].terms[0].first == 0);
  CHECK(std::abs(s.entries[0][0].terms[0].second) == 1);
  const auto v = evaluate_f(s, kP, std::vector<std::uint64_t>{5});
  CHECK((v == 5 || v == kP.neg(5)));
  CHECK(single_coordinate_basis_check(s));
}

TEST_CASE("Saito matrix errors") {
  CHECK_THROWS_AS(build_saito_matrix(cycle3(), {1, 1, 1}), NonSquare);
  CHECK_THROWS_AS(build_saito_matrix(a3_path(), {1, 0, 1}), NotSincere);
  CHECK_THROWS_AS(build_saito_matrix(Quiver::numbered(2, {}), {1, 1}), DisconnectedQuiver);
}

TEST_CASE("D4 determinant is the product of the three 2x2 minors up to a unit") {
  Rng rng(4);
  const auto q = d4_star();
  const DimVector d{1, 1, 1, 2};
  const auto s = build_saito_matrix(q, d);
  CHECK(s.size() == 6);
  std::optional<std::uint64_t> unit;
  for (int t = 0; t < 5; ++t) {
    const auto x = sample_representation(q, d, kP, rng);
    const auto f = evaluate_f(s, x);
    const auto g = kP.mul(kP.mul(minor2(x.maps[0], x.maps[1]), minor2(x.maps[0], x.maps[2])), minor2(x.maps[1], x.maps[2]));
    REQUIRE(g != 0);
    const auto ratio = kP.div(f, g);
    CHECK(ratio != 0);
    if (unit) CHECK(ratio == *unit);
    unit = ratio;
  }
}

TEST_CASE("f is homogeneous of degree dim Rep and vanishes at zero") {
  Rng rng(6);
  for (const auto& in : {QuiverInput{d4_star(), {1, 1, 1, 2}}, load("e7.json")}) {
    const auto s = build_saito_matrix(in.quiver, in.dim);
    const auto n = static_cast<std::uint64_t>(rep_dimension(in.quiver, in.dim));
    CHECK(evaluate_f(s, zero_representation(kP, in.quiver, in.dim)) == 0);
    for (int t = 0; t < 3; ++t) {
      const auto x = sample_representation(in.quiver, in.dim, kP, rng);
      const auto lambda = kP.random(rng);
      CHECK(evaluate_f(s, scaled(x, lambda)) == kP.mul(kP.pow(lambda, n), evaluate_f(s, x)));
    }
  }
}

TEST_CASE("f is a relative invariant") {
  Rng rng(7);
  for (const auto& in : {QuiverInput{d4_star(), {1, 1, 1, 2}}, QuiverInput{a3_path(), {1, 1, 1}}, load("e7.json")}) {
    const auto s = build_saito_matrix(in.quiver, in.dim);
    const auto g = random_group_element(in.dim, rng);
    const auto x = sample_representation(in.quiver, in.dim, kP, rng);
    const auto y = sample_representation(in.quiver, in.dim, kP, rng);
    const auto fx = evaluate_f(s, x), fy = evaluate_f(s, y);
    REQUIRE(fx != 0);
    REQUIRE(fy != 0);
    CHECK(kP.div(evaluate_f(s, act(g, x)), fx) == kP.div(evaluate_f(s, act(g, y)), fy));
  }
}

TEST_CASE("line restriction has the degree of f") {
  Rng rng(8);
  const auto s = build_saito_matrix(d4_star(), {1, 1, 1, 2});
  std::vector<std::uint64_t> a(6), b(6);
  for (auto& v : a) v = kP.random(rng);
  for (auto& v : b) v = kP.random(rng);
  const auto f = restrict_to_line(s, kP, a, b);
  CHECK(f.degree() == 6);
  for (std::uint64_t t : {17ULL, 123456ULL}) {
    std::vector<std::uint64_t> x(6);
    for (std::size_t i = 0; i < 6; ++i) x[i] = kP.add(a[i], kP.mul(t, b[i]));
    CHECK(evaluate(kP, f, t) == evaluate_f(s, kP, x));
  }
  CHECK_THROWS_AS(restrict_to_line(s, PrimeField(5), {0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}), PrimeTooSmall);
}

TEST_CASE("reducedness") {
  Rng rng(9);
  const auto primes = primes_below(kDefaultPrime, 3);
  CHECK(primes.size() == 3);
  CHECK(primes[0] == kDefaultPrime);
  for (auto p : primes) CHECK(is_prime(p));

  CHECK(reducedness_test(build_saito_matrix(a3_path(), {1, 1, 1}), primes, 3, rng).verdict == Reducedness::reduced);
  CHECK(reducedness_test(build_saito_matrix(d4_star(), {1, 1, 1, 2}), primes, 3, rng).verdict == Reducedness::reduced);

  // Acyclic triangle: (2,1,1) gives a square-factor f, delta + (0,1,0) gives f = 0.
  const auto tri = Quiver::numbered(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto nr = reducedness_test(build_saito_matrix(tri, {2, 1, 1}), primes, 3, rng);
  CHECK(nr.verdict == Reducedness::not_reduced);
  CHECK(nr.full_degree_trials == 3);
  CHECK(reducedness_test(build_saito_matrix(tri, {1, 2, 1}), primes, 3, rng).verdict == Reducedness::identically_zero);
}

TEST_CASE("single coordinate basis") {
  CHECK(single_coordinate_basis_check(build_saito_matrix(d4_star(), {1, 1, 1, 2})));
  CHECK(single_coordinate_basis_check(build_saito_matrix(load("e8.json").quiver, load("e8.json").dim)));
  SaitoMatrix bad{a2(), {1, 1}, {{0, 0, 0}}, {{LinearForm{}}}};
  bad.entries[0][0].add(0, 1);
  bad.entries[0][0].add(1, 1);
  CHECK(!single_coordinate_basis_check(bad));
}

TEST_CASE("component degrees") {
  // Normal crossing chain: every component is a coordinate hyperplane.
  const auto chain = Quiver::numbered(4, {{0, 1}, {1, 2}, {2, 3}});
  const DimVector ones{1, 1, 1, 1};
  Rng rng(10);
  const auto cd = component_degrees(chain, ones, Config{}, Side::right, rng);
  CHECK(cd.degrees == std::vector<long long>{1, 1, 1});
  CHECK(cd.certificate.found);

  const auto a = component_degrees(a2(), {1, 1}, Config{}, Side::right, rng);
  CHECK(a.degrees == std::vector<long long>{1});

  const auto d4 = component_degrees(d4_star(), {1, 1, 1, 2}, Config{}, Side::right, rng);
  CHECK(d4.degrees == std::vector<long long>{2, 2, 2});

  CHECK_THROWS_AS(component_degree(cycle3(), {1, 1, 1}, {1, 0, 0}, Side::right), InputError);
  CHECK_THROWS_AS(component_degree(a2(), {1, 1}, {1, 0}, Side::right), OrthogonalityViolated);
  CHECK(component_degree(a2(), {1, 1}, {1, 0}, Side::left) == 1);
}

TEST_CASE("relative invariants from perpendicular representations") {
  Rng rng(11);
  // A2, M the simple at the source: det c_{M, x} is a unit times x.
  auto m = zero_representation(kP, a2(), {1, 0});
  const auto inv = relative_invariant_det(a2(), {1, 1}, m, Side::left);
  auto x = zero_representation(kP, a2(), {1, 1});
  x.maps[0](0, 0) = 7;
  const auto v = inv(x);
  CHECK((v == 7 || v == kP.neg(7)));
  CHECK_THROWS_AS(relative_invariant_det(a2(), {1, 1}, m, Side::right), NonSquare);

  for (const auto& in : {QuiverInput{d4_star(), {1, 1, 1, 2}}, QuiverInput{Quiver::numbered(4, {{0, 1}, {2, 1}, {1, 3}}), {1, 2, 1, 1}}}) {
    const auto& q = in.quiver;
    const auto s = build_saito_matrix(q, in.dim);
    const auto n = static_cast<std::size_t>(rep_dimension(q, in.dim));
    const auto cd = component_degrees(q, in.dim, Config{}, Side::right, rng);
    REQUIRE(cd.certificate.found);
    std::vector<std::function<std::uint64_t(const Representation<PrimeField>&)>> evals;
    const auto a = sample_representation(q, in.dim, kP, rng);
    const auto b = sample_representation(q, in.dim, kP, rng);
    for (auto i : cd.certificate.subset) {
      const auto& e = cd.simples[i].e;
      const auto brick = sample_brick(q, e, kP, rng, 5);
      REQUIRE(brick);
      evals.push_back(relative_invariant_det(q, in.dim, *brick, Side::right));
      CHECK(measured_degree(evals.back(), a, b, n + 2) == cd.certificate.degrees[i]);
    }
    std::optional<std::uint64_t> unit;
    for (int t = 0; t < 4; ++t) {
      const auto y = sample_representation(q, in.dim, kP, rng);
      std::uint64_t prod = 1;
      for (const auto& ev : evals) prod = kP.mul(prod, ev(y));
      const auto ratio = kP.div(evaluate_f(s, y), prod);
      CHECK(ratio != 0);
      if (unit) CHECK(ratio == *unit);
      unit = ratio;
    }
  }
}

TEST_CASE("lfd verdicts") {
  const Config cfg;
  auto r = lfd_verdict(a2(), {1, 1}, cfg);
  CHECK(r.verdict == LfdVerdict::linear_free);
  CHECK(r.degree == 1);
  r = lfd_verdict(cycle3(), {1, 1, 1}, cfg);
  CHECK(r.verdict == LfdVerdict::not_linear_free);
  CHECK(std::find(r.reasons.begin(), r.reasons.end(), "not a tree") != r.reasons.end());
  const auto e7 = load("e7.json");
  r = lfd_verdict(e7.quiver, e7.dim, cfg);
  CHECK(r.verdict == LfdVerdict::linear_free);
  CHECK(r.degree == 27);
  CHECK(r.provenance.seed == cfg.seed);
  CHECK(r.provenance.trials == cfg.trials);

  // Non-sincere vectors are judged on their support.
  r = lfd_verdict(a3_path(), {1, 1, 0}, cfg);
  CHECK(r.verdict == LfdVerdict::linear_free);
  REQUIRE(r.support);
  CHECK(r.support->dim == DimVector{1, 1});
  r = lfd_verdict(a3_path(), {1, 0, 1}, cfg);
  CHECK(r.verdict == LfdVerdict::not_linear_free);

  // Regular non-Schur root on D~4: no open orbit.
  const auto dt4 = Quiver::numbered(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  r = lfd_verdict(dt4, {2, 2, 1, 1, 3}, cfg);
  CHECK(r.verdict == LfdVerdict::not_linear_free);
  REQUIRE(r.reduced);
  CHECK(r.reduced->verdict == Reducedness::identically_zero);
  CHECK_THROWS_AS(lfd_verdict(a2(), {1, -1}, cfg), InputError);
}

TEST_CASE("verdict reports are deterministic") {
  const auto e7 = load("e7.json");
  const Config cfg;
  CHECK(to_json(lfd_verdict(e7.quiver, e7.dim, cfg), e7.quiver).dump() ==
        to_json(lfd_verdict(e7.quiver, e7.dim, cfg), e7.quiver).dump());
}

TEST_CASE("euler homogeneity witnesses") {
  CHECK(euler_homogeneity_witness(a2(), {1, 1}, {1, 0}, {0, 1}));
  CHECK(!euler_homogeneity_witness(d4_star(), {2, 2, 2, 4}, {1, 1, 1, 2}, {1, 1, 1, 2}));
  CHECK_THROWS_AS(euler_homogeneity_witness(a2(), {1, 1}, {1, 0}, {1, 0}), InputError);
  const auto decs = root_decompositions(d4_star(), {1, 1, 1, 2});
  CHECK(!decs.empty());
  for (const auto& dec : decs) {
    DimVector sum = DimVector::zero(4);
    for (const auto& p : dec) sum = sum + p;
    CHECK(sum == DimVector{1, 1, 1, 2});
    CHECK(dec.size() >= 2);
    CHECK(witness_for_decomposition(d4_star(), dec));
  }
}

TEST_CASE("quasihomogeneity certificates") {
  const Config cfg;
  Rng rng(13);
  // Dynkin: generic bricks of a root decomposition have an acyclic Ext graph.
  const DimVector d{1, 1, 1, 2};
  const std::vector<DimVector> parts{{1, 1, 0, 1}, {0, 0, 1, 1}};
  std::vector<Representation<PrimeField>> reps;
  for (const auto& p : parts) reps.push_back(*sample_brick(d4_star(), p, kP, rng, 5));
  auto c = quasihom_certificate(d4_star(), d, parts, reps, cfg);
  CHECK(c.kind == Quasihomogeneity::quasihomogeneous);
  CHECK(c.order.size() == 2);

  // Regular parts of E~7 below delta inside one tube.
  const auto e7 = load("e7.json");
  const auto tubes = find_tubes(e7.quiver);
  const auto& t = tubes.front();
  const std::vector<DimVector> regular{t.brick_dim(0, 1), t.brick_dim(1, 2)};
  c = quasihom_certificate(e7.quiver, regular[0] + regular[1], regular, std::nullopt, cfg);
  CHECK(c.kind != Quasihomogeneity::none_found);

  c = quasihom_certificate(a2(), {1, 1}, {{1, 1}}, std::nullopt, cfg);
  CHECK(c.kind == Quasihomogeneity::none_found);

  // A two-cycle in the Ext graph leaves only a weak certificate.
  c = certificate_from_ext({{0, 1, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(c.kind == Quasihomogeneity::weakly);
  c = certificate_from_ext({{0, 1}, {0, 0}});
  CHECK(c.kind == Quasihomogeneity::quasihomogeneous);
}

}
