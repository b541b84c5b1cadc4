#include <doctest.h>

#include <set>

#include "lfd/rep_space.hpp"
#include "support.hpp"

using namespace lfd;
using namespace lfdtest;

namespace {

Representation<PrimeField> a2_rep(const PrimeField& k, long long f) {
  auto m = zero_representation(k, a2(), {1, 1});
  m.maps[0](0, 0) = k.from_int(f);
  return m;
}

/// dim Hom(M, N) over F_3 by counting all vertex-wise families of matrices
/// that commute with the arrows.
long long hom_by_enumeration(const Representation<PrimeField>& m, const Representation<PrimeField>& n) {
  const auto& q = m.quiver;
  std::vector<std::size_t> offset{0};
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    offset.push_back(offset.back() + static_cast<std::size_t>(m.dim[i] * n.dim[i]));
  const std::size_t vars = offset.back();
  std::vector<std::uint64_t> x(vars, 0);
  long long count = 0;
  auto phi = [&](std::size_t v, std::size_t r, std::size_t c) {
    return x[offset[v] + r * static_cast<std::size_t>(m.dim[v]) + c];
  };
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto& ar = q.arrow(a);
      const auto& f = m.maps[a];
      const auto& g = n.maps[a];
      for (std::size_t r = 0; r < static_cast<std::size_t>(n.dim[ar.target]) && ok; ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(m.dim[ar.source]) && ok; ++c) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < static_cast<std::size_t>(m.dim[ar.target]); ++t)
            lhs += phi(ar.target, r, t) * f(t, c);
          for (std::size_t t = 0; t < static_cast<std::size_t>(n.dim[ar.source]); ++t)
            rhs += g(r, t) * phi(ar.source, t, c);
          ok = lhs % 3 == rhs % 3;
        }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < vars && x[i] == 2) x[i++] = 0;
    if (i == vars) break;
    ++x[i];
  }
  long long dim = 0;
  while (count > 1) {
    count /= 3;
    ++dim;
  }
  return dim;
}

}  // namespace

TEST_SUITE("rep-space") {

TEST_CASE("c matrix of A2") {
  const PrimeField k(101);
  const auto m = a2_rep(k, 1);
  const auto c = build_c_matrix(m, m);
  REQUIRE(c.rows() == 1);
  REQUIRE(c.cols() == 2);
  // phi_2 f - f phi_1 with f = 1: coefficient -1 on phi_1, +1 on phi_2.
  CHECK(c(0, 0) == k.from_int(-1));
  CHECK(c(0, 1) == k.from_int(1));

  const auto z = a2_rep(k, 0);
  const auto cz = build_c_matrix(z, z);
  CHECK(cz(0, 0) == 0);
  CHECK(cz(0, 1) == 0);
}

TEST_CASE("c matrix shape") {
  Rng rng(1);
  const PrimeField k(101);
  const auto q = load("e7.json").quiver;
  const auto m = sample_representation(q, {1, 2, 1, 1, 0, 1, 2, 1}, k, rng);
  const auto n = sample_representation(q, {2, 1, 1, 2, 1, 0, 1, 1}, k, rng);
  const auto c = build_c_matrix(m, n);
  long long dom = 0, cod = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) dom += m.dim[i] * n.dim[i];
  for (const auto& a : q.arrows()) cod += m.dim[a.source] * n.dim[a.target];
  CHECK(static_cast<long long>(c.cols()) == dom);
  CHECK(static_cast<long long>(c.rows()) == cod);
}

TEST_CASE("hom and ext of A2 points") {
  const PrimeField k(101);
  const auto generic = a2_rep(k, 1);
  auto he = hom_ext(generic, generic);
  REQUIRE(he.end);
  CHECK(*he.end == 1);
  CHECK(he.ext == 0);
  const auto zero = a2_rep(k, 0);
  he = hom_ext(zero, zero);
  CHECK(*he.end == 2);
  CHECK(he.ext == 1);
  CHECK(is_brick(generic));
  CHECK(!is_brick(zero));
}

TEST_CASE("hom dimension matches enumeration over F_3") {
  Rng rng(12);
  const PrimeField k(3);
  const std::vector<Quiver> quivers{a2(), a3_path(), kronecker(), cycle3(), Quiver::numbered(1, {{0, 0}})};
  for (int t = 0; t < 60; ++t) {
    const auto& q = quivers[static_cast<std::size_t>(t) % quivers.size()];
    DimVector dm = DimVector::zero(q.vertex_count()), dn = dm;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      dm[i] = static_cast<long long>(rng() % 3);
      dn[i] = static_cast<long long>(rng() % 3);
    }
    long long vars = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) vars += dm[i] * dn[i];
    if (vars > 8) continue;
    const auto m = sample_representation(q, dm, k, rng);
    const auto n = sample_representation(q, dn, k, rng);
    const auto he = hom_ext(m, n);
    CHECK(he.hom == hom_by_enumeration(m, n));
    CHECK(he.hom - he.ext == euler_form(q, dm, dn));
  }
}

TEST_CASE("ringel identity over Q and F_p") {
  Rng rng(21);
  const PrimeField k(kDefaultPrime);
  const RationalField rq;
  const std::vector<Quiver> quivers{d4_star(), kronecker(), cycle3(), Quiver::numbered(2, {{0, 0}, {0, 1}})};
  for (int t = 0; t < 40; ++t) {
    const auto& q = quivers[static_cast<std::size_t>(t) % quivers.size()];
    DimVector dm = DimVector::zero(q.vertex_count()), dn = dm;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      dm[i] = static_cast<long long>(rng() % 4);
      dn[i] = static_cast<long long>(rng() % 4);
    }
    const auto he = hom_ext(sample_representation(q, dm, k, rng), sample_representation(q, dn, k, rng));
    CHECK(he.hom - he.ext == euler_form(q, dm, dn));
    const auto hq = hom_ext(sample_representation(q, dm, rq, rng), sample_representation(q, dn, rq, rng));
    CHECK(hq.hom - hq.ext == euler_form(q, dm, dn));
  }
}

TEST_CASE("schur roots") {
  Rng rng(5);
  const PrimeField k(kDefaultPrime);
  CHECK(is_schur_root(a2(), {1, 1}, k, rng, 3) == Verdict::yes);
  CHECK(is_schur_root(a2(), {2, 2}, k, rng, 3) == Verdict::inconclusive);
  for (const auto& d : dynkin_positive_roots(d4_star(), 2)) CHECK(is_schur_root(d4_star(), d, k, rng, 3) == Verdict::yes);
  CHECK_THROWS_AS(is_schur_root(a2(), {1, -1}, k, rng, 1), InputError);
}

TEST_CASE("perpendicular candidates of A2 agree with brute force") {
  Rng rng(8);
  const PrimeField k(kDefaultPrime);
  const auto m = a2_rep(k, 1);
  for (const auto side : {Side::right, Side::left}) {
    const auto cands = perp_candidates(m, 2, 3, side, rng);
    std::set<DimVector> got;
    for (const auto& c : cands) got.insert(c.e);
    for_each_vector(2, 2, [&](const DimVector& e) {
      // candidates are restricted to vectors with q_Q(e) = 1
      if (e.is_zero() || tits_form(a2(), e) != 1) return;
      bool perp = false;
      for (int t = 0; t < 3 && !perp; ++t) {
        const auto n = sample_representation(a2(), e, k, rng);
        const auto he = side == Side::right ? hom_ext(m, n) : hom_ext(n, m);
        perp = he.hom == 0 && he.ext == 0;
      }
      CHECK(perp == (got.count(e) == 1));
    });
    CHECK(got.count(DimVector{1, 1}) == 0);
  }
  CHECK(perp_dimension_vectors(a2(), {1, 1}, 2, Side::right) == std::vector<DimVector>{{0, 1}});
  CHECK(perp_dimension_vectors(a2(), {1, 1}, 2, Side::left) == std::vector<DimVector>{{1, 0}});
}

TEST_CASE("simple perpendicular candidates of LFD pairs") {
  Rng rng(9);
  const PrimeField k(kDefaultPrime);
  const std::vector<QuiverInput> pairs{{d4_star(), {1, 1, 1, 2}}, {a3_path(), {1, 1, 1}}, load("e7.json")};
  for (const auto& in : pairs) {
    const auto m = *sample_brick(in.quiver, in.dim, k, rng, 3);
    for (const auto side : {Side::right, Side::left}) {
      const auto simples = simple_perp_candidates(perp_candidates(m, in.dim.max_entry(), 3, side, rng));
      CHECK(simples.size() == in.quiver.vertex_count() - 1);
      for (const auto& s : simples) CHECK(s.e != in.dim);
    }
  }
}

TEST_CASE("representation json round trip") {
  Rng rng(10);
  const PrimeField k(101);
  const auto m = sample_representation(d4_star(), {1, 1, 1, 2}, k, rng);
  const auto back = representation_from_json(d4_star(), representation_to_json(m));
  CHECK(back.dim == m.dim);
  CHECK(back.maps == m.maps);
  CHECK(back.field == m.field);
}

}
