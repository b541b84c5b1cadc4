#include <doctest.h>

#include "lfd/quiver.hpp"
#include "support.hpp"

using namespace lfd;
using namespace lfdtest;

TEST_SUITE("quiver-core") {

TEST_CASE("euler matrix of small quivers") {
  CHECK(euler_matrix(a2()) == IntMatrix{{1, -1}, {0, 1}});
  CHECK(euler_matrix(Quiver::numbered(1, {})) == IntMatrix{{1}});
  const auto e = euler_matrix(d4_star());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const long long expected = i == j ? 1 : (j == 3 && i < 3 ? -1 : 0);
      CHECK(e(i, j) == expected);
    }
}

TEST_CASE("euler form, cartan matrix and tits form") {
  CHECK(euler_form(a2(), {1, 1}, {1, 1}) == 1);
  CHECK(euler_form(kronecker(), {1, 1}, {1, 1}) == 0);
  CHECK(cartan_matrix(a2()) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(tits_form(kronecker(), {1, 1}) == 0);
  CHECK(tits_form(d4_star(), {1, 1, 1, 2}) == 1);
  const auto e7 = load("e7.json");
  CHECK(tits_form(e7.quiver, e7.dim) == 1);
  CHECK(rep_dimension(e7.quiver, e7.dim) == 27);
  const auto e8 = load("e8.json");
  CHECK(rep_dimension(e8.quiver, e8.dim) == 87);
  CHECK(tits_form(e8.quiver, e8.dim) == 1);
}

TEST_CASE("euler form is bilinear and symmetrizes to the cartan form") {
  Rng rng(7);
  std::uniform_int_distribution<long long> entry(-3, 3);
  const auto q = load("e7.json").quiver;
  for (int t = 0; t < 50; ++t) {
    DimVector m = DimVector::zero(q.vertex_count()), n = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = entry(rng);
      n[i] = entry(rng);
    }
    CHECK(euler_form(q, m, n) + euler_form(q, n, m) == sym_form(q, m, n));
    CHECK(euler_form(q, m + n, n) == euler_form(q, m, n) + euler_form(q, n, n));
    // q_Q(d) = sum d_i^2 - sum over arrows d_s d_t
    long long direct = 0;
    for (std::size_t i = 0; i < m.size(); ++i) direct += m[i] * m[i];
    for (const auto& a : q.arrows()) direct -= m[a.source] * m[a.target];
    CHECK(tits_form(q, m) == direct);
  }
}

TEST_CASE("graph classification") {
  auto g = classify_graph(a3_path());
  CHECK(g.kind == GraphClass::Kind::Dynkin);
  CHECK(g.family == 'A');
  CHECK(g.rank == 3);

  g = classify_graph(kronecker());
  CHECK(g.kind == GraphClass::Kind::Tame);
  REQUIRE(g.delta);
  CHECK(*g.delta == DimVector{1, 1});

  const auto e8 = load("e8.json");
  g = classify_graph(e8.quiver);
  CHECK(g.kind == GraphClass::Kind::Tame);
  CHECK(g.name() == "~E8");
  REQUIRE(g.delta);
  CHECK(tits_form(e8.quiver, *g.delta) == 0);
  // Standard imaginary root: 6 at the branch point, 1 at the end of the long arm.
  CHECK(g.delta->max_entry() == 6);
  CHECK(g.delta->sum() == 30);

  const auto e7 = load("e7.json");
  g = classify_graph(e7.quiver);
  CHECK(g.name() == "~E7");
  CHECK(g.delta->sum() == 18);

  CHECK(classify_graph(Quiver::numbered(2, {{0, 1}, {0, 1}, {0, 1}})).kind == GraphClass::Kind::Wild);
  CHECK(classify_graph(d4_star()).name() == "D4");
}

TEST_CASE("Dynkin classification of every small Dynkin graph") {
  for (const auto& g : dynkin_graphs_up_to_5())
    for (const auto& q : orientations(g.n, g.edges)) CHECK(classify_graph(q).name() == g.name);
}

TEST_CASE("stages and trees") {
  auto st = stages(Quiver::numbered(3, {{0, 1}, {1, 2}}));
  CHECK(st.groups == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
  CHECK(!is_tree(cycle3()));
  CHECK_THROWS_AS(stages(cycle3()), CyclicQuiver);
  st = stages(d4_star());
  CHECK(st.groups == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}});
  CHECK(st.top() == 1);
  CHECK(sources(a2()) == std::vector<std::size_t>{0});
  CHECK(sinks(a2()) == std::vector<std::size_t>{1});
}

TEST_CASE("stage levels follow the arrows") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto q = random_tree(2 + t % 7, rng);
    const auto st = stages(q);
    for (const auto& a : q.arrows()) CHECK(st.level[a.target] - st.level[a.source] == 1);
    CHECK(*std::min_element(st.level.begin(), st.level.end()) == 0);
  }
}

TEST_CASE("json input round trip and errors") {
  const auto in = parse_quiver_text(R"({"vertices":["x","y"],"arrows":[["x","y"]],"dim":{"x":1,"y":2}})");
  CHECK(in.quiver.vertex_count() == 2);
  CHECK(in.dim == DimVector{1, 2});
  const auto back = parse_quiver_json(quiver_to_json(in.quiver, in.dim));
  CHECK(back.quiver == in.quiver);
  CHECK(back.dim == in.dim);

  CHECK_THROWS_AS(parse_quiver_text("{not json"), InputError);
  CHECK_THROWS_AS(parse_quiver_text(R"({"vertices":["x"],"arrows":[["x","z"]],"dim":{"x":1}})"), InputError);
  CHECK_THROWS_AS(parse_quiver_text(R"({"vertices":["x","x"],"arrows":[],"dim":{"x":1}})"), InputError);
  CHECK_THROWS_AS(euler_form(a2(), {1, 1, 1}, {1, 1}), DimensionMismatch);
}

TEST_CASE("support subquiver") {
  const auto s = support_subquiver(a3_path(), {1, 0, 1});
  CHECK(s.quiver.vertex_count() == 2);
  CHECK(s.quiver.arrow_count() == 0);
  CHECK(!s.quiver.is_connected());
  const auto t = support_subquiver(d4_star(), {1, 0, 1, 1});
  CHECK(t.quiver.vertices() == std::vector<std::string>{"1", "3", "4"});
  CHECK(t.dim == DimVector{1, 1, 1});
  CHECK(is_tree(t.quiver));
}

}
