#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lfd/reflection.hpp"
#include "lfd/roots.hpp"
#include "lfd/saito.hpp"
#include "lfd/symbolic.hpp"

namespace lfdtool {

using lfd::Json;

namespace {

struct Options {
  lfd::Config config;
  std::string format = "json";
  std::string path;
};

lfd::QuiverInput load(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw lfd::InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return lfd::parse_quiver_text(buf.str());
}

Json matrix_json(const lfd::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json names(const lfd::Quiver& q, const std::vector<std::size_t>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(q.name(v));
  return out;
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
}

Json analyze(const lfd::QuiverInput& in) {
  const auto& q = in.quiver;
  const auto& d = in.dim;
  Json j;
  j["command"] = "analyze";
  j["quiver"] = lfd::quiver_to_json(q, d);
  j["euler_matrix"] = matrix_json(lfd::euler_matrix(q));
  j["cartan_matrix"] = matrix_json(lfd::cartan_matrix(q));
  j["tits_form"] = lfd::tits_form(q, d);
  j["rep_dimension"] = lfd::rep_dimension(q, d);
  long long units = 0;
  for (std::size_t i = 0; i < d.size(); ++i) units += d[i] * d[i];
  j["pgl_dimension"] = units - 1;
  j["sincere"] = d.is_sincere();
  j["tree"] = lfd::is_tree(q);
  j["sources"] = names(q, lfd::sources(q));
  j["sinks"] = names(q, lfd::sinks(q));
  j["real_root"] = q.has_loops() ? Json(nullptr) : Json(lfd::to_string(lfd::is_real_root(q, d)));
  if (q.is_connected()) {
    const auto g = lfd::classify_graph(q);
    j["graph_class"] = g.name();
    j["delta"] = g.delta ? lfd::dim_to_json(q, *g.delta) : Json(nullptr);
    j["defect"] = g.delta ? Json(lfd::euler_form(q, *g.delta, d)) : Json(nullptr);
    try {
      const auto st = lfd::stages(q);
      Json groups = Json::array();
      for (const auto& grp : st.groups) groups.push_back(names(q, grp));
      j["stages"] = groups;
    } catch (const lfd::CyclicQuiver&) {
      j["stages"] = nullptr;
    }
  } else {
    j["graph_class"] = "disconnected";
  }
  return j;
}

Json oracle(const lfd::SaitoMatrix& s, const lfd::LfdReport& rep, std::size_t expand_limit) {
  Json j;
  try {
    const auto fac = lfd::factor_saito_determinant(s, expand_limit);
    j["identically_zero"] = fac.identically_zero;
    j["reduced"] = fac.reduced();
    j["factor_degrees"] = fac.factor_degrees();
    if (rep.reduced) j["agrees_with_reducedness"] = fac.reduced() == (rep.reduced->verdict == lfd::Reducedness::reduced);
    if (rep.components) {
      std::vector<long> comp(rep.components->degrees.begin(), rep.components->degrees.end());
      j["agrees_with_component_degrees"] = comp == fac.factor_degrees();
    }
  } catch (const lfd::Error& e) {
    j["error"] = e.what();
  }
  return j;
}

std::vector<long long> parse_vector(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw lfd::InputError("bad vector entry '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear free divisors from quiver representations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--prime", opt.config.prime, "Prime for F_p arithmetic")->capture_default_str();
  app.add_option("--seed", opt.config.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", opt.config.trials, "Random trials per probabilistic test")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--entry-bound", opt.config.entry_bound, "Entry bound for perpendicular search (0: max entry of d)")->capture_default_str();
  app.add_option("--expand-limit", opt.config.expand_limit, "Largest n for symbolic expansion")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Forms, graph class, delta/defect, stages");
  auto* lfd_cmd = app.add_subcommand("lfd", "Full linear free divisor verdict");
  auto* degrees_cmd = app.add_subcommand("degrees", "Component degrees with degree-sum certificate");
  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect at a source or sink");
  auto* normal_cmd = app.add_subcommand("normal-form", "Bipartite normal form");
  auto* tubes_cmd = app.add_subcommand("tubes", "Exceptional tubes of a tame quiver");
  auto* homog_cmd = app.add_subcommand("homogeneity", "Euler and quasihomogeneity certificates");
  for (auto* c : {analyze_cmd, lfd_cmd, degrees_cmd, reflect_cmd, normal_cmd, tubes_cmd, homog_cmd})
    c->add_option("input", opt.path, "Quiver JSON file ('-' for stdin)")->required();
  std::string side = "right";
  degrees_cmd->add_option("--side", side, "Perpendicular side")->check(CLI::IsMember({"left", "right"}));
  std::string vertex;
  reflect_cmd->add_option("--vertex", vertex, "Vertex name")->required();
  std::size_t max_steps = 1000;
  normal_cmd->add_option("--max-steps", max_steps, "Step limit")->capture_default_str();
  std::vector<std::string> parts_text;
  homog_cmd->add_option("--part", parts_text, "Part dimension vector, comma separated in vertex order (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const lfd::PrimeField field_check(opt.config.prime);
    (void)field_check;
    const auto in = load(opt.path);
    const auto& q = in.quiver;
    const auto& d = in.dim;
    int code = kExitOk;
    Json j;

    if (*analyze_cmd) {
      j = analyze(in);
    } else if (*lfd_cmd) {
      const auto rep = lfd::lfd_verdict(q, d, opt.config);
      j = lfd::to_json(rep, q);
      const auto& oq = rep.support ? rep.support->quiver : q;
      const auto& od = rep.support ? rep.support->dim : d;
      if (rep.q_value == 1 && oq.is_connected() && static_cast<std::size_t>(rep.degree) <= opt.config.expand_limit)
        j["oracle"] = oracle(lfd::build_saito_matrix(oq, od), rep, opt.config.expand_limit);
      if (rep.verdict == lfd::LfdVerdict::inconclusive) code = kExitInconclusive;
    } else if (*degrees_cmd) {
      if (lfd::tits_form(q, d) != 1) throw lfd::NonSquare("component degrees need q_Q(d) = 1");
      lfd::Rng rng(opt.config.seed);
      const auto comps =
          lfd::component_degrees(q, d, opt.config, side == "left" ? lfd::Side::left : lfd::Side::right, rng);
      j = lfd::to_json(comps, q);
      j["rep_dimension"] = lfd::rep_dimension(q, d);
      j["provenance"] = lfd::to_json(lfd::Provenance{{opt.config.prime}, opt.config.seed, opt.config.trials});
      if (!comps.certificate.found) code = kExitInconclusive;
    } else if (*reflect_cmd) {
      const auto step = lfd::reflection_step(q, d, q.index_of(vertex));
      j["quiver"] = lfd::quiver_to_json(step.after_quiver, step.after_dim);
      j["trace"] = Json::array({lfd::to_json(step)});
    } else if (*normal_cmd) {
      j = lfd::to_json(lfd::bipartite_normal_form(q, d, max_steps));
    } else if (*tubes_cmd) {
      const auto g = lfd::classify_graph(q);
      if (g.kind != lfd::GraphClass::Kind::Tame) throw lfd::NotTame(g.name() + " is not tame");
      const auto tubes = lfd::find_tubes(q, opt.config.entry_bound);
      j["graph_class"] = g.name();
      j["coxeter_convention"] = "phi = -E^{-1} E^T";
      j["delta"] = lfd::dim_to_json(q, *g.delta);
      j["regular_real_roots_below_delta"] = lfd::regular_real_roots_below_delta(q, opt.config.entry_bound).size();
      Json list = Json::array(), periods = Json::array();
      for (const auto& t : tubes) {
        Json simples = Json::array();
        lfd::DimVector sum = lfd::DimVector::zero(q.vertex_count());
        for (const auto& s : t.simples) {
          simples.push_back(lfd::dim_to_json(q, s));
          sum = sum + s;
        }
        list.push_back(Json{{"period", t.period()}, {"simples", simples}, {"sum_is_delta", sum == *g.delta}});
        periods.push_back(t.period());
      }
      j["periods"] = periods;
      j["tubes"] = list;
    } else if (*homog_cmd) {
      std::vector<lfd::DimVector> parts;
      for (const auto& t : parts_text) parts.emplace_back(parse_vector(t));
      if (parts.empty()) {
        const auto decs = lfd::root_decompositions(q, d);
        std::size_t with = 0;
        Json missing = Json::array();
        for (const auto& dec : decs) {
          if (lfd::witness_for_decomposition(q, dec)) {
            ++with;
          } else {
            Json m = Json::array();
            for (const auto& p : dec) m.push_back(lfd::dim_to_json(q, p));
            missing.push_back(m);
          }
        }
        j["root_decompositions"] = decs.size();
        j["with_euler_witness"] = with;
        j["without_witness"] = missing;
      } else {
        if (parts.size() == 2) j["euler_witness"] = lfd::euler_homogeneity_witness(q, d, parts[0], parts[1]);
        j["quasihomogeneity"] = lfd::to_json(lfd::quasihom_certificate(q, d, parts, std::nullopt, opt.config));
      }
    }
    emit(j, opt.format, out);
    return code;
  } catch (const lfd::Error& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  }
}

}  // namespace lfdtool
