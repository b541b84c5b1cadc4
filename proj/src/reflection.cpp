#include "lfd/reflection.hpp"

#include <algorithm>

namespace lfd {

bool is_source(const Quiver& q, std::size_t k) {
  return std::none_of(q.arrows().begin(), q.arrows().end(), [k](const Arrow& a) { return a.target == k; });
}

bool is_sink(const Quiver& q, std::size_t k) {
  return std::none_of(q.arrows().begin(), q.arrows().end(), [k](const Arrow& a) { return a.source == k; });
}

Quiver reflect_quiver(const Quiver& q, std::size_t k) {
  if (k >= q.vertex_count()) throw InputError("vertex index out of range");
  if (q.has_loop_at(k)) throw LoopAtVertex("no reflection at a vertex with a loop");
  if (!is_source(q, k) && !is_sink(q, k)) throw InputError("vertex " + q.name(k) + " is neither a source nor a sink");
  auto arrows = q.arrows();
  for (auto& a : arrows)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  return Quiver(q.vertices(), arrows);
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::reflect_source:
      return "reflect_source";
    case StepKind::reflect_sink:
      return "reflect_sink";
    case StepKind::prune:
      return "prune";
  }
  return "?";
}

ReflectionStep reflection_step(const Quiver& q, const DimVector& d, std::size_t k) {
  require_same_length(q, d);
  const auto kind = is_source(q, k) ? StepKind::reflect_source : StepKind::reflect_sink;
  auto rq = reflect_quiver(q, k);
  return {kind, q.name(k), q, d, std::move(rq), reflect(q, k, d)};
}

namespace {

long long neighbour_sum(const Quiver& q, const DimVector& d, std::size_t k) {
  long long s = 0;
  for (auto a : q.incident_arrows(k)) {
    const auto& ar = q.arrow(a);
    s += d[ar.source == k ? ar.target : ar.source];
  }
  return s;
}

}  // namespace

std::optional<ReflectionStep> prune_degenerate_arrow(const Quiver& q, const DimVector& d) {
  require_same_length(q, d);
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    if (q.has_loop_at(k) || (!is_source(q, k) && !is_sink(q, k))) continue;
    const auto arrows = q.incident_arrows(k);
    if (arrows.empty() || d[k] != neighbour_sum(q, d, k)) continue;
    const auto& ar = q.arrow(arrows.front());
    const std::size_t l = ar.source == k ? ar.target : ar.source;
    if (arrows.size() != 1 || d[k] != 1 || d[l] != 1)
      throw NotLfdShape("vertex " + q.name(k) + " has d_k equal to the sum of its neighbours but is not a single arrow "
                        "between one-dimensional vertices");
    std::vector<std::string> names;
    std::vector<long long> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (v != k) {
        names.push_back(q.name(v));
        dims.push_back(d[v]);
      }
    auto shift = [k](std::size_t v) { return v > k ? v - 1 : v; };
    std::vector<Arrow> kept;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (a != arrows.front()) kept.push_back({shift(q.arrow(a).source), shift(q.arrow(a).target)});
    return ReflectionStep{StepKind::prune, q.name(k), q, d, Quiver(names, kept), DimVector(dims)};
  }
  return std::nullopt;
}

NormalForm bipartite_normal_form(const Quiver& q, const DimVector& d, std::size_t max_steps) {
  require_same_length(q, d);
  if (!is_tree(q)) throw InputError("normal form needs a tree quiver");
  if (!d.is_sincere()) throw NotSincere("normal form needs a sincere dimension vector");
  NormalForm nf{q, d, {}};
  while (true) {
    const auto st = stages(nf.quiver);
    if (st.top() <= 1) return nf;
    if (nf.trace.size() >= max_steps) throw StepLimit("normal form not reached in " + std::to_string(max_steps) + " steps");
    if (auto pruned = prune_degenerate_arrow(nf.quiver, nf.dim)) {
      nf.quiver = pruned->after_quiver;
      nf.dim = pruned->after_dim;
      nf.trace.push_back(std::move(*pruned));
      continue;
    }
    // Lowest-stage vertices are sources.
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < nf.quiver.vertex_count() && !pick; ++k) {
      if (st.level[k] != 0) continue;
      if (nf.dim[k] > neighbour_sum(nf.quiver, nf.dim, k))
        throw NotLfdShape("vertex " + nf.quiver.name(k) + " has d_k larger than the sum of its neighbours");
      pick = k;
    }
    if (!pick) throw Error("no reflectable vertex on the lowest stage");
    auto step = reflection_step(nf.quiver, nf.dim, *pick);
    nf.quiver = step.after_quiver;
    nf.dim = step.after_dim;
    nf.trace.push_back(std::move(step));
  }
}

Json to_json(const ReflectionStep& s) {
  return Json{{"op", to_string(s.kind)},
              {"vertex", s.vertex},
              {"dim_before", dim_to_json(s.before_quiver, s.before_dim)},
              {"dim_after", dim_to_json(s.after_quiver, s.after_dim)},
              {"tits_before", tits_form(s.before_quiver, s.before_dim)},
              {"tits_after", tits_form(s.after_quiver, s.after_dim)}};
}

Json to_json(const NormalForm& nf) {
  Json trace = Json::array();
  for (const auto& s : nf.trace) trace.push_back(to_json(s));
  return Json{{"quiver", quiver_to_json(nf.quiver, nf.dim)}, {"trace", trace}, {"steps", nf.trace.size()}};
}

}  // namespace lfd
