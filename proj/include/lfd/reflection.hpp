#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfd/errors.hpp"
#include "lfd/linalg.hpp"
#include "lfd/quiver.hpp"
#include "lfd/rep_space.hpp"
#include "lfd/roots.hpp"

namespace lfd {

bool is_source(const Quiver& q, std::size_t k);
bool is_sink(const Quiver& q, std::size_t k);

/// Reverses every arrow at k; arrow order is kept.
Quiver reflect_quiver(const Quiver& q, std::size_t k);

/// Reflection functor at a source (cokernel of (f_{k->i})_i) or a sink
/// (kernel of (g_{i->k})_i). Bases come from the reduced echelon forms of the
/// stacked maps.
template <ExactField F>
Representation<F> reflect_representation(const Representation<F>& m, std::size_t k) {
  m.validate();
  const auto& q = m.quiver;
  const auto& kf = m.field;
  if (k >= q.vertex_count()) throw InputError("vertex index out of range");
  if (q.has_loop_at(k)) throw LoopAtVertex("no reflection at a vertex with a loop");
  const bool source = is_source(q, k);
  if (!source && !is_sink(q, k)) throw InputError("vertex " + q.name(k) + " is neither a source nor a sink");

  const auto arrows_at = q.incident_arrows(k);
  std::vector<std::size_t> block_start;
  std::size_t total = 0;
  for (auto a : arrows_at) {
    const auto& ar = q.arrow(a);
    block_start.push_back(total);
    total += static_cast<std::size_t>(m.dim[source ? ar.target : ar.source]);
  }
  const std::size_t dk = static_cast<std::size_t>(m.dim[k]);

  Representation<F> out{kf, reflect_quiver(q, k), m.dim, m.maps};
  if (source) {
    FieldMatrix<F> stacked(total, dk, kf.zero());
    for (std::size_t b = 0; b < arrows_at.size(); ++b) {
      const auto& f = m.maps[arrows_at[b]];
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < dk; ++c) stacked(block_start[b] + r, c) = f(r, c);
    }
    if (rank(kf, stacked) != dk) throw NotInRepPrime("maps out of source " + q.name(k) + " are not jointly injective");
    const auto pi = left_nullspace(kf, stacked);  // (total - dk) x total
    out.dim[k] = static_cast<long long>(pi.rows());
    for (std::size_t b = 0; b < arrows_at.size(); ++b) {
      const auto& f = m.maps[arrows_at[b]];
      FieldMatrix<F> g(pi.rows(), f.rows(), kf.zero());
      for (std::size_t r = 0; r < pi.rows(); ++r)
        for (std::size_t c = 0; c < f.rows(); ++c) g(r, c) = pi(r, block_start[b] + c);
      out.maps[arrows_at[b]] = std::move(g);
    }
  } else {
    FieldMatrix<F> joined(dk, total, kf.zero());
    for (std::size_t b = 0; b < arrows_at.size(); ++b) {
      const auto& g = m.maps[arrows_at[b]];
      for (std::size_t r = 0; r < dk; ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) joined(r, block_start[b] + c) = g(r, c);
    }
    if (rank(kf, joined) != dk) throw NotInRepPrime("maps into sink " + q.name(k) + " are not jointly surjective");
    const auto kernel = nullspace(kf, joined);  // total x (total - dk)
    out.dim[k] = static_cast<long long>(kernel.cols());
    for (std::size_t b = 0; b < arrows_at.size(); ++b) {
      const auto& g = m.maps[arrows_at[b]];
      FieldMatrix<F> f(g.cols(), kernel.cols(), kf.zero());
      for (std::size_t r = 0; r < g.cols(); ++r)
        for (std::size_t c = 0; c < kernel.cols(); ++c) f(r, c) = kernel(block_start[b] + r, c);
      out.maps[arrows_at[b]] = std::move(f);
    }
  }
  out.validate();
  return out;
}

enum class StepKind { reflect_source, reflect_sink, prune };
const char* to_string(StepKind k);

struct ReflectionStep {
  StepKind kind;
  std::string vertex;
  Quiver before_quiver;
  DimVector before_dim;
  Quiver after_quiver;
  DimVector after_dim;
};

/// Reflects a source or sink k of (q, d) and records the step.
ReflectionStep reflection_step(const Quiver& q, const DimVector& d, std::size_t k);

/// Removes a source or sink k with d_k equal to the sum of its neighbours'
/// dimensions (smallest such k). That configuration must be a single arrow
/// between two one-dimensional vertices, otherwise NotLfdShape.
std::optional<ReflectionStep> prune_degenerate_arrow(const Quiver& q, const DimVector& d);

struct NormalForm {
  Quiver quiver;
  DimVector dim;
  std::vector<ReflectionStep> trace;
};

/// Prunes, then reflects the source on the lowest stage with the smallest
/// vertex id, until at most two stages remain.
NormalForm bipartite_normal_form(const Quiver& q, const DimVector& d, std::size_t max_steps = 1000);

Json to_json(const ReflectionStep& s);
Json to_json(const NormalForm& nf);

}  // namespace lfd
