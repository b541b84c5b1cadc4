#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lfd/errors.hpp"
#include "lfd/linalg.hpp"
#include "lfd/quiver.hpp"
#include "lfd/roots.hpp"

namespace lfd {

/// A point of Rep(Q,d): maps[a] is the d_{t a} x d_{s a} matrix of arrow a.
template <ExactField F>
struct Representation {
  F field;
  Quiver quiver;
  DimVector dim;
  std::vector<FieldMatrix<F>> maps;

  void validate() const {
    require_same_length(quiver, dim);
    if (!dim.is_nonnegative()) throw InputError("dimension vector has a negative entry");
    if (maps.size() != quiver.arrow_count()) throw DimensionMismatch("one matrix per arrow expected");
    for (std::size_t a = 0; a < maps.size(); ++a) {
      const auto& ar = quiver.arrow(a);
      if (maps[a].rows() != static_cast<std::size_t>(dim[ar.target]) ||
          maps[a].cols() != static_cast<std::size_t>(dim[ar.source]))
        throw DimensionMismatch("matrix of arrow " + std::to_string(a) + " has the wrong shape");
    }
  }
};

template <ExactField F>
Representation<F> zero_representation(const F& k, const Quiver& q, const DimVector& d) {
  Representation<F> m{k, q, d, {}};
  for (const auto& a : q.arrows())
    m.maps.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]), k.zero());
  m.validate();
  return m;
}

/// Uniform entries over F_p, small integers over Q.
template <ExactField F>
Representation<F> sample_representation(const Quiver& q, const DimVector& d, const F& k, Rng& rng) {
  auto m = zero_representation(k, q, d);
  for (auto& f : m.maps)
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = k.random(rng);
  return m;
}

namespace detail {

inline std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
  return off;
}

}  // namespace detail

/// Matrix of c_{M,N}: (phi_i) -> (phi_{t a} f_a - g_a phi_{s a})_a.
/// Columns: vertex blocks Hom(V_i, W_i) in vertex order; rows: arrow blocks
/// Hom(V_{s a}, W_{t a}) in arrow order; both column-major within a block,
/// so entry (r, c) of a block sits at offset + c * rows + r.
template <ExactField F>
FieldMatrix<F> build_c_matrix(const Representation<F>& m, const Representation<F>& n) {
  if (!(m.quiver == n.quiver)) throw InputError("representations live on different quivers");
  const auto& q = m.quiver;
  const auto& k = m.field;
  const auto& dm = m.dim;
  const auto& dn = n.dim;

  std::vector<std::size_t> vsize, asize;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) vsize.push_back(static_cast<std::size_t>(dm[i] * dn[i]));
  for (const auto& a : q.arrows()) asize.push_back(static_cast<std::size_t>(dm[a.source] * dn[a.target]));
  const auto voff = detail::block_offsets(vsize);
  const auto aoff = detail::block_offsets(asize);

  FieldMatrix<F> c(aoff.back(), voff.back(), k.zero());
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& f = m.maps[ai];  // dm_t x dm_s
    const auto& g = n.maps[ai];  // dn_t x dn_s
    const std::size_t rows_out = static_cast<std::size_t>(dn[a.target]);
    const std::size_t cols_out = static_cast<std::size_t>(dm[a.source]);
    const std::size_t nt = static_cast<std::size_t>(dn[a.target]);
    const std::size_t ns = static_cast<std::size_t>(dn[a.source]);
    for (std::size_t r = 0; r < rows_out; ++r)
      for (std::size_t col = 0; col < cols_out; ++col) {
        const std::size_t row = aoff[ai] + col * rows_out + r;
        // phi_t f: sum over kk of phi_t(r, kk) f(kk, col), phi_t is dn_t x dm_t.
        for (std::size_t kk = 0; kk < static_cast<std::size_t>(dm[a.target]); ++kk) {
          const std::size_t var = voff[a.target] + kk * nt + r;
          c(row, var) = k.add(c(row, var), f(kk, col));
        }
        // g phi_s: sum over kk of g(r, kk) phi_s(kk, col), phi_s is dn_s x dm_s.
        for (std::size_t kk = 0; kk < ns; ++kk) {
          const std::size_t var = voff[a.source] + col * ns + kk;
          c(row, var) = k.sub(c(row, var), g(r, kk));
        }
      }
  }
  return c;
}

struct HomExtReport {
  long long hom = 0;
  long long ext = 0;
  /// Set when both arguments are the same representation.
  std::optional<long long> end;
};

template <ExactField F>
HomExtReport hom_ext(const Representation<F>& m, const Representation<F>& n) {
  const auto c = build_c_matrix(m, n);
  const auto r = static_cast<long long>(rank(m.field, c));
  HomExtReport out;
  out.hom = static_cast<long long>(c.cols()) - r;
  out.ext = static_cast<long long>(c.rows()) - r;
  if (&m == &n) out.end = out.hom;
  return out;
}

template <ExactField F>
long long end_dim(const Representation<F>& m) {
  return *hom_ext(m, m).end;
}

template <ExactField F>
bool is_brick(const Representation<F>& m) {
  return end_dim(m) == 1;
}

/// One-sided: yes as soon as a sampled point is a brick, inconclusive otherwise.
template <ExactField F>
Verdict is_schur_root(const Quiver& q, const DimVector& d, const F& k, Rng& rng, std::size_t trials) {
  if (!d.is_positive()) throw InputError("Schur test needs a positive dimension vector");
  for (std::size_t t = 0; t < trials; ++t)
    if (is_brick(sample_representation(q, d, k, rng))) return Verdict::yes;
  return Verdict::inconclusive;
}

/// Samples until a brick appears; nullopt after `trials` failures.
template <ExactField F>
std::optional<Representation<F>> sample_brick(const Quiver& q, const DimVector& d, const F& k, Rng& rng,
                                              std::size_t trials) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto m = sample_representation(q, d, k, rng);
    if (is_brick(m)) return m;
  }
  return std::nullopt;
}

/// right: Hom(M_d, N_e) = Ext(M_d, N_e) = 0, i.e. e in the right perpendicular
/// category of the generic representation M_d. left: the mirror condition.
enum class Side { left, right };

const char* to_string(Side s);

struct PerpCandidate {
  DimVector e;
  Side side;
};

/// Nonzero e with entries <= entry_bound, q_Q(e) = 1, Euler pairing with d zero
/// on the requested side. Purely combinatorial.
std::vector<DimVector> perp_dimension_vectors(const Quiver& q, const DimVector& d, long long entry_bound, Side side);

/// Perpendicular candidates certified against `generic` by sampling: some
/// representation N_e (out of `trials`) has hom = ext = 0 with it.
template <ExactField F>
std::vector<PerpCandidate> perp_candidates(const Representation<F>& generic, long long entry_bound,
                                           std::size_t trials, Side side, Rng& rng) {
  std::vector<PerpCandidate> out;
  for (const auto& e : perp_dimension_vectors(generic.quiver, generic.dim, entry_bound, side)) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto n = sample_representation(generic.quiver, e, generic.field, rng);
      const auto he = side == Side::right ? hom_ext(generic, n) : hom_ext(n, generic);
      if (he.hom == 0 && he.ext == 0) {
        out.push_back({e, side});
        break;
      }
    }
  }
  return out;
}

/// Candidates whose dimension vector is not a sum of two or more other
/// candidates (of the same side). These are the expected simples of the
/// perpendicular category.
std::vector<PerpCandidate> simple_perp_candidates(const std::vector<PerpCandidate>& candidates);

/// Serialization: {"modulus": p, "dim": {...}, "arrows": {"0": [[...]], ...}}
/// with row-major integer matrices.
Json representation_to_json(const Representation<PrimeField>& m);
Representation<PrimeField> representation_from_json(const Quiver& q, const Json& j);

}  // namespace lfd
