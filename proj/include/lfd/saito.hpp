#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfd/linalg.hpp"
#include "lfd/poly.hpp"
#include "lfd/quiver.hpp"
#include "lfd/rep_space.hpp"
#include "lfd/roots.hpp"

namespace lfd {

/// Integer linear form in the coordinates of Rep(Q,d). Coordinates are
/// ordered by arrow, then column-major inside the arrow's matrix.
struct LinearForm {
  std::vector<std::pair<std::size_t, long long>> terms;  // sorted by coordinate, no zero coefficients
  long long constant = 0;

  void add(std::size_t coordinate, long long coefficient);
  bool is_zero() const { return terms.empty() && constant == 0; }

  template <ExactField F>
  typename F::Element evaluate(const F& k, const std::vector<typename F::Element>& x) const {
    auto v = k.from_int(constant);
    for (const auto& [c, a] : terms) v = k.add(v, k.mul(k.from_int(a), x[c]));
    return v;
  }
};

/// gl(Q,d) matrix unit E_{row,col} at a vertex.
struct MatrixUnit {
  std::size_t vertex;
  std::size_t row;
  std::size_t col;
};

/// Column index of x_a(row, col).
std::size_t rep_coordinate(const Quiver& q, const DimVector& d, std::size_t arrow, std::size_t row, std::size_t col);

/// Rows: vector fields x -> (A_{t a} x_a - x_a A_{s a})_a for the matrix units
/// of gl(Q,d), ordered by vertex then row-major, with the last diagonal unit of
/// the last vertex removed. Columns: coordinates of Rep(Q,d).
struct SaitoMatrix {
  Quiver quiver;
  DimVector dim;
  std::vector<MatrixUnit> rows;
  std::vector<std::vector<LinearForm>> entries;

  std::size_t size() const { return entries.size(); }
};

SaitoMatrix build_saito_matrix(const Quiver& q, const DimVector& d);

/// Coefficients of the vector field x -> (A_{t a} x_a - x_a A_{s a})_a for A = u.
std::vector<LinearForm> unit_vector_field(const Quiver& q, const DimVector& d, const MatrixUnit& u);

/// Flattens a representation into Rep(Q,d) coordinates.
template <ExactField F>
std::vector<typename F::Element> rep_point(const Representation<F>& m) {
  std::vector<typename F::Element> x(static_cast<std::size_t>(rep_dimension(m.quiver, m.dim)));
  for (std::size_t a = 0; a < m.maps.size(); ++a)
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r)
      for (std::size_t c = 0; c < m.maps[a].cols(); ++c) x[rep_coordinate(m.quiver, m.dim, a, r, c)] = m.maps[a](r, c);
  return x;
}

template <ExactField F>
FieldMatrix<F> evaluate_matrix(const F& k, const SaitoMatrix& s, const std::vector<typename F::Element>& x) {
  if (x.size() != static_cast<std::size_t>(rep_dimension(s.quiver, s.dim)))
    throw DimensionMismatch("point does not lie in Rep(Q,d)");
  FieldMatrix<F> m(s.size(), s.size(), k.zero());
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < s.size(); ++c) m(r, c) = s.entries[r][c].evaluate(k, x);
  return m;
}

template <ExactField F>
typename F::Element evaluate_f(const SaitoMatrix& s, const F& k, const std::vector<typename F::Element>& x) {
  return det(k, evaluate_matrix(k, s, x));
}

template <ExactField F>
typename F::Element evaluate_f(const SaitoMatrix& s, const Representation<F>& point) {
  if (!(point.quiver == s.quiver) || point.dim != s.dim) throw DimensionMismatch("point does not lie in Rep(Q,d)");
  return evaluate_f(s, point.field, rep_point(point));
}

/// Restriction of f to the line a + t b, recovered by interpolation at
/// n + 1 nodes t = 0..n.
FieldPoly<PrimeField> restrict_to_line(const SaitoMatrix& s, const PrimeField& k,
                                       const std::vector<PrimeField::Element>& a,
                                       const std::vector<PrimeField::Element>& b);

enum class Reducedness { reduced, not_reduced, identically_zero, inconclusive };
const char* to_string(Reducedness r);

struct Provenance {
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

struct ReducednessResult {
  Reducedness verdict = Reducedness::inconclusive;
  /// Trials whose restriction had full degree n and was squarefree.
  std::size_t squarefree_witnesses = 0;
  /// Trials whose restriction had full degree n.
  std::size_t full_degree_trials = 0;
  Provenance provenance;
};

/// `trials` independent (line, prime) restrictions; trial t works over
/// primes[t % primes.size()]. One full-degree squarefree restriction proves
/// f reduced; full-degree restrictions that are all non-squarefree give
/// not_reduced; all-zero evaluations give identically_zero.
ReducednessResult reducedness_test(const SaitoMatrix& s, const std::vector<std::uint64_t>& primes, std::size_t trials,
                                   Rng& rng, std::uint64_t seed_for_record = 0);

/// The largest primes <= start, descending, count of them.
std::vector<std::uint64_t> primes_below(std::uint64_t start, std::size_t count);

bool single_coordinate_basis_check(const SaitoMatrix& s);

struct Config {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 20240531;
  std::size_t trials = 3;
  /// 0: use the largest entry of d.
  long long entry_bound = 0;
  std::size_t expand_limit = 8;
  bool component_degrees = true;
};

/// Tree grading degree of a relative invariant with character chi:
/// sum_i h(i) d_i chi_i, chi = E m (right) or -E^T m (left).
long long component_degree(const Quiver& q, const DimVector& d, const DimVector& m, Side side);
DimVector character(const Quiver& q, const DimVector& m, Side side);

struct DegreeSumCertificate {
  bool found = false;
  std::vector<std::size_t> subset;  // indices into the candidate list
  std::vector<long long> degrees;   // degree of every candidate
  bool non_unique = false;
};

/// Looks for #Q0 - 1 candidates whose degrees add up to dim Rep(Q,d).
DegreeSumCertificate degree_sum_check(const Quiver& q, const DimVector& d, const std::vector<PerpCandidate>& perps);

/// x -> det(c_{x,M}) (right) or det(c_{M,x}) (left).
template <ExactField F>
std::function<typename F::Element(const Representation<F>&)> relative_invariant_det(const Quiver& q,
                                                                                    const DimVector& d,
                                                                                    const Representation<F>& m_rep,
                                                                                    Side side) {
  const long long pairing =
      side == Side::right ? euler_form(q, d, m_rep.dim) : euler_form(q, m_rep.dim, d);
  if (pairing != 0) throw NonSquare("c matrix of the relative invariant is not square");
  if (!(m_rep.quiver == q)) throw InputError("representation lives on a different quiver");
  return [m_rep, side, d](const Representation<F>& x) {
    if (x.dim != d) throw DimensionMismatch("point has the wrong dimension vector");
    const auto c = side == Side::right ? build_c_matrix(x, m_rep) : build_c_matrix(m_rep, x);
    return det(x.field, c);
  };
}

enum class LfdVerdict { linear_free, not_linear_free, inconclusive };
const char* to_string(LfdVerdict v);

struct ComponentDegrees {
  std::vector<PerpCandidate> simples;
  DegreeSumCertificate certificate;
  std::vector<long long> degrees;  // the certified subset, sorted
};

struct LfdReport {
  LfdVerdict verdict = LfdVerdict::inconclusive;
  std::vector<std::string> reasons;
  long long q_value = 0;
  long long degree = 0;  // dim Rep(Q,d)
  bool tree = false;
  std::optional<Verdict> schur;
  std::optional<ReducednessResult> reduced;
  std::optional<ComponentDegrees> components;
  std::string method;
  Provenance provenance;
  /// Set when d is not sincere: the verdict refers to the full subquiver on
  /// the support of d, and component degrees are in its coordinates.
  std::optional<QuiverInput> support;
};

/// Computes simple perpendicular candidates on `side` and their degrees.
ComponentDegrees component_degrees(const Quiver& q, const DimVector& d, const Config& config, Side side, Rng& rng);

LfdReport lfd_verdict(const Quiver& q, const DimVector& d, const Config& config);
Json to_json(const LfdReport& r, const Quiver& q);
Json to_json(const Provenance& p);
Json to_json(const ComponentDegrees& c, const Quiver& q);

/// <m,n>_Q != <n,m>_Q for a split m + n = d.
bool euler_homogeneity_witness(const Quiver& q, const DimVector& d, const DimVector& m, const DimVector& n);

/// All multisets of at least `min_parts` positive real roots adding up to d
/// (roots decided by is_real_root). Each decomposition is sorted.
std::vector<std::vector<DimVector>> root_decompositions(const Quiver& q, const DimVector& d, std::size_t min_parts = 2);

/// Some grouping of the parts into m + n gives an Euler homogeneity witness.
std::optional<std::pair<DimVector, DimVector>> witness_for_decomposition(const Quiver& q,
                                                                         const std::vector<DimVector>& parts);

enum class Quasihomogeneity { quasihomogeneous, weakly, none_found };
const char* to_string(Quasihomogeneity c);

struct QuasihomCertificate {
  Quasihomogeneity kind = Quasihomogeneity::none_found;
  /// quasihomogeneous: an ordering with Ext(M_i, M_j) = 0 for i <= j.
  std::vector<std::size_t> order;
  /// weakly: the indices in M_1; Ext(M_2, M_1) = 0.
  std::vector<std::size_t> first_group;
  std::string method;
};

/// Ext graph certificate from a matrix ext[i][j] = dim Ext(M_i, M_j).
QuasihomCertificate certificate_from_ext(const std::vector<std::vector<long long>>& ext);

/// Parts must add up to d. With `part_reps`, exts are computed from them;
/// otherwise tame quivers use the tube combinatorics (non-regular parts give
/// "weakly") and other quivers use sampled bricks.
QuasihomCertificate quasihom_certificate(const Quiver& q, const DimVector& d, const std::vector<DimVector>& parts,
                                         const std::optional<std::vector<Representation<PrimeField>>>& part_reps,
                                         const Config& config);
Json to_json(const QuasihomCertificate& c);

}  // namespace lfd
