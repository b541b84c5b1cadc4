#pragma once

#include <cstddef>
#include <vector>

#include "lfd/quiver.hpp"

namespace lfd {

enum class Verdict { yes, no, inconclusive };

const char* to_string(Verdict v);

/// r_k(d) = d - (d, e_k)_Q e_k.
DimVector reflect(const Quiver& q, std::size_t k, const DimVector& d);

/// Decides whether d is a real root. Positive and negative vectors are
/// settled by height descent (for q_Q(d) = 1 a reducing reflection always
/// exists); a bounded breadth-first orbit search is the fallback when loops
/// block the descent.
Verdict is_real_root(const Quiver& q, const DimVector& d, std::size_t depth_bound = 1'000'000);

/// Coxeter transformation on dimension vectors. Convention:
/// phi = -E^{-1} E^T. Then <x, y>_Q = -<y, phi x>_Q and
/// phi(dim P(i)) = -dim I(i); phi realizes ddim o tau on non-projective
/// indecomposables.
struct CoxeterMatrix {
  IntMatrix phi;
  IntMatrix phi_inv;
};

CoxeterMatrix coxeter_matrix(const Quiver& q);
DimVector apply(const IntMatrix& m, const DimVector& d);
/// phi^steps d; negative steps use phi^{-1}.
DimVector tau_dim(const Quiver& q, const DimVector& d, long steps);
DimVector tau_dim(const CoxeterMatrix& c, const DimVector& d, long steps);

/// <delta, d>_Q; zero exactly on regular dimension vectors.
long long defect(const Quiver& q, const DimVector& d);

/// One exceptional tube at the level of dimension vectors: simples[i+1] is
/// phi(simples[i]) (indices mod period) and the simples add up to delta.
struct Tube {
  std::vector<DimVector> simples;

  std::size_t period() const { return simples.size(); }
  const DimVector& simple(long slot) const;
  /// Dimension vector of X(tau^slot T, length): sum of the `length`
  /// consecutive simples starting at `slot`.
  DimVector brick_dim(long slot, std::size_t length) const;
};

/// X(tau^slot T, length) inside a tube.
struct TubeBrick {
  long slot = 0;
  std::size_t length = 1;
};

/// Exceptional tubes of a tame acyclic quiver, largest period first. Entries
/// of the candidate vectors are additionally capped by entry_bound (0 means
/// no cap beyond delta).
std::vector<Tube> find_tubes(const Quiver& q, long long entry_bound = 0);

/// Dimension vectors e with 0 < e < delta, q_Q(e) = 1 and defect 0.
std::vector<DimVector> regular_real_roots_below_delta(const Quiver& q, long long entry_bound = 0);

/// Ext(X1, X2) != 0 for two bricks of the same tube, by the combinatorial
/// criterion: 1 <= a <= r1, 1 <= b <= r2, a + r2 = b + r1 and
/// T2 = tau^a T1, tau^{r2-1} T2 = tau^b tau^{r1-1} T1 (slots mod period).
bool tube_ext_nonzero(const Tube& t, const TubeBrick& x1, const TubeBrick& x2);

/// True when the directed graph on `parts` with an edge i -> j whenever
/// Ext(parts_i, parts_j) != 0 has no directed cycle (self-loops included).
/// Requires the total dimension of the parts to be strictly below delta.
bool tube_chain_acyclic(const Tube& t, const std::vector<TubeBrick>& parts);

}  // namespace lfd
