#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lfd/field.hpp"
#include "lfd/saito.hpp"

namespace lfd {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Monomials are exponent vectors; the map order is lexicographic.
class MultiPoly {
 public:
  using Monomial = std::vector<std::uint8_t>;

  explicit MultiPoly(std::size_t vars = 0) : vars_(vars) {}
  static MultiPoly constant(std::size_t vars, const mpq_class& c);
  static MultiPoly from_linear_form(std::size_t vars, const LinearForm& f);

  std::size_t variables() const { return vars_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const mpq_class& c);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const mpq_class& c) const;
  /// Exact quotient when `divisor` divides *this, nothing otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  /// Derivation along the vector field sum_j field[j] d/dx_j.
  MultiPoly derive(const std::vector<LinearForm>& field) const;

  PrimeField::Element evaluate(const PrimeField& k, const std::vector<PrimeField::Element>& x) const;
  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t vars_;
  std::map<Monomial, mpq_class> terms_;
};

/// det of the Saito matrix as a polynomial; cofactor expansion over rows with
/// memoized column subsets. Refuses sizes above `expand_limit`.
MultiPoly expand_saito_determinant(const SaitoMatrix& s, std::size_t expand_limit = 8);

struct SymbolicFactor {
  MultiPoly poly;
  long degree = 0;
  long multiplicity = 0;
};

struct SymbolicFactorization {
  MultiPoly f;
  bool identically_zero = false;
  std::vector<SymbolicFactor> factors;

  bool reduced() const;
  /// Degrees of the irreducible factors with multiplicity, sorted.
  std::vector<long> factor_degrees() const;
};

/// Factors f = det(Saito matrix) into irreducibles. Every irreducible factor
/// of a relative invariant is a semi-invariant, so the factors are found as
/// the lowest-degree solutions g of D_A g = 0 for the off-diagonal units A in
/// each block-constant torus weight space. Throws when a weight space carries
/// two independent semi-invariants (no open orbit).
SymbolicFactorization factor_saito_determinant(const SaitoMatrix& s, std::size_t expand_limit = 8);

}  // namespace lfd
