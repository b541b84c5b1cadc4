#include "lfd/linalg.hpp"

namespace lfd {

namespace {

Matrix<mpz_class> integer_rows(const FieldMatrix<RationalField>& m, mpz_class* scale) {
  Matrix<mpz_class> out(m.rows(), m.cols());
  *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    *scale *= l;
  }
  return out;
}

// Bareiss elimination; returns the rank and leaves the last nonzero pivot in
// `last_pivot` (which equals the determinant, up to row-swap sign, when the
// matrix is square and nonsingular).
std::size_t bareiss(Matrix<mpz_class>& a, mpz_class* last_pivot, int* sign) {
  mpz_class prev = 1;
  std::size_t row = 0;
  *sign = 1;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      a.swap_rows(p, row);
      *sign = -*sign;
    }
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      for (std::size_t c = col + 1; c < a.cols(); ++c) {
        a(r, c) = a(row, col) * a(r, c) - a(r, col) * a(row, c);
        mpz_divexact(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev = a(row, col);
    ++row;
  }
  *last_pivot = prev;
  return row;
}

}  // namespace

std::size_t rank(const RationalField&, FieldMatrix<RationalField> m) {
  mpz_class scale;
  auto a = integer_rows(m, &scale);
  mpz_class pivot;
  int sign = 1;
  return bareiss(a, &pivot, &sign);
}

mpq_class det(const RationalField&, FieldMatrix<RationalField> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return mpq_class(1);
  mpz_class scale;
  auto a = integer_rows(m, &scale);
  mpz_class pivot;
  int sign = 1;
  if (bareiss(a, &pivot, &sign) < m.rows()) return mpq_class(0);
  mpq_class d(pivot * sign, scale);
  d.canonicalize();
  return d;
}

}  // namespace lfd
