#include "lfd/poly.hpp"

namespace lfd {

std::vector<long> irreducible_factor_degrees(const PrimeField& k, const FieldPoly<PrimeField>& a) {
  auto f = monic(k, a);
  if (f.is_zero()) throw Error("factor degrees of the zero polynomial");
  if (!is_squarefree(k, f)) throw Error("distinct-degree factorization needs a squarefree input");
  std::vector<long> degrees;
  const FieldPoly<PrimeField> t{{k.zero(), k.one()}};
  auto h = t;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(k, h, k.characteristic(), f);
    auto g = poly_gcd(k, f, sub(k, h, t));
    if (g.degree() > 0) {
      for (long i = 0; i < g.degree() / d; ++i) degrees.push_back(d);
      f = divmod(k, f, g).first;
      h = divmod(k, h, f).second;
    }
  }
  if (f.degree() > 0) degrees.push_back(f.degree());
  return degrees;
}

}  // namespace lfd
