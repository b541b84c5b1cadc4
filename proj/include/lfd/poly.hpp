#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lfd/field.hpp"

namespace lfd {

/// Dense univariate polynomial; coeffs[i] multiplies t^i. The zero polynomial
/// has no coefficients and degree -1.
template <class E>
struct UnivariatePoly {
  std::vector<E> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;
};

template <ExactField F>
using FieldPoly = UnivariatePoly<typename F::Element>;

template <ExactField F>
FieldPoly<F> normalized(const F& k, FieldPoly<F> a) {
  while (!a.coeffs.empty() && k.is_zero(a.coeffs.back())) a.coeffs.pop_back();
  return a;
}

template <ExactField F>
FieldPoly<F> make_poly(const F& k, std::vector<typename F::Element> coeffs) {
  return normalized(k, FieldPoly<F>{std::move(coeffs)});
}

template <ExactField F>
FieldPoly<F> poly_from_ints(const F& k, const std::vector<long long>& coeffs) {
  FieldPoly<F> p;
  for (long long c : coeffs) p.coeffs.push_back(k.from_int(c));
  return normalized(k, std::move(p));
}

template <ExactField F>
typename F::Element evaluate(const F& k, const FieldPoly<F>& a, const typename F::Element& t) {
  auto acc = k.zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = k.add(k.mul(acc, t), a.coeffs[i]);
  return acc;
}

template <ExactField F>
FieldPoly<F> add(const F& k, const FieldPoly<F>& a, const FieldPoly<F>& b) {
  FieldPoly<F> r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = k.add(r.coeffs[i], b.coeffs[i]);
  return normalized(k, std::move(r));
}

template <ExactField F>
FieldPoly<F> sub(const F& k, const FieldPoly<F>& a, const FieldPoly<F>& b) {
  FieldPoly<F> r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = k.sub(r.coeffs[i], b.coeffs[i]);
  return normalized(k, std::move(r));
}

template <ExactField F>
FieldPoly<F> mul(const F& k, const FieldPoly<F>& a, const FieldPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FieldPoly<F> r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (k.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = k.add(r.coeffs[i + j], k.mul(a.coeffs[i], b.coeffs[j]));
  }
  return normalized(k, std::move(r));
}

/// Returns (quotient, remainder) of a by b.
template <ExactField F>
std::pair<FieldPoly<F>, FieldPoly<F>> divmod(const F& k, FieldPoly<F> a, const FieldPoly<F>& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  a = normalized(k, std::move(a));
  FieldPoly<F> q;
  if (a.degree() < b.degree()) return {q, a};
  q.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), k.zero());
  const auto lead_inv = k.inv(b.coeffs.back());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    const auto factor = k.mul(a.coeffs.back(), lead_inv);
    q.coeffs[shift] = factor;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      a.coeffs[shift + i] = k.sub(a.coeffs[shift + i], k.mul(factor, b.coeffs[i]));
    a = normalized(k, std::move(a));
  }
  return {normalized(k, std::move(q)), a};
}

template <ExactField F>
FieldPoly<F> monic(const F& k, FieldPoly<F> a) {
  a = normalized(k, std::move(a));
  if (a.is_zero()) return a;
  const auto inv = k.inv(a.coeffs.back());
  for (auto& c : a.coeffs) c = k.mul(c, inv);
  return a;
}

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField F>
FieldPoly<F> poly_gcd(const F& k, FieldPoly<F> a, FieldPoly<F> b) {
  a = normalized(k, std::move(a));
  b = normalized(k, std::move(b));
  while (!b.is_zero()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, std::move(a));
}

template <ExactField F>
FieldPoly<F> derivative(const F& k, const FieldPoly<F>& a) {
  FieldPoly<F> d;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    d.coeffs.push_back(k.mul(k.from_int(static_cast<long long>(i)), a.coeffs[i]));
  return normalized(k, std::move(d));
}

/// gcd(a, a') is constant. Over F_p this needs p > deg a, otherwise a
/// p-th power could have vanishing derivative.
template <ExactField F>
bool is_squarefree(const F& k, const FieldPoly<F>& a) {
  const auto an = normalized(k, a);
  if (an.is_zero()) return false;
  const auto p = k.characteristic();
  if (p != 0 && static_cast<std::uint64_t>(an.degree()) >= p)
    throw PrimeTooSmall("squarefree test needs characteristic above degree " + std::to_string(an.degree()));
  return poly_gcd(k, an, derivative(k, an)).degree() == 0;
}

/// The unique polynomial of degree < points.size() through the given
/// (node, value) pairs (Newton divided differences).
template <ExactField F>
FieldPoly<F> interpolate(const F& k, const std::vector<std::pair<typename F::Element, typename F::Element>>& points) {
  const std::size_t n = points.size();
  std::vector<typename F::Element> dd;
  dd.reserve(n);
  for (const auto& pt : points) dd.push_back(pt.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const auto denom = k.sub(points[i].first, points[i - level].first);
      if (k.is_zero(denom)) throw InputError("interpolation nodes must be distinct");
      dd[i] = k.div(k.sub(dd[i], dd[i - 1]), denom);
    }
  }
  // Horner on the Newton form.
  FieldPoly<F> result;
  for (std::size_t i = n; i-- > 0;) {
    FieldPoly<F> factor{{k.neg(points[i].first), k.one()}};
    result = add(k, mul(k, result, factor), FieldPoly<F>{{dd[i]}});
  }
  return normalized(k, std::move(result));
}

template <ExactField F>
FieldPoly<F> powmod(const F& k, FieldPoly<F> base, std::uint64_t e, const FieldPoly<F>& modulus) {
  FieldPoly<F> result{{k.one()}};
  base = divmod(k, std::move(base), modulus).second;
  while (e) {
    if (e & 1) result = divmod(k, mul(k, result, base), modulus).second;
    base = divmod(k, mul(k, base, base), modulus).second;
    e >>= 1;
  }
  return result;
}

/// Degrees of the irreducible factors of a squarefree polynomial over F_p
/// (distinct-degree factorization), ascending.
std::vector<long> irreducible_factor_degrees(const PrimeField& k, const FieldPoly<PrimeField>& a);

}  // namespace lfd
