#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "lfd/errors.hpp"

namespace lfd {

using Rng = std::mt19937_64;

/// 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime(std::uint64_t n);

/// A field in the sense used throughout the library: a small value object
/// holding whatever context the arithmetic needs (the modulus, for prime
/// fields), with elements as plain values. `Element{}` is always zero.
template <class F>
concept ExactField = requires(const F& k, const typename F::Element& a, long long v, Rng& rng) {
  typename F::Element;
  { k.zero() } -> std::same_as<typename F::Element>;
  { k.one() } -> std::same_as<typename F::Element>;
  { k.from_int(v) } -> std::same_as<typename F::Element>;
  { k.add(a, a) } -> std::same_as<typename F::Element>;
  { k.sub(a, a) } -> std::same_as<typename F::Element>;
  { k.mul(a, a) } -> std::same_as<typename F::Element>;
  { k.neg(a) } -> std::same_as<typename F::Element>;
  { k.inv(a) } -> std::same_as<typename F::Element>;
  { k.div(a, a) } -> std::same_as<typename F::Element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.equal(a, a) } -> std::same_as<bool>;
  { k.random(rng) } -> std::same_as<typename F::Element>;
  { k.characteristic() } -> std::same_as<std::uint64_t>;
  { k.to_string(a) } -> std::same_as<std::string>;
};

/// Integers modulo an odd prime p < 2^63, elements reduced to [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element random(Rng& rng) const { return std::uniform_int_distribution<Element>(0, p_ - 1)(rng); }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Arbitrary-precision rationals (GMP). `random` draws small integers, which
/// is what the sampling routines want over Q.
class RationalField {
 public:
  using Element = mpq_class;

  static constexpr long long kSampleBound = 12;

  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw Error("division by zero in Q");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element random(Rng& rng) const {
    return from_int(std::uniform_int_distribution<long long>(-kSampleBound, kSampleBound)(rng));
  }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

}  // namespace lfd
