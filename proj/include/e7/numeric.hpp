#pragma once

// Exact scalar types and the ring descriptors that parameterize every
// matrix and linear-algebra routine in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e7 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of the prime field Z/pZ. The modulus travels with the value so
/// that mixing elements of different fields is caught at run time.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp& operator+=(const Fp& o) {
    p_ = join(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    p_ = join(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    p_ = join(o);
    v_ = p_ == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const {
    Fp r = *this;
    if (r.v_ != 0) r.v_ = p_ - r.v_;
    return r;
  }
  friend Fp operator*(Fp a, long long k) { return a *= Fp(k, a.p_); }
  friend Fp operator*(long long k, Fp a) { return a * k; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && (a.p_ == b.p_ || a.v_ == 0); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t base = v_, e = p_ - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    Fp r;
    r.v_ = static_cast<std::uint32_t>(acc);
    r.p_ = p_;
    return r;
  }

 private:
  std::uint32_t join(const Fp& o) const {
    // p == 0 marks a default-constructed zero that adopts the other modulus.
    if (p_ == o.p_ || o.p_ == 0) return p_;
    if (p_ == 0) return o.p_;
    throw std::invalid_argument("Fp: modulus mismatch");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Ring descriptors. Each one names the element type and knows how to embed
// integers; generic code is written against this small interface.

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool is_field = false;
  value_type from_int(long long v) const { return Integer(static_cast<long>(v)); }
  value_type from_integer(const Integer& v) const { return v; }
  value_type from_rational(const Rational& v) const {
    if (v.get_den() != 1) throw std::domain_error("non-integral value in the integer ring");
    return v.get_num();
  }
  std::string tag() const { return "int"; }
  std::uint32_t characteristic() const { return 0; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;
  value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
  value_type from_integer(const Integer& v) const { return Rational(v); }
  value_type from_rational(const Rational& v) const { return v; }
  std::string tag() const { return "rat"; }
  std::uint32_t characteristic() const { return 0; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
  using value_type = Fp;
  static constexpr bool is_field = true;
  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime >= (1u << 31) || !is_prime(prime)) throw std::invalid_argument("PrimeField: " + std::to_string(prime) + " is not a supported prime");
  }
  value_type from_int(long long v) const { return Fp(v, p); }
  value_type from_integer(const Integer& v) const {
    Integer r = v % p;
    return Fp(r.get_si(), p);
  }
  value_type from_rational(const Rational& v) const;
  std::string tag() const { return "fp"; }
  std::uint32_t characteristic() const { return p; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

// ---------------------------------------------------------------------------
// Uniform helpers over the three element types.

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline bool is_zero(long long x) { return x == 0; }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  return 1 / x;
}
inline Fp inverse(const Fp& x) { return x.inverse(); }

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const Fp& x);

/// Parses "a" or "a/b" (optionally signed) into a normalized rational.
Rational parse_rational(std::string_view s);
Integer parse_integer(std::string_view s);

/// Lift a rational into Z/pZ; throws if p divides the denominator.
Fp to_fp(const Rational& x, std::uint32_t p);

inline Fp PrimeField::from_rational(const Rational& v) const { return to_fp(v, p); }

}  // namespace e7
