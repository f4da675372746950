#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ptl/errors.hpp"

namespace ptl {

/// Element of a finite field, encoded as an integer in 0..q-1.
/// The code packs the coefficient vector of the polynomial residue in base
/// #k, where #k is the size of the base field (base p for prime fields).
using felem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic for GF(p^e), optionally built as an explicit extension of
/// a smaller field (used for towers k ⊂ K where K is viewed as a k-vector
/// space in its power basis).
///
/// Immutable after construction; safe to share across threads.
class Field {
public:
  /// GF(p^e) with the lexicographically least monic irreducible modulus of
  /// degree e over GF(p), coefficients compared low-to-high. Deterministic.
  static FieldPtr make(std::uint64_t p, std::uint32_t e);

  /// Degree-m extension of `base`, same lex-least modulus rule with
  /// coefficients in the base field.
  static FieldPtr extension(FieldPtr base, std::uint32_t m);

  std::uint64_t p() const { return p_; }
  /// Total field size.
  std::uint64_t q() const { return q_; }
  /// Degree over the base field (= e for prime-based fields).
  std::uint32_t degree() const { return deg_; }
  /// Base field of the extension; null for prime fields.
  const FieldPtr& base() const { return base_; }
  bool prime_field() const { return base_ == nullptr && deg_ == 1; }

  /// Modulus over the base field, low-to-high, length degree()+1, monic.
  const std::vector<felem>& modulus() const { return modulus_; }

  felem zero() const { return 0; }
  felem one() const { return 1; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;
  felem div(felem a, felem b) const;
  /// Any integer exponent; negative exponents require a nonzero base.
  felem pow(felem a, long long n) const;

  /// Smallest generator (by code) of the multiplicative group.
  felem generator() const { return generator_; }

  /// Digits of `a` over the base field, low-to-high, length degree().
  std::vector<felem> digits(felem a) const;
  felem from_digits(const std::vector<felem>& ds) const;

  /// Human-readable polynomial form, e.g. "x^2+x+1"; prime fields print the
  /// integer code.
  std::string render(felem a) const;
  static std::string render_poly(const std::vector<felem>& coeffs_low_to_high);

  /// Parses "p^e" or a plain prime-power integer "q".
  static FieldPtr parse_spec(const std::string& spec);

private:
  Field() = default;
  void init_tables();
  felem mul_generic(felem a, felem b) const;

  FieldPtr base_;
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t base_q_ = 0;  // size of the base field (= p for prime fields)
  std::uint32_t deg_ = 1;
  std::vector<felem> modulus_;
  felem generator_ = 0;
  // discrete log / antilog tables, built for q <= 2^16
  std::vector<std::uint32_t> log_;
  std::vector<felem> exp_;
};

/// True if n is prime (trial division; inputs are desk-scale).
bool is_prime(std::uint64_t n);

/// Factors q as p^e with p prime; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& e);

}  // namespace ptl
