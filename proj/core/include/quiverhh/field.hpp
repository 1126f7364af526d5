#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quiverhh {

using Scalar = mpq_class;

/// The coefficient field: the rationals or a prime field GF(p).
///
/// Elements of GF(p) are stored as integers in [0, p) inside an mpq_class so that
/// every routine in the library works with a single scalar type. All arithmetic
/// must go through the field so that residues stay canonical.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws InputError when p is not prime.
  static Field prime(unsigned long p);
  /// Accepts "Q" or "GF(p)".
  static Field parse(std::string_view text);

  unsigned long characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::string name() const;

  Scalar make(long value) const;
  /// Maps an exact rational into the field. Throws InputError when the
  /// denominator vanishes modulo p.
  Scalar make(const mpq_class& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, unsigned long e) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(unsigned long p) : p_(p), modulus_(p) {}

  void reduce_integer(mpz_class& z) const;

  unsigned long p_ = 0;
  mpz_class modulus_ = 0;
};

bool is_prime(unsigned long n);

std::string to_string(const Scalar& a);

}  // namespace quiverhh
