#include "quiverhh/field.hpp"

#include <cctype>
#include <charconv>

#include "quiverhh/errors.hpp"

namespace quiverhh {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw InputError("GF(" + std::to_string(p) + ") is not a prime field");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto digits = trim(text.substr(3, text.size() - 4));
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

void Field::reduce_integer(mpz_class& z) const {
  mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), modulus_.get_mpz_t());
}

Scalar Field::make(long value) const { return make(mpq_class(value)); }

Scalar Field::make(const mpq_class& value) const {
  if (is_rationals()) return value;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  reduce_integer(num);
  reduce_integer(den);
  if (den == 0) throw InputError("coefficient " + value.get_str() + " is not defined in " + name());
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  mpz_class r = num * den_inv;
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= modulus_) r -= modulus_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += modulus_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return -a;
  if (a == 0) return a;
  return Scalar(modulus_ - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in " + name());
  if (is_rationals()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  Scalar result = make(1);
  Scalar base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string to_string(const Scalar& a) { return a.get_str(); }

}  // namespace quiverhh
