#include "linrel/field.hpp"

#include <cstdlib>

#include "linrel/error.hpp"

namespace linrel {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(long long v, std::int64_t p) {
  std::int64_t r = static_cast<std::int64_t>(v % p);
  if (r < 0) r += p;
  return r;
}

// Extended Euclid; n must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t n, std::int64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = n;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  internal_check(r == 1, "modular inverse of a nonunit");
  return t < 0 ? t + p : t;
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

FieldSpec FieldSpec::prime(std::int64_t p) {
  require(p >= 2 && p <= INT32_MAX, "prime modulus out of range");
  require(is_prime(p), "modulus is not prime: " + std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& token) {
  if (token == "q") return rationals();
  if (token.size() >= 2 && token[0] == 'f') {
    char* end = nullptr;
    long long p = std::strtoll(token.c_str() + 1, &end, 10);
    require(end && *end == '\0', "bad field token: " + token);
    return prime(p);
  }
  throw Error("bad field token: " + token + " (expected q or f<p>)");
}

std::string FieldSpec::token() const {
  return kind == FieldKind::Rationals ? "q" : "f" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(static_cast<long>(v)));
  return Scalar(f, mod_reduce(v, f.p));
}

Scalar Scalar::rational(long long num, long long den) {
  require(den != 0, "zero denominator");
  mpq_class v(static_cast<long>(num), static_cast<long>(den));
  v.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(v));
}

Scalar Scalar::from_mpq(mpq_class v) {
  v.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(v));
}

Scalar Scalar::residue(const FieldSpec& f, long long v) {
  require(f.is_prime_field(), "residue scalar needs a prime field");
  return Scalar(f, mod_reduce(v, f.p));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (f.kind == FieldKind::Rationals) {
    mpq_class v;
    require(v.set_str(text, 10) == 0 && sgn(v.get_den()) != 0,
            "bad rational literal: " + text);
    v.canonicalize();
    return Scalar(f, std::move(v));
  }
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  require(end && *end == '\0', "bad residue literal: " + text);
  return residue(f, v);
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldKind::Rationals) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::int64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.kind == FieldKind::Rationals) return std::get<mpq_class>(value_) == 1;
  return std::get<std::int64_t>(value_) == 1;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::Rationals) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::int64_t>(value_));
}

const mpq_class& Scalar::rat() const {
  require(field_.kind == FieldKind::Rationals, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::int64_t Scalar::res() const {
  require(field_.is_prime_field(), "not a prime-field scalar");
  return std::get<std::int64_t>(value_);
}

Scalar Scalar::operator-() const {
  if (field_.kind == FieldKind::Rationals)
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  std::int64_t r = std::get<std::int64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.p - r);
}

Scalar Scalar::inv() const {
  require(!is_zero(), "division by zero");
  if (field_.kind == FieldKind::Rationals)
    return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
  return Scalar(field_, mod_inverse(std::get<std::int64_t>(value_), field_.p));
}

namespace {
void check_same_field(const Scalar& a, const Scalar& b) {
  require(a.field() == b.field(), "mixed-field scalar arithmetic");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (a.field_.kind == FieldKind::Rationals)
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  std::int64_t r = std::get<std::int64_t>(a.value_) + std::get<std::int64_t>(b.value_);
  if (r >= a.field_.p) r -= a.field_.p;
  return Scalar(a.field_, r);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (a.field_.kind == FieldKind::Rationals)
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
  std::int64_t r = std::get<std::int64_t>(a.value_) - std::get<std::int64_t>(b.value_);
  if (r < 0) r += a.field_.p;
  return Scalar(a.field_, r);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (a.field_.kind == FieldKind::Rationals)
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  return Scalar(a.field_, (std::get<std::int64_t>(a.value_) * std::get<std::int64_t>(b.value_)) % a.field_.p);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool Scalar::operator==(const Scalar& b) const {
  if (!(field_ == b.field_)) return false;
  if (field_.kind == FieldKind::Rationals)
    return std::get<mpq_class>(value_) == std::get<mpq_class>(b.value_);
  return std::get<std::int64_t>(value_) == std::get<std::int64_t>(b.value_);
}

}  // namespace linrel
