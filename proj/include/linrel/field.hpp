#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace linrel {

enum class FieldKind { Rationals, PrimeField };

// The coefficient field: exact rationals, or integers mod a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals();
  static FieldSpec prime(std::int64_t p);

  // "q" for the rationals, "f<p>" for a prime field.
  static FieldSpec parse(const std::string& token);
  std::string token() const;

  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  bool operator==(const FieldSpec&) const = default;
};

// One field element in canonical form: a reduced fraction with positive
// denominator, or a residue in [0, p). Equality is structural.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar rational(long long num, long long den);
  static Scalar from_mpq(mpq_class v);
  static Scalar residue(const FieldSpec& f, long long v);
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  const mpq_class& rat() const;
  std::int64_t res() const;

  Scalar operator-() const;
  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& b) const;

 private:
  Scalar(FieldSpec f, mpq_class v) : field_(f), value_(std::move(v)) {}
  Scalar(FieldSpec f, std::int64_t r) : field_(f), value_(r) {}

  FieldSpec field_;
  // Rationals hold an mpq_class, prime fields an int64 residue.
  std::variant<mpq_class, std::int64_t> value_;
};

}  // namespace linrel
