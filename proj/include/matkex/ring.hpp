#pragma once

#include <memory>

#include "matkex/prime_field.hpp"

namespace matkex {

// Coefficient ring for matrices: the integers, or a prime field. Field
// rings share the PrimeField so a Ring is cheap to copy; equality is by
// kind and modulus.
class Ring {
 public:
  static Ring integers() { return Ring(nullptr); }
  static Ring mod(std::shared_ptr<const PrimeField> f) {
    if (!f) throw std::invalid_argument("Ring::mod: null field");
    return Ring(std::move(f));
  }
  static Ring mod(const PrimeField& f) {
    return Ring(std::make_shared<const PrimeField>(f));
  }

  bool is_field() const { return f_ != nullptr; }
  const PrimeField& field() const {
    if (!f_) throw std::logic_error("Ring: not a field");
    return *f_;
  }
  const std::shared_ptr<const PrimeField>& field_ptr() const { return f_; }

  BigInt canon(const BigInt& v) const { return f_ ? f_->canon(v) : v; }
  BigInt add(const BigInt& a, const BigInt& b) const {
    return f_ ? f_->add(a, b) : a + b;
  }
  BigInt sub(const BigInt& a, const BigInt& b) const {
    return f_ ? f_->sub(a, b) : a - b;
  }
  BigInt mul(const BigInt& a, const BigInt& b) const {
    return f_ ? f_->mul(a, b) : a * b;
  }
  BigInt neg(const BigInt& a) const { return f_ ? f_->neg(a) : -a; }

  bool is_unit(const BigInt& a) const {
    if (f_) return !f_->canon(a).is_zero();
    return a == BigInt(1) || a == BigInt(-1);
  }
  // Throws NonInvertible for non-units (over Z only +-1 qualify).
  BigInt inv(const BigInt& a) const {
    if (f_) return f_->inv(a);
    if (!is_unit(a)) throw NonInvertible();
    return a;
  }

  bool operator==(const Ring& o) const {
    if (is_field() != o.is_field()) return false;
    return !is_field() || *f_ == *o.f_;
  }

 private:
  explicit Ring(std::shared_ptr<const PrimeField> f) : f_(std::move(f)) {}
  std::shared_ptr<const PrimeField> f_;
};

}  // namespace matkex
