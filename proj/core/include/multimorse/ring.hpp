#pragma once

// Coefficient rings for chain complexes. Every ring is a small value type
// exposing the same static interface so that complexes, reductions and the
// homology oracle can be templated on it:
//
//   value_type zero() / one() / from_int(long)
//   add, sub, mul, neg, is_zero, is_unit
//   divide(a, b)   exact quotient a / b; throws if b does not divide a
//   to_string / parse
//
// Arithmetic is exact in all three rings.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "multimorse/error.hpp"

namespace multimorse {

// Z/p for a prime p. Values are kept reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t modulus() const noexcept { return p_; }
  std::string name() const;

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1 % p_; }
  value_type from_int(long v) const noexcept {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_unit(value_type a) const noexcept { return a != 0; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  value_type inverse(value_type a) const;
  value_type divide(value_type a, value_type b) const { return mul(a, inverse(b)); }

  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view text) const;

 private:
  std::uint32_t p_;
};

// Exact rationals.
class Rationals {
 public:
  using value_type = boost::multiprecision::cpp_rational;
  static constexpr bool is_field = true;

  std::string name() const { return "Q"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_unit(const value_type& a) const { return a != 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type inverse(const value_type& a) const;
  value_type divide(const value_type& a, const value_type& b) const;

  std::string to_string(const value_type& a) const;
  value_type parse(std::string_view text) const;
};

// Exact integers. Only +1 and -1 are units.
class Integers {
 public:
  using value_type = boost::multiprecision::cpp_int;
  static constexpr bool is_field = false;

  std::string name() const { return "Z"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type divide(const value_type& a, const value_type& b) const;

  std::string to_string(const value_type& a) const { return a.str(); }
  value_type parse(std::string_view text) const;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace multimorse
