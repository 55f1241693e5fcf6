#include "multimorse/ring.hpp"

#include <charconv>

namespace multimorse {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(Module::complex, "coefficient modulus " + std::to_string(p) + " is not prime");
  }
}

std::string PrimeField::name() const { return "Z/" + std::to_string(p_); }

PrimeField::value_type PrimeField::inverse(value_type a) const {
  if (a == 0) throw Error(Module::complex, "division by zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Module::io, "bad coefficient '" + std::string(text) + "' for " + name());
  }
  return from_int(v);
}

Rationals::value_type Rationals::inverse(const value_type& a) const {
  if (a == 0) throw Error(Module::complex, "division by zero in Q");
  return value_type(1) / a;
}

Rationals::value_type Rationals::divide(const value_type& a, const value_type& b) const {
  if (b == 0) throw Error(Module::complex, "division by zero in Q");
  return a / b;
}

std::string Rationals::to_string(const value_type& a) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

Rationals::value_type Rationals::parse(std::string_view text) const {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return value_type(boost::multiprecision::cpp_int(std::string(text)));
    }
    boost::multiprecision::cpp_int num(std::string(text.substr(0, slash)));
    boost::multiprecision::cpp_int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::runtime_error("zero denominator");
    return value_type(num, den);
  } catch (const std::exception&) {
    throw Error(Module::io, "bad rational coefficient '" + std::string(text) + "'");
  }
}

Integers::value_type Integers::divide(const value_type& a, const value_type& b) const {
  if (b == 0) throw Error(Module::complex, "division by zero in Z");
  value_type q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw Error(Module::complex,
                "non-integer quotient " + a.str() + "/" + b.str() + " over Z");
  }
  return q;
}

Integers::value_type Integers::parse(std::string_view text) const {
  try {
    return value_type(std::string(text));
  } catch (const std::exception&) {
    throw Error(Module::io, "bad integer coefficient '" + std::string(text) + "'");
  }
}

}  // namespace multimorse
