#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace hp0 {

/// Refused precondition (e.g. p divides d). Distinct from invalid input so
/// the CLI can map it to its own exit code.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// F_p with p < 2^31; elements are canonical representatives in [0, p).
/// Products fit in int64 without widening.
struct PrimeField {
  using Elem = int64_t;
  int64_t p;

  explicit PrimeField(int64_t prime) : p(prime) {
    if (prime < 2 || prime >= (int64_t(1) << 31))
      throw std::invalid_argument("prime must be in [2, 2^31)");
    if (!is_prime(prime)) throw std::invalid_argument("modulus is not prime");
  }

  Elem from_int(int64_t v) const {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    int64_t r = a + b;
    return r >= p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const {
    int64_t r = a - b;
    return r < 0 ? r + p : r;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem pow(Elem a, int64_t e) const {
    Elem r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
};

/// Exact rationals for the characteristic-zero mode (Jacobi-ring
/// cross-checks and stratum data derivation).
struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;

  Elem from_int(int64_t v) const { return Elem(v); }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
};

}  // namespace hp0
