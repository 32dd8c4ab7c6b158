#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gk {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime field F_p. Elements are canonical residues in [0, p).
struct Fp {
  using elem = std::int64_t;
  std::int64_t p;

  explicit Fp(std::int64_t p_) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  }
  std::int64_t characteristic() const { return p; }

  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_int(std::int64_t n) const {
    elem r = n % p;
    return r < 0 ? r + p : r;
  }
  elem add(elem a, elem b) const { elem r = a + b; return r >= p ? r - p : r; }
  elem sub(elem a, elem b) const { elem r = a - b; return r < 0 ? r + p : r; }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem mul(elem a, elem b) const {
    return static_cast<elem>(static_cast<__int128>(a) * b % p);
  }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
      std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    return from_int(s0);
  }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }
  std::string str(elem a) const { return std::to_string(a); }
  bool operator==(const Fp& o) const { return p == o.p; }
};

// The rationals with arbitrary-precision, auto-normalized fractions.
struct QQ {
  using elem = bigrat;

  std::int64_t characteristic() const { return 0; }

  elem zero() const { return elem(0); }
  elem one() const { return elem(1); }
  elem from_int(std::int64_t n) const { return elem(n); }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const elem& a) const { return a == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  std::string str(const elem& a) const { return a.str(); }
  bool operator==(const QQ&) const { return true; }
};

}  // namespace gk
