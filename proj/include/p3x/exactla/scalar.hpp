#ifndef P3X_EXACTLA_SCALAR_HPP
#define P3X_EXACTLA_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace p3x::exactla {

/// Arbitrary-precision rational. mpq_class keeps the canonical form
/// (positive denominator, reduced) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Raised when a prime divides a stored denominator.
class BadPrime : public std::runtime_error {
 public:
  explicit BadPrime(std::uint64_t p)
      : std::runtime_error("prime " + std::to_string(p) +
                           " divides a stored denominator"),
        prime(p) {}
  std::uint64_t prime;
};

inline Scalar parse_scalar(const std::string& text) {
  Scalar q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// x mod p in [0, p).
inline std::uint64_t mod_u64(const Integer& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e,
                             std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

/// Inverse modulo a prime (a must be nonzero mod p).
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

/// Reduce a rational modulo p; throws BadPrime when p | denominator.
inline std::uint64_t mod_p(const Scalar& q, std::uint64_t p) {
  const std::uint64_t den = mod_u64(q.get_den(), p);
  if (den == 0) throw BadPrime(p);
  const std::uint64_t num = mod_u64(q.get_num(), p);
  return den == 1 ? num : mul_mod(num, inv_mod(den, p), p);
}

}  // namespace p3x::exactla

#endif  // P3X_EXACTLA_SCALAR_HPP
