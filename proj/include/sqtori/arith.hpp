#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace sqtori::arith {

using Int = std::uint64_t;

// Largest n accepted by factorize and the single-value routes.
inline constexpr Int kMaxN = static_cast<Int>(std::numeric_limits<std::int64_t>::max());

// Default upper bound on N for sieve_multiplicative (about 30 bytes per entry).
inline constexpr Int kDefaultMaxSieve = 10'000'000;

struct PrimePower {
  Int prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization n = prod p_i^a_i with primes strictly increasing.
///
/// Instances are produced by factorize() or by from_factors(), which
/// validates the list and recomputes n. The factor list of 1 is empty.
class PrimeFactorization {
public:
  static PrimeFactorization from_factors(std::vector<PrimePower> factors);

  Int value() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }
  // Number of distinct primes (omega).
  std::size_t omega() const { return factors_.size(); }

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

private:
  friend PrimeFactorization factorize(Int n);
  PrimeFactorization(Int n, std::vector<PrimePower> factors) : n_(n), factors_(std::move(factors)) {}

  Int n_ = 1;
  std::vector<PrimePower> factors_;
};

bool is_prime(Int n);

// Deterministic trial division up to sqrt(n). Throws DomainError for n = 0
// or n > kMaxN.
PrimeFactorization factorize(Int n);

Int euler_phi(const PrimeFactorization& f);
Int dedekind_psi(const PrimeFactorization& f);
Int sigma(const PrimeFactorization& f);
bool squarefree(const PrimeFactorization& f);
// Ascending list of all divisors.
std::vector<Int> divisors(const PrimeFactorization& f);

// psi(n) as the sum over wh = n of (w / gcd(w,h)) * phi(gcd(w,h)).
Int psi_via_cylinders(Int n);
// psi(n) as the sum of n/d over the square-free divisors d of n.
Int psi_prime(Int n);

/// Values of the multiplicative functions on [1, N] from one linear sieve.
///
/// Arrays are indexed directly by n; slot 0 is unused and holds 0.
struct SieveTables {
  std::vector<std::uint32_t> spf; // smallest prime factor, spf[1] = 1
  std::vector<Int> phi;
  std::vector<Int> psi;
  std::vector<Int> sigma;
  std::vector<std::uint8_t> squarefree;

  Int limit() const { return psi.empty() ? 0 : psi.size() - 1; }
};

// Smallest-prime-factor linear sieve. Throws DomainError for N = 0 and
// ResourceError when N > max_n.
SieveTables sieve_multiplicative(Int N, Int max_n = kDefaultMaxSieve);

} // namespace sqtori::arith
