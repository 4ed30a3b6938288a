#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sqtori/arith.hpp"

namespace sqtori::asymptotics {

using arith::Int;

struct ZetaConstants {
  double zeta2;
  double zeta4;
  double inv_zeta2;
  double inv_zeta4;
  double ratio_z2_z4;
};

// Closed forms pi^2/6 and pi^4/90 and the derived reciprocals and ratio.
const ZetaConstants& zeta_constants();

struct SeriesEstimate {
  double value;
  double error_bound;
};

// zeta(s) for s >= 2 as the first `terms` terms of sum k^-s plus an
// Euler-Maclaurin tail; error_bound is the magnitude of the first omitted
// correction.
SeriesEstimate zeta_series(int s, unsigned terms = 50);

/// psi(n) / sigma(n) for a single n.
///
/// `value` is the floating quotient of the exact integers; `product_value`
/// is the same ratio evaluated from the factorization alone by rho_factored.
struct RatioValue {
  Int psi;
  Int sigma;
  double value;
  double product_value;

  // psi == sigma as integers.
  bool is_one() const { return psi == sigma; }
};

RatioValue rho(const arith::PrimeFactorization& f);

// prod (1 - q^-2) / (1 - q^-(a+1)) over the given prime powers, without
// forming n. A factor with q^(a+1) > 2^63 contributes its numerator only.
// Throws DomainError on repeated primes, primes below 2 or zero exponents.
double rho_factored(std::span<const arith::PrimePower> factors);

// The first k primes (k small; trial division).
std::vector<Int> first_primes(unsigned k);

inline constexpr unsigned kMaxExtremalK = 50;

// rho(n_k) for n_k = (p_1 ... p_k)^k, 1 <= k <= 50.
double extremal_sequence_rho(unsigned k);

struct SweepRecord {
  Int n;
  Int psi;
  Int sigma;
  double rho;
  Int cum_psi;
  Int cum_sigma;
  double cum_ratio;
};

using SweepSink = std::function<void(const SweepRecord&)>;

// Running sums of psi and sigma over 1..N from the sieve. When `sink` is set
// it receives every row in order; the final row is returned.
SweepRecord partial_sums(Int N, const SweepSink& sink = {}, Int max_sieve = arith::kDefaultMaxSieve);

// Same accumulation over precomputed tables, for callers that already sieved.
SweepRecord partial_sums(const arith::SieveTables& tables, Int N, const SweepSink& sink = {});

// sum_{d <= N} q(d) / d^2 with q the square-free indicator.
double qd2_partial_sum(Int N, Int max_sieve = arith::kDefaultMaxSieve);
double qd2_partial_sum(const arith::SieveTables& tables, Int N);

} // namespace sqtori::asymptotics
