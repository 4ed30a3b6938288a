#include "sqtori/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sqtori/checked.hpp"
#include "sqtori/errors.hpp"

namespace sqtori::asymptotics {

const ZetaConstants& zeta_constants() {
  static const ZetaConstants c = [] {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    ZetaConstants z{};
    z.zeta2 = pi2 / 6.0;
    z.zeta4 = pi2 * pi2 / 90.0;
    z.inv_zeta2 = 6.0 / pi2;
    z.inv_zeta4 = 90.0 / (pi2 * pi2);
    z.ratio_z2_z4 = z.zeta2 / z.zeta4;
    return z;
  }();
  return c;
}

SeriesEstimate zeta_series(int s, unsigned terms) {
  if (s < 2) throw DomainError("zeta_series needs s >= 2");
  if (terms == 0) throw DomainError("zeta_series needs at least one term");

  double head = 0.0;
  for (unsigned k = terms; k >= 1; --k) head += std::pow(static_cast<double>(k), -s);

  // sum_{k>N} k^-s = N^(1-s)/(s-1) - N^-s/2 - sum_j B_2j/(2j)! f^(2j-1)(N) + R
  // with f(x) = x^-s, so f^(2j-1)(N) = -(s)_(2j-1) N^(-s-2j+1).
  const double n = terms;
  auto rising = [s](int len) {
    double r = 1.0;
    for (int i = 0; i < len; ++i) r *= s + i;
    return r;
  };
  constexpr double b2 = 1.0 / 6.0, b4 = -1.0 / 30.0, b6 = 1.0 / 42.0, b8 = -1.0 / 30.0;
  double tail = std::pow(n, 1 - s) / (s - 1) - 0.5 * std::pow(n, -s);
  tail += b2 / 2.0 * rising(1) * std::pow(n, -s - 1);
  tail += b4 / 24.0 * rising(3) * std::pow(n, -s - 3);
  tail += b6 / 720.0 * rising(5) * std::pow(n, -s - 5);
  const double next = std::abs(b8 / 40320.0 * rising(7) * std::pow(n, -s - 7));
  return {head + tail, next};
}

double rho_factored(std::span<const arith::PrimePower> factors) {
  double r = 1.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [q, a] = factors[i];
    if (q < 2) throw DomainError("rho_factored: primes must be at least 2");
    if (a == 0) throw DomainError("rho_factored: exponents must be at least 1");
    for (std::size_t j = 0; j < i; ++j)
      if (factors[j].prime == q) throw DomainError("rho_factored: duplicate prime " + std::to_string(q));

    const double qd = static_cast<double>(q);
    const double num = 1.0 - 1.0 / (qd * qd);
    // log2(q^(a+1)) > 63 means q^-(a+1) < 2^-63: treat the denominator as 1.
    const double log2_power = (a + 1.0) * std::log2(qd);
    const double den = log2_power > 63.0 ? 1.0 : 1.0 - std::pow(qd, -(a + 1.0));
    r *= num / den;
  }
  return r;
}

RatioValue rho(const arith::PrimeFactorization& f) {
  RatioValue r{};
  r.psi = arith::dedekind_psi(f);
  r.sigma = arith::sigma(f);
  r.value = static_cast<double>(r.psi) / static_cast<double>(r.sigma);
  r.product_value = rho_factored(f.factors());
  return r;
}

std::vector<Int> first_primes(unsigned k) {
  std::vector<Int> primes;
  for (Int c = 2; primes.size() < k; ++c)
    if (arith::is_prime(c)) primes.push_back(c);
  return primes;
}

double extremal_sequence_rho(unsigned k) {
  if (k < 1 || k > kMaxExtremalK) {
    throw DomainError("extremal index k must be in [1, " + std::to_string(kMaxExtremalK) + "]");
  }
  std::vector<arith::PrimePower> factors;
  for (Int p : first_primes(k)) factors.push_back({p, k});
  return rho_factored(factors);
}

SweepRecord partial_sums(const arith::SieveTables& tables, Int N, const SweepSink& sink) {
  if (N == 0) throw DomainError("sweep limit must be positive");
  if (N > tables.limit()) throw DomainError("sweep limit exceeds the sieved range");
  SweepRecord rec{};
  for (Int n = 1; n <= N; ++n) {
    rec.n = n;
    rec.psi = tables.psi[n];
    rec.sigma = tables.sigma[n];
    rec.rho = static_cast<double>(rec.psi) / static_cast<double>(rec.sigma);
    rec.cum_psi = checked::add(rec.cum_psi, rec.psi);
    rec.cum_sigma = checked::add(rec.cum_sigma, rec.sigma);
    rec.cum_ratio = static_cast<double>(rec.cum_psi) / static_cast<double>(rec.cum_sigma);
    if (sink) sink(rec);
  }
  return rec;
}

SweepRecord partial_sums(Int N, const SweepSink& sink, Int max_sieve) {
  return partial_sums(arith::sieve_multiplicative(N, max_sieve), N, sink);
}

double qd2_partial_sum(const arith::SieveTables& tables, Int N) {
  if (N == 0) throw DomainError("series limit must be positive");
  if (N > tables.limit()) throw DomainError("series limit exceeds the sieved range");
  // Smallest terms first.
  double s = 0.0;
  for (Int d = N; d >= 1; --d) {
    if (tables.squarefree[d]) {
      const double dd = static_cast<double>(d);
      s += 1.0 / (dd * dd);
    }
  }
  return s;
}

double qd2_partial_sum(Int N, Int max_sieve) {
  return qd2_partial_sum(arith::sieve_multiplicative(N, max_sieve), N);
}

} // namespace sqtori::asymptotics
