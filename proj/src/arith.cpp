#include "sqtori/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqtori/checked.hpp"
#include "sqtori/errors.hpp"

namespace sqtori::arith {

namespace {

void require_in_range(Int n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > kMaxN) throw DomainError("n exceeds the supported bound 2^63-1");
}

// Trial divisors 2, 3, then 6k +- 1.
template <typename Fn>
void for_each_trial_divisor(Int n, Fn&& fn) {
  if (!fn(Int{2})) return;
  if (!fn(Int{3})) return;
  for (Int d = 5; d <= n / d; d += 6) {
    if (!fn(d)) return;
    if (!fn(d + 2)) return;
  }
}

} // namespace

PrimeFactorization PrimeFactorization::from_factors(std::vector<PrimePower> factors) {
  Int n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, a] = factors[i];
    if (a == 0) throw DomainError("exponents must be at least 1");
    if (!is_prime(p)) throw DomainError("factor " + std::to_string(p) + " is not prime");
    if (i > 0 && factors[i - 1].prime >= p) throw DomainError("primes must be strictly increasing");
    for (unsigned k = 0; k < a; ++k) n = checked::mul(n, p);
  }
  if (n > kMaxN) throw DomainError("n exceeds the supported bound 2^63-1");
  return PrimeFactorization(n, std::move(factors));
}

bool is_prime(Int n) {
  if (n < 2) return false;
  bool prime = true;
  for_each_trial_divisor(n, [&](Int d) {
    if (d >= n) return false;
    if (n % d == 0) {
      prime = false;
      return false;
    }
    return true;
  });
  return prime;
}

PrimeFactorization factorize(Int n) {
  require_in_range(n);
  std::vector<PrimePower> factors;
  Int rest = n;
  for_each_trial_divisor(rest, [&](Int d) {
    if (d > rest / d) return false;
    if (rest % d == 0) {
      unsigned a = 0;
      while (rest % d == 0) {
        rest /= d;
        ++a;
      }
      factors.push_back({d, a});
    }
    return true;
  });
  if (rest > 1) factors.push_back({rest, 1});
  return PrimeFactorization(n, std::move(factors));
}

Int euler_phi(const PrimeFactorization& f) {
  Int r = f.value();
  for (const auto& [p, a] : f.factors()) r = r / p * (p - 1);
  return r;
}

Int dedekind_psi(const PrimeFactorization& f) {
  // p divides the running value at every step, so each division is exact.
  Int r = f.value();
  for (const auto& [p, a] : f.factors()) r = checked::mul(r / p, p + 1);
  return r;
}

Int sigma(const PrimeFactorization& f) {
  Int r = 1;
  for (const auto& [p, a] : f.factors()) {
    // 1 + p + ... + p^a, which equals (p^(a+1) - 1) / (p - 1)
    Int term = 1;
    Int sum = 1;
    for (unsigned k = 0; k < a; ++k) {
      term = checked::mul(term, p);
      sum = checked::add(sum, term);
    }
    r = checked::mul(r, sum);
  }
  return r;
}

bool squarefree(const PrimeFactorization& f) {
  return std::all_of(f.factors().begin(), f.factors().end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<Int> divisors(const PrimeFactorization& f) {
  std::vector<Int> out{1};
  for (const auto& [p, a] : f.factors()) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int psi_via_cylinders(Int n) {
  const auto f = factorize(n);
  Int total = 0;
  for (Int w : divisors(f)) {
    const Int h = n / w;
    const Int g = std::gcd(w, h);
    // phi(g) from the primes of n, since g | n
    Int phi_g = g;
    for (const auto& [p, a] : f.factors())
      if (g % p == 0) phi_g = phi_g / p * (p - 1);
    total = checked::add(total, checked::mul(w / g, phi_g));
  }
  return total;
}

Int psi_prime(Int n) {
  const auto f = factorize(n);
  Int total = 0;
  for (Int d : divisors(f)) {
    const bool sqfree = std::none_of(f.factors().begin(), f.factors().end(), [d](const PrimePower& pp) {
      return pp.prime <= d / pp.prime && d % (pp.prime * pp.prime) == 0;
    });
    if (sqfree) total = checked::add(total, n / d);
  }
  return total;
}

SieveTables sieve_multiplicative(Int N, Int max_n) {
  if (N == 0) throw DomainError("sieve limit must be positive");
  if (N > max_n) {
    throw ResourceError("sieve limit " + std::to_string(N) + " exceeds the budget of " + std::to_string(max_n));
  }
  if (N >= std::numeric_limits<std::uint32_t>::max()) throw ResourceError("sieve limit exceeds 2^32-1");

  const std::size_t size = static_cast<std::size_t>(N) + 1;
  SieveTables t;
  t.spf.assign(size, 0);
  t.phi.assign(size, 0);
  t.psi.assign(size, 0);
  t.sigma.assign(size, 0);
  t.squarefree.assign(size, 0);
  // Largest power of spf(n) dividing n.
  std::vector<std::uint32_t> spf_power(size, 0);
  std::vector<std::uint32_t> primes;

  t.spf[1] = 1;
  spf_power[1] = 1;
  t.phi[1] = t.psi[1] = t.sigma[1] = 1;
  t.squarefree[1] = 1;

  for (std::uint32_t i = 2; i <= N; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      if (p > t.spf[i] || static_cast<Int>(p) * i > N) break;
      t.spf[p * i] = p;
    }
  }

  for (std::uint32_t n = 2; n <= N; ++n) {
    const std::uint32_t p = t.spf[n];
    const std::uint32_t m = n / p;
    spf_power[n] = (t.spf[m] == p) ? spf_power[m] * p : p;
    const std::uint32_t pk = spf_power[n];
    if (pk == n) {
      t.phi[n] = n - m;
      t.psi[n] = Int{n} + m;
      t.sigma[n] = t.sigma[m] * p + 1;
      t.squarefree[n] = (m == 1);
    } else {
      const std::uint32_t rest = n / pk;
      t.phi[n] = t.phi[pk] * t.phi[rest];
      t.psi[n] = t.psi[pk] * t.psi[rest];
      t.sigma[n] = t.sigma[pk] * t.sigma[rest];
      t.squarefree[n] = t.squarefree[pk] & t.squarefree[rest];
    }
  }
  return t;
}

} // namespace sqtori::arith
