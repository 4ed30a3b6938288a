#include "sqtori/lattice.hpp"

#include <array>
#include <random>
#include <string>
#include <utility>

#include "sqtori/arith.hpp"
#include "sqtori/checked.hpp"
#include "sqtori/errors.hpp"

namespace sqtori::lattice {

namespace {

__extension__ typedef __int128 Wide;

Wide det(Vec2 a, Vec2 b) { return Wide{a.x} * b.y - Wide{a.y} * b.x; }

Vec2 axpy(Vec2 a, Int q, Vec2 b) {
  return {checked::sub(a.x, checked::mul(q, b.x)), checked::sub(a.y, checked::mul(q, b.y))};
}

Vec2 negate(Vec2 a) { return {checked::neg(a.x), checked::neg(a.y)}; }

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace

Int lattice_index(const GeneratorPair& g) {
  const Wide d = det(g.u, g.v);
  if (d == 0) throw RankError("generators are linearly dependent (det = 0)");
  const Wide a = d < 0 ? -d : d;
  if (a > static_cast<Wide>(std::numeric_limits<Int>::max())) throw ArithmeticError("lattice index overflows 64 bits");
  return static_cast<Int>(a);
}

Int content(const GeneratorPair& g) {
  return checked::gcd(checked::gcd(g.u.x, g.u.y), checked::gcd(g.v.x, g.v.y));
}

HnfLattice hnf_reduce(const GeneratorPair& g) {
  lattice_index(g);
  // Euclid on the second coordinates until one generator is horizontal.
  Vec2 a = g.u;
  Vec2 b = g.v;
  while (b.y != 0) {
    a = axpy(a, a.y / b.y, b);
    std::swap(a, b);
  }
  if (a.y < 0) a = negate(a);
  const Int w = checked::abs(b.x);
  return {w, a.y, floor_mod(a.x, w)};
}

QuotientShape smith_shape(const GeneratorPair& g) {
  lattice_index(g);
  // Columns are the generators.
  std::array<std::array<Int, 2>, 2> m{{{g.u.x, g.v.x}, {g.u.y, g.v.y}}};
  auto row_axpy = [&](int dst, Int q, int src) {
    for (int c = 0; c < 2; ++c) m[dst][c] = checked::sub(m[dst][c], checked::mul(q, m[src][c]));
  };
  auto col_axpy = [&](int dst, Int q, int src) {
    for (int r = 0; r < 2; ++r) m[r][dst] = checked::sub(m[r][dst], checked::mul(q, m[r][src]));
  };

  for (;;) {
    int pr = -1;
    int pc = -1;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (m[r][c] != 0 && (pr < 0 || checked::abs(m[r][c]) < checked::abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == 1) std::swap(m[0], m[1]);
    if (pc == 1) {
      std::swap(m[0][0], m[0][1]);
      std::swap(m[1][0], m[1][1]);
    }

    row_axpy(1, m[1][0] / m[0][0], 0);
    col_axpy(1, m[0][1] / m[0][0], 0);
    if (m[1][0] != 0 || m[0][1] != 0) continue;
    if (m[1][1] % m[0][0] != 0) {
      row_axpy(0, -1, 1);
      continue;
    }
    break;
  }
  return {checked::abs(m[0][0]), checked::abs(m[1][1])};
}

bool is_cyclic(const HnfLattice& l) { return std::gcd(std::gcd(l.w, l.h), l.t) == 1; }

bool is_primitive(const GeneratorPair& g) {
  lattice_index(g);
  return content(g) == 1;
}

bool contains(const GeneratorPair& g, Vec2 p) {
  const Wide d = det(g.u, g.v);
  if (d == 0) throw RankError("generators are linearly dependent (det = 0)");
  return det(p, g.v) % d == 0 && det(g.u, p) % d == 0;
}

LatticeSequence::iterator::iterator(Int n, bool done) : n_(n), done_(done) {
  if (!done_) seek_width(1);
}

void LatticeSequence::iterator::seek_width(Int w) {
  while (w <= n_ && n_ % w != 0) ++w;
  if (w > n_) {
    done_ = true;
    return;
  }
  current_ = {w, n_ / w, 0};
}

LatticeSequence::iterator& LatticeSequence::iterator::operator++() {
  if (done_) return *this;
  if (current_.t + 1 < current_.w) {
    ++current_.t;
  } else {
    seek_width(current_.w + 1);
  }
  return *this;
}

LatticeSequence lattices_of_index(Int n, std::uint64_t max_triples) {
  if (n < 1) throw DomainError("index must be positive");
  const auto total = arith::sigma(arith::factorize(static_cast<arith::Int>(n)));
  if (total > max_triples) {
    throw ResourceError("index " + std::to_string(n) + " has " + std::to_string(total) +
                        " sublattices, above the cap of " + std::to_string(max_triples));
  }
  return LatticeSequence(n);
}

std::vector<HnfLattice> enumerate_lattices(Int n, std::uint64_t max_triples) {
  const auto seq = lattices_of_index(n, max_triples);
  return {seq.begin(), seq.end()};
}

GeneratorPair random_unimodular(const GeneratorPair& g, std::uint64_t seed, unsigned steps) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<int> which(0, 1);
  std::uniform_int_distribution<Int> multiple(-3, 3);

  GeneratorPair out = g;
  for (unsigned s = 0; s < steps; ++s) {
    Vec2& target = which(rng) == 0 ? out.u : out.v;
    const Vec2& other = (&target == &out.u) ? out.v : out.u;
    switch (op(rng)) {
      case 0:
        std::swap(out.u, out.v);
        break;
      case 1:
        target = negate(target);
        break;
      default: {
        Int k = 0;
        while (k == 0) k = multiple(rng);
        target = axpy(target, -k, other);
        break;
      }
    }
  }
  return out;
}

} // namespace sqtori::lattice
