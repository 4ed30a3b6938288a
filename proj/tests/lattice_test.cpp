#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "sqtori/arith.hpp"
#include "sqtori/errors.hpp"
#include "sqtori/lattice.hpp"

using namespace sqtori;
using namespace sqtori::lattice;

namespace {

GeneratorPair pair(Int a, Int b, Int c, Int d) { return {{a, b}, {c, d}}; }

bool same_lattice(const GeneratorPair& a, const GeneratorPair& b) {
  return contains(a, b.u) && contains(a, b.v) && contains(b, a.u) && contains(b, a.v);
}

// Seeded corpus of rank-2 pairs with entries in [-50, 50].
std::vector<GeneratorPair> random_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> entry(-50, 50);
  std::vector<GeneratorPair> out;
  while (out.size() < count) {
    const auto g = pair(entry(rng), entry(rng), entry(rng), entry(rng));
    if (g.u.x * g.v.y - g.u.y * g.v.x != 0) out.push_back(g);
  }
  return out;
}

} // namespace

TEST_CASE("lattice_index") {
  CHECK(lattice_index(pair(1, 0, 0, 1)) == 1);
  CHECK(lattice_index(pair(3, 0, 1, 2)) == 6);
  CHECK(lattice_index(pair(2, 4, 1, 5)) == 6);
  CHECK(lattice_index(pair(0, 1, 1, 0)) == 1);
}

TEST_CASE("degenerate pairs raise RankError") {
  for (const auto& g : {pair(0, 0, 1, 2), pair(1, 2, 0, 0), pair(1, 2, 2, 4), pair(-3, 6, 1, -2), pair(0, 0, 0, 0)}) {
    CHECK_THROWS_AS(lattice_index(g), RankError);
    CHECK_THROWS_AS(hnf_reduce(g), RankError);
    CHECK_THROWS_AS(smith_shape(g), RankError);
    CHECK_THROWS_AS(is_primitive(g), RankError);
  }
}

TEST_CASE("content") {
  CHECK(content(pair(1, 0, 0, 1)) == 1);
  CHECK(content(pair(2, 0, 0, 2)) == 2);
  CHECK(content(pair(2, 4, 6, 2)) == 2);
  CHECK(lattice_index(pair(2, 4, 6, 2)) == 20);
  CHECK(content(pair(-4, 0, 0, -6)) == 2);
}

TEST_CASE("hnf_reduce examples") {
  CHECK(hnf_reduce(pair(1, 0, 0, 1)) == HnfLattice{1, 1, 0});
  CHECK(hnf_reduce(pair(2, 0, 0, 2)) == HnfLattice{2, 2, 0});

  // <(0,2),(3,1)> contains (6,0) = 2(3,1) - (0,2); its HNF is (6,1,3).
  const auto g = pair(0, 2, 3, 1);
  const auto l = hnf_reduce(g);
  CHECK(l == HnfLattice{6, 1, 3});
  CHECK(same_lattice(g, l.generators()));
  // (3,2,1) spans a different lattice of the same index.
  CHECK_FALSE(same_lattice(g, HnfLattice{3, 2, 1}.generators()));
}

TEST_CASE("hnf_reduce handles either orientation and negative entries") {
  CHECK(hnf_reduce(pair(0, 1, 1, 0)) == HnfLattice{1, 1, 0});
  CHECK(hnf_reduce(pair(-3, 0, -1, -2)) == HnfLattice{3, 2, 1});
  CHECK(hnf_reduce(pair(1, 2, 3, 0)) == HnfLattice{3, 2, 1});
  CHECK(hnf_reduce(pair(3, 0, 1, 2)) == hnf_reduce(pair(1, 2, 3, 0)));
}

TEST_CASE("hnf_reduce output spans the input lattice") {
  for (const auto& g : random_pairs(2000, 7)) {
    const auto l = hnf_reduce(g);
    REQUIRE(l.valid());
    CHECK(l.index() == lattice_index(g));
    CHECK(same_lattice(g, l.generators()));
  }
}

TEST_CASE("hnf idempotence on every enumerated triple") {
  for (Int n = 1; n <= 300; ++n)
    for (const auto& l : enumerate_lattices(n)) REQUIRE(hnf_reduce(l.generators()) == l);
}

TEST_CASE("smith_shape examples") {
  CHECK(smith_shape(pair(1, 0, 0, 1)) == QuotientShape{1, 1});
  CHECK(smith_shape(pair(2, 0, 0, 2)) == QuotientShape{2, 2});
  CHECK(smith_shape(pair(2, 0, 1, 2)) == QuotientShape{1, 4});
  CHECK(smith_shape(pair(6, 0, 4, 2)) == QuotientShape{2, 6});
  CHECK(smith_shape(pair(2, 0, 0, 3)) == QuotientShape{1, 6});
  CHECK(smith_shape(pair(4, 0, 0, 6)) == QuotientShape{2, 12});
}

TEST_CASE("smith d1 equals content and d1 * d2 equals the index") {
  for (const auto& g : random_pairs(2000, 11)) {
    const auto s = smith_shape(g);
    CHECK(s.d1 == content(g));
    CHECK(s.d2 % s.d1 == 0);
    CHECK(s.d1 * s.d2 == lattice_index(g));
  }
}

TEST_CASE("is_cyclic and is_primitive examples") {
  CHECK(is_cyclic({2, 2, 1}));
  CHECK_FALSE(is_cyclic({2, 2, 0}));
  CHECK_FALSE(is_cyclic({6, 2, 4}));
  CHECK(smith_shape(pair(6, 0, 4, 2)).d1 == 2);

  CHECK(is_primitive(pair(1, 0, 0, 1)));
  CHECK_FALSE(is_primitive(pair(2, 0, 0, 2)));
  CHECK(is_primitive(pair(3, 0, 1, 2)));
}

TEST_CASE("enumerate_lattices examples") {
  CHECK(enumerate_lattices(1) == std::vector<HnfLattice>{{1, 1, 0}});

  const auto two = enumerate_lattices(2);
  CHECK(two == std::vector<HnfLattice>{{1, 2, 0}, {2, 1, 0}, {2, 1, 1}});
  for (const auto& l : two) CHECK(is_cyclic(l));

  const auto four = enumerate_lattices(4);
  CHECK(four.size() == 7);
  std::vector<HnfLattice> non_cyclic;
  for (const auto& l : four)
    if (!is_cyclic(l)) non_cyclic.push_back(l);
  CHECK(non_cyclic == std::vector<HnfLattice>{{2, 2, 0}});
}

TEST_CASE("enumeration is ordered, valid and duplicate-free") {
  for (Int n = 1; n <= 400; ++n) {
    const auto all = enumerate_lattices(n);
    std::set<std::tuple<Int, Int, Int>> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& l = all[i];
      REQUIRE(l.valid());
      REQUIRE(l.index() == n);
      REQUIRE(seen.insert({l.w, l.h, l.t}).second);
      if (i > 0) {
        const auto& p = all[i - 1];
        REQUIRE((p.w < l.w || (p.w == l.w && p.t < l.t)));
      }
    }
  }
}

TEST_CASE("enumeration counts match sigma and psi up to 2000") {
  for (Int n = 1; n <= 2000; ++n) {
    const auto f = arith::factorize(static_cast<arith::Int>(n));
    std::uint64_t total = 0, cyclic = 0;
    for (const auto& l : lattices_of_index(n)) {
      ++total;
      if (is_cyclic(l)) ++cyclic;
    }
    REQUIRE(total == arith::sigma(f));
    REQUIRE(cyclic == arith::dedekind_psi(f));
    if (n <= 300) {
      REQUIRE(total == oracle::count_triples(n));
      REQUIRE(cyclic == oracle::count_cyclic_triples(n));
    }
  }
}

TEST_CASE("distinct HNF triples are distinct lattices") {
  for (Int n : {12, 36, 30}) {
    const auto all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(same_lattice(all[i].generators(), all[j].generators()));
  }
}

TEST_CASE("square-free index gives only cyclic tori") {
  for (Int n = 1; n <= 2000; ++n) {
    if (!oracle::squarefree(n)) continue;
    for (const auto& l : lattices_of_index(n)) REQUIRE(is_cyclic(l));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_lattices(0), DomainError);
  CHECK_THROWS_AS(enumerate_lattices(12, 27), ResourceError);
  CHECK(enumerate_lattices(12, 28).size() == 28);
  // 5040^2 has far more than 10^7 sublattices.
  CHECK_THROWS_AS(lattices_of_index(25'401'600), ResourceError);
}

TEST_CASE("lazy sequence iterates without materialising") {
  const LatticeSequence seq(6);
  auto it = seq.begin();
  CHECK(*it == HnfLattice{1, 6, 0});
  ++it;
  CHECK(*it == HnfLattice{2, 3, 0});
  CHECK(it->t == 0);
  std::size_t count = 0;
  for (auto i = seq.begin(); i != seq.end(); ++i) ++count;
  CHECK(count == 12);
}

TEST_CASE("random_unimodular preserves the lattice") {
  const auto g = pair(3, 0, 1, 2);
  CHECK(random_unimodular(g, 42, 0) == g);

  for (const auto& h : random_pairs(500, 2024)) {
    for (std::uint64_t seed : {1ull, 99ull}) {
      const auto moved = random_unimodular(h, seed, 10);
      CHECK(same_lattice(h, moved));
      CHECK(lattice_index(moved) == lattice_index(h));
      CHECK(content(moved) == content(h));
      CHECK(hnf_reduce(moved) == hnf_reduce(h));
      CHECK(is_primitive(moved) == is_primitive(h));
      CHECK(smith_shape(moved) == smith_shape(h));
    }
  }
}

TEST_CASE("random_unimodular is deterministic in the seed") {
  const auto g = pair(5, -3, 2, 7);
  CHECK(random_unimodular(g, 123, 25) == random_unimodular(g, 123, 25));
  CHECK_FALSE(random_unimodular(g, 123, 25) == random_unimodular(g, 124, 25));
}

TEST_CASE("content squared divides the index") {
  for (const auto& g : random_pairs(500, 5)) {
    const auto r = content(g);
    CHECK(lattice_index(g) % (r * r) == 0);
  }
  CHECK(lattice_index(pair(6, 0, 0, 6)) % 36 == 0);
}

TEST_CASE("checked arithmetic guards large generators") {
  const Int big = Int{1} << 40;
  CHECK_THROWS_AS(lattice_index(pair(big, 0, 0, big)), ArithmeticError);
  CHECK(lattice_index(pair(big, 0, 0, 3)) == 3 * big);
}
