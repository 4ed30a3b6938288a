#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

namespace sqtori::lattice {

using Int = std::int64_t;

// Default cap on the number of triples enumerate_lattices may produce.
inline constexpr std::uint64_t kDefaultMaxTriples = 10'000'000;

struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Two generators of a sublattice of Z^2. Rank is checked by the operations,
// which throw RankError when det(u, v) = 0.
struct GeneratorPair {
  Vec2 u;
  Vec2 v;

  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

/// Hermite normal form (w, 0), (t, h) of a sublattice, 0 <= t < w.
///
/// w and h are the width and height of the single horizontal cylinder of the
/// square-tiled torus, t its twist. The index is w * h.
struct HnfLattice {
  Int w = 1;
  Int h = 1;
  Int t = 0;

  Int index() const { return w * h; }
  GeneratorPair generators() const { return {{w, 0}, {t, h}}; }
  bool valid() const { return w > 0 && h > 0 && 0 <= t && t < w; }

  friend bool operator==(const HnfLattice&, const HnfLattice&) = default;
};

// Invariant factors of Z^2 / Lambda = Z/d1 + Z/d2 with d1 | d2.
struct QuotientShape {
  Int d1 = 1;
  Int d2 = 1;

  bool cyclic() const { return d1 == 1; }

  friend bool operator==(const QuotientShape&, const QuotientShape&) = default;
};

// |det(u, v)|.
Int lattice_index(const GeneratorPair& g);
// gcd of the four coordinates.
Int content(const GeneratorPair& g);
HnfLattice hnf_reduce(const GeneratorPair& g);
QuotientShape smith_shape(const GeneratorPair& g);
bool is_cyclic(const HnfLattice& l);
bool is_primitive(const GeneratorPair& g);

// Membership test: does the lattice spanned by g contain p?
bool contains(const GeneratorPair& g, Vec2 p);

/// Lazy sequence of every HNF triple of index n, ordered by w then t.
class LatticeSequence {
public:
  class iterator {
  public:
    using value_type = HnfLattice;
    using difference_type = std::ptrdiff_t;
    using reference = const HnfLattice&;
    using pointer = const HnfLattice*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const HnfLattice& operator*() const { return current_; }
    const HnfLattice* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

  private:
    friend class LatticeSequence;
    iterator(Int n, bool done);
    void seek_width(Int w);

    Int n_ = 1;
    bool done_ = true;
    HnfLattice current_{};
  };

  explicit LatticeSequence(Int n) : n_(n) {}
  iterator begin() const { return iterator(n_, false); }
  iterator end() const { return iterator(n_, true); }

private:
  Int n_;
};

// Throws ResourceError if sigma(n) > max_triples, DomainError if n < 1.
LatticeSequence lattices_of_index(Int n, std::uint64_t max_triples = kDefaultMaxTriples);
std::vector<HnfLattice> enumerate_lattices(Int n, std::uint64_t max_triples = kDefaultMaxTriples);

// Applies `steps` seeded elementary column operations (swap, negate, add a
// multiple of one generator to the other). The spanned lattice is unchanged.
GeneratorPair random_unimodular(const GeneratorPair& g, std::uint64_t seed, unsigned steps);

} // namespace sqtori::lattice
