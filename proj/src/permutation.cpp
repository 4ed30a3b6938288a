#include "sqtori/permutation.hpp"

#include <deque>
#include <numeric>
#include <set>

#include <json.hpp>

#include "sqtori/errors.hpp"

namespace sqtori::lattice {

namespace {

constexpr std::uint64_t kMaxGroupOrder = 1'000'000;

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::uint64_t element_order(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

} // namespace

PermutationPair to_permutation_pair(const HnfLattice& l, std::uint64_t max_squares) {
  if (!l.valid()) throw DomainError("invalid HNF triple");
  const auto n = static_cast<std::uint64_t>(l.w) * static_cast<std::uint64_t>(l.h);
  if (n > max_squares) {
    throw ResourceError("torus with " + std::to_string(n) + " squares exceeds the cap of " + std::to_string(max_squares));
  }
  const auto w = static_cast<std::uint32_t>(l.w);
  const auto h = static_cast<std::uint32_t>(l.h);
  const auto t = static_cast<std::uint32_t>(l.t);
  auto index = [w](std::uint32_t i, std::uint32_t j) { return i + w * j; };

  PermutationPair out;
  out.n = static_cast<std::uint32_t>(n);
  out.horizontal.assign(n, 0);
  out.vertical.assign(n, 0);
  for (std::uint32_t j = 0; j < h; ++j) {
    for (std::uint32_t i = 0; i < w; ++i) {
      out.horizontal[index(i, j)] = index((i + 1) % w, j);
      out.vertical[index(i, j)] = (j + 1 < h) ? index(i, j + 1) : index((i + t) % w, 0);
    }
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

bool commute(const PermutationPair& p) {
  return compose(p.horizontal, p.vertical) == compose(p.vertical, p.horizontal);
}

bool transitive(const PermutationPair& p) {
  std::vector<bool> seen(p.n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : {p.horizontal[x], p.vertical[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == p.n;
}

GroupSummary generated_group(const PermutationPair& p) {
  Permutation identity(p.n);
  std::iota(identity.begin(), identity.end(), 0u);

  std::set<Permutation> elements{identity};
  std::deque<Permutation> frontier{identity};
  while (!frontier.empty()) {
    const Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto* gen : {&p.horizontal, &p.vertical}) {
      auto next = compose(*gen, g);
      if (elements.insert(next).second) {
        if (elements.size() > kMaxGroupOrder) throw ResourceError("generated group is too large to enumerate");
        frontier.push_back(std::move(next));
      }
    }
  }

  GroupSummary s;
  s.order = elements.size();
  s.abelian = commute(p);
  for (const auto& g : elements) s.max_element_order = std::max(s.max_element_order, element_order(g));
  return s;
}

std::string to_json(const PermutationPair& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["h"] = p.horizontal;
  j["v"] = p.vertical;
  return j.dump();
}

PermutationPair permutation_pair_from_json(std::string_view text) {
  PermutationPair p;
  try {
    const auto j = nlohmann::json::parse(text);
    p.n = j.at("n").get<std::uint32_t>();
    p.horizontal = j.at("h").get<Permutation>();
    p.vertical = j.at("v").get<Permutation>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed permutation pair: ") + e.what());
  }
  if (p.n == 0 || p.horizontal.size() != p.n || p.vertical.size() != p.n || !is_permutation(p.horizontal) ||
      !is_permutation(p.vertical)) {
    throw DomainError("permutation pair arrays must be permutations of 0..n-1");
  }
  return p;
}

} // namespace sqtori::lattice
