#include "groupcode/decision.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

#include "groupcode/error.hpp"

namespace groupcode {

namespace {

// Reduced words from the base to each state along a breadth-first tree.
std::vector<std::optional<Word>> tree_paths(InverseAutomaton const& m) {
  std::vector<std::optional<Word>> paths(m.state_count());
  std::queue<State>                queue;
  paths[m.start()] = Word(m.alphabet());
  queue.push(m.start());
  std::size_t const codes = 2 * m.alphabet().size();
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop();
    for (std::size_t c = 0; c < codes; ++c) {
      auto const x = SignedLetter::from_code(c);
      auto       q = m.step(p, x);
      if (q && !paths[*q]) {
        Word w = *paths[p];
        w.push_back(x);
        paths[*q] = std::move(w);
        queue.push(*q);
      }
    }
  }
  return paths;
}

// Least N in [2, 2|Q|] with g^N in H.
std::optional<std::size_t> proper_power(InverseAutomaton const& m, Word const& g) {
  std::size_t const bound = 2 * m.state_count();
  for (std::size_t n = 2; n <= bound; ++n) {
    if (subgroup_member(m, power(g, n))) {
      return n;
    }
  }
  return std::nullopt;
}

// g = u w u^-1 where w has a cycle of length >= 2 through the state u
// leads to: g^L is in H for the cycle length L, while g is not because
// reading u^-1 is injective and w moves the state off itself.
RadicalWitness constructed_witness(InverseAutomaton const& m, PeriodicElement const& periodic) {
  auto const& f = periodic.element;
  for (State q = 0; q < m.state_count(); ++q) {
    std::optional<State> p = f(q);
    std::size_t          length = 1;
    while (p && *p != q && length <= m.state_count()) {
      p = f(*p);
      ++length;
    }
    if (!p || *p != q || length < 2) {
      continue;
    }
    auto paths = tree_paths(m);
    if (!paths[q]) {
      continue;
    }
    Word g = reduce(concatenate(concatenate(*paths[q], periodic.word), invert(*paths[q])));
    if (auto n = proper_power(m, g); n && !subgroup_member(m, g)) {
      return RadicalWitness{std::move(g), *n};
    }
  }
  throw std::logic_error("non-aperiodic Stallings automaton without a radical witness");
}

// Visits reduced words of length `length` in letter order; stops when
// `visit` returns true or the budget runs out.
bool for_each_reduced_word(Alphabet const& alphabet, std::size_t length, std::size_t& budget,
                           std::function<bool(Word const&)> const& visit) {
  std::size_t const codes = 2 * alphabet.size();
  Word              w(alphabet);
  std::function<bool()> extend = [&]() -> bool {
    if (w.size() == length) {
      if (budget == 0) {
        return true;
      }
      --budget;
      return visit(w);
    }
    for (std::size_t c = 0; c < codes; ++c) {
      auto const x = SignedLetter::from_code(c);
      if (!w.empty() && w.letters().back() == x.inverse()) {
        continue;
      }
      w.push_back(x);
      bool const stop = extend();
      w.pop_back();
      if (stop) {
        return true;
      }
    }
    return false;
  };
  return extend();
}

}  // namespace

bool is_aperiodic_automaton(InverseAutomaton const& m, std::size_t limit) {
  return !find_periodic_element(m, limit).has_value();
}

RadicalVerdict is_radical_closed(Alphabet const& alphabet, std::span<Word const> generators,
                                 std::size_t limit) {
  InverseAutomaton const m        = stallings(alphabet, generators);
  auto const             periodic = find_periodic_element(m, limit);
  if (!periodic) {
    return RadicalVerdict{true, std::nullopt};
  }
  RadicalWitness fallback = constructed_witness(m, *periodic);

  std::optional<RadicalWitness> best;
  std::size_t                   budget = kRadicalSearchBudget;
  for (std::size_t length = 1; length <= fallback.g.size() && !best && budget > 0; ++length) {
    for_each_reduced_word(alphabet, length, budget, [&](Word const& g) {
      if (subgroup_member(m, g)) {
        return false;
      }
      if (auto n = proper_power(m, g)) {
        best = RadicalWitness{g, *n};
        return true;
      }
      return false;
    });
  }
  RadicalWitness witness = best ? std::move(*best) : std::move(fallback);
  if (!subgroup_member(m, power(witness.g, witness.power)) || subgroup_member(m, witness.g)) {
    throw std::logic_error("radical witness failed verification");
  }
  return RadicalVerdict{false, std::move(witness)};
}

std::optional<std::size_t> radical_power(InverseAutomaton const& m, Word const& g) {
  if (!(g.alphabet() == m.alphabet())) {
    throw Error("radical_power: word and automaton use different alphabets");
  }
  Word const r = reduce(g);
  if (r.empty()) {
    return 1;
  }
  std::size_t const bound = 2 * m.state_count();
  for (std::size_t n = 1; n <= bound; ++n) {
    if (subgroup_member(m, power(r, n))) {
      return n;
    }
  }
  return std::nullopt;
}

bool radical_member(InverseAutomaton const& m, Word const& g) {
  return radical_power(m, g).has_value();
}

}  // namespace groupcode
