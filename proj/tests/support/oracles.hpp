#ifndef GROUPCODE_TESTS_ORACLES_HPP
#define GROUPCODE_TESTS_ORACLES_HPP

// Brute-force reference implementations for the tests. Nothing here calls
// reduce, fold, stallings or the monoid closure of the library: words are
// handled as raw letter codes and graphs are walked nondeterministically.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "groupcode/automaton.hpp"
#include "groupcode/freegroup.hpp"
#include "groupcode/partial_injection.hpp"

namespace oracle {

using groupcode::Alphabet;
using groupcode::InverseAutomaton;
using groupcode::PartialInjection;
using groupcode::RawGraph;
using groupcode::Word;

// Signed letter codes 2i (x_i) and 2i+1 (x_i^-1).
using Key = std::vector<std::size_t>;

Key  key(Word const& w);
Word word(Alphabet const& alphabet, Key const& k);

// Cancels adjacent inverse pairs by rescanning until none is left.
Key  naive_reduce(Key k);
bool naive_is_reduced(Key const& k);

// All reduced words of length <= max_len, shortest first, codes ascending.
std::vector<Key> reduced_words(std::size_t letters, std::size_t max_len);

// ---- graphs ---------------------------------------------------------------

using StateSet = std::uint64_t;  // at most 64 states

StateSet step(RawGraph const& g, StateSet from, std::size_t code);

// red(w) for every word w (reduced or not) of length <= max_len labelling a
// path start -> accept.
std::set<Key> reduced_language(RawGraph const& g, std::size_t max_len);

// Equivalence generated by: two edges with the same letter and equivalent
// sources have equivalent targets, and vice versa. Naive fixpoint.
std::vector<std::vector<bool>> dyck_equivalence(RawGraph const& g);

// Reduced words of length <= max_len in red(L(g)), computed exactly from
// the equivalence above (the walk may stop at any equivalent state
// between letters).
std::set<Key> reduced_language_exact(RawGraph const& g, std::size_t max_len);

// Reduced words of length <= max_len accepted by a deterministic automaton,
// walking its maps directly.
std::set<Key> accepted_reduced(InverseAutomaton const& m, std::size_t max_len);

// Calls visit(p, q) for every pair of states joined by a path whose label
// is a Dyck word of length <= max_len.
template <typename Visit>
void for_each_dyck_path(RawGraph const& g, std::size_t max_len, Visit visit);

// ---- subgroups ------------------------------------------------------------

struct Ball {
  std::set<Key> elements;   // red(products), length <= max_len
  bool          saturated;  // the last factor added nothing short
};

// red(y_1 ... y_k) for k <= max_factors, y_i in Y^{+-1}, kept when of
// length <= max_len.
Ball subgroup_ball(std::vector<Key> const& generators, std::size_t max_factors,
                   std::size_t max_len);

// Reduced products y_1 ... y_k (any k) whose every prefix product has
// length <= cap. Sound for membership; complete once the cap is generous.
std::set<Key> capped_closure(std::vector<Key> const& generators, std::size_t cap);

// ---- partial maps ---------------------------------------------------------

using Map = std::vector<int>;  // -1 is undefined

Map                      to_map(PartialInjection const& f);
Map                      map_compose(Map const& f, Map const& g);  // f(g(x))
Map                      map_inverse(Map const& f);
std::set<Map>            naive_closure(std::vector<Map> const& generators, std::size_t n);
bool                     naive_is_aperiodic(std::set<Map> const& elements);
std::size_t              partial_injection_count(std::size_t n);

// ---- random instances -----------------------------------------------------

using Rng = std::mt19937;

Word             random_reduced_word(Rng& rng, Alphabet const& alphabet, std::size_t min_len,
                                     std::size_t max_len);
RawGraph         random_raw_graph(Rng& rng, Alphabet const& alphabet, std::size_t max_states,
                                  std::size_t max_edges);
PartialInjection random_partial_injection(Rng& rng, std::size_t n, double density);
InverseAutomaton random_inverse_automaton(Rng& rng, Alphabet const& alphabet,
                                          std::size_t max_states, double density,
                                          bool distinct_ends);

// ---- template definitions -------------------------------------------------

template <typename Visit>
void for_each_dyck_path(RawGraph const& g, std::size_t max_len, Visit visit) {
  std::size_t const codes = 2 * g.alphabet.size();
  for (std::size_t p = 0; p < g.state_count; ++p) {
    Key stack;
    // Depth-first over all words; `stack` holds the running reduction.
    auto walk = [&](auto&& self, StateSet at, std::size_t depth) -> void {
      if (stack.empty()) {
        for (std::size_t q = 0; q < g.state_count; ++q) {
          if (at >> q & 1U) {
            visit(p, q);
          }
        }
      }
      if (depth == max_len) {
        return;
      }
      for (std::size_t c = 0; c < codes; ++c) {
        StateSet next = step(g, at, c);
        if (next == 0) {
          continue;
        }
        bool const cancels = !stack.empty() && (stack.back() ^ 1U) == c;
        if (cancels) {
          stack.pop_back();
        } else {
          stack.push_back(c);
        }
        self(self, next, depth + 1);
        if (cancels) {
          stack.push_back(c ^ 1U);
        } else {
          stack.pop_back();
        }
      }
    };
    walk(walk, StateSet{1} << p, 0);
  }
}

}  // namespace oracle

#endif  // GROUPCODE_TESTS_ORACLES_HPP
