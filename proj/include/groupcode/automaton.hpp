#ifndef GROUPCODE_AUTOMATON_HPP
#define GROUPCODE_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "groupcode/freegroup.hpp"
#include "groupcode/partial_injection.hpp"

namespace groupcode {

using State = Point;

//! Positive-letter edge p --x--> q; the edge q --x^-1--> p is implicit.
struct Edge {
  State         from   = 0;
  std::uint32_t letter = 0;
  State         to     = 0;

  friend bool operator==(Edge const&, Edge const&) = default;
};

//! Automaton with involution before folding. Parallel edges and multiple
//! edges with the same label at a state are allowed.
struct RawGraph {
  explicit RawGraph(Alphabet alph, std::size_t states = 1, State s = 0, State f = 0)
      : alphabet(std::move(alph)), state_count(states), start(s), accept(f) {}

  Alphabet          alphabet;
  std::size_t       state_count;
  std::vector<Edge> edges;
  State             start;
  State             accept;

  void add_edge(State p, std::uint32_t letter, State q);
  //! Adds p --x--> q for a signed letter x (stored as q --x^-1--> p if x is
  //! negative).
  void add_signed_edge(State p, SignedLetter x, State q);
  State add_state() { return static_cast<State>(state_count++); }

  //! Throws Error if an endpoint, letter, start or accept is out of range.
  void validate() const;
};

//! Inverse finite automaton (Q, X, delta, q0, qf). delta(., x) is a
//! PartialInjection per positive letter; delta(., x^-1) is its inverse.
class InverseAutomaton {
 public:
  InverseAutomaton(Alphabet alphabet, std::vector<PartialInjection> letter_maps, State start,
                   State accept);

  //! Single state, no transitions.
  static InverseAutomaton trivial(Alphabet alphabet);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t     state_count() const noexcept { return state_count_; }
  State           start() const noexcept { return start_; }
  State           accept() const noexcept { return accept_; }

  PartialInjection const&              letter_map(std::size_t letter) const {
    return maps_.at(letter);
  }
  std::vector<PartialInjection> const& letter_maps() const noexcept { return maps_; }

  std::optional<State> step(State p, SignedLetter x) const;
  std::optional<State> read(State p, Word const& w) const;

  //! Number of defined positive-letter transitions.
  std::size_t transition_count() const noexcept;
  //! Defined transitions (positive and negative) at p; a loop counts twice.
  std::size_t degree(State p) const noexcept;

  //! The same automaton as an edge list (letters in order, then sources).
  RawGraph to_raw() const;

  friend bool operator==(InverseAutomaton const& lhs, InverseAutomaton const& rhs) {
    return lhs.alphabet_ == rhs.alphabet_ && lhs.maps_ == rhs.maps_ && lhs.start_ == rhs.start_
           && lhs.accept_ == rhs.accept_;
  }

 private:
  Alphabet                      alphabet_;
  std::size_t                   state_count_;
  std::vector<PartialInjection> maps_;
  std::vector<PartialInjection> inverse_maps_;  // derived from maps_
  State                         start_;
  State                         accept_;
};

//! One identification performed during folding. The original graph has
//! edges `first --letter--> via_first` and `second --letter--> via_second`
//! whose targets were already identified, which forced first ~ second.
struct FoldMerge {
  State        first;
  State        second;
  SignedLetter letter;
  State        via_first;
  State        via_second;
};

struct FoldTrace {
  //! RawGraph state -> state of the folded automaton.
  std::vector<State>     class_of;
  //! Merges in the order they were applied.
  std::vector<FoldMerge> merges;
};

struct FoldResult {
  InverseAutomaton automaton;
  FoldTrace        trace;
};

//! Maximal Stallings folding with union-find. All classes are kept and
//! renumbered canonically (breadth-first from the start, signed letters in
//! the order a, a^-1, b, b^-1, ...; classes not reachable from the start
//! follow, each component explored from its least original state).
//!
//! With `shuffle_seed` set, edges and pending identifications are processed
//! in a pseudo-random order; the folded automaton does not depend on it.
FoldResult fold(RawGraph const& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

//! A Dyck word labelling a path `p -> q` in the original graph, built from
//! the merge history; requires trace.class_of[p] == trace.class_of[q].
Word fold_witness(RawGraph const& g, FoldTrace const& trace, State p, State q);

//! One cycle per reduced non-empty generator, glued at state 0.
RawGraph flower(Alphabet const& alphabet, std::span<Word const> generators);

//! Stallings automaton of the subgroup generated by `generators`: the
//! trimmed core of the folded flower.
InverseAutomaton stallings(Alphabet const& alphabet, std::span<Word const> generators);

//! Deterministic graphs only; std::nullopt if two edges with equal signed
//! label leave a state.
std::optional<InverseAutomaton> as_inverse_automaton(RawGraph const& g);

bool accepts(InverseAutomaton const& m, Word const& w);

//! accepts(m, reduce(w)).
bool subgroup_member(InverseAutomaton const& m, Word const& w);

//! Core graph: drops states not connected to the base, then repeatedly
//! deletes non-base states of degree at most one. Requires start == accept.
InverseAutomaton trim_core(InverseAutomaton const& m);

//! E - V + 1 for a connected automaton; throws Error if disconnected.
std::size_t rank(InverseAutomaton const& m);

struct IntersectionResult {
  bool                empty;
  std::optional<Word> witness;  // shortest word in every language
};

//! Breadth-first search over state tuples, stepping by signed letters.
IntersectionResult intersect_empty(std::span<InverseAutomaton const> automata);

//! Label-preserving bijection mapping start to start and accept to accept.
bool isomorphic(InverseAutomaton const& m1, InverseAutomaton const& m2);

//! Renumbers states canonically (see fold()).
InverseAutomaton canonical(InverseAutomaton const& m);

}  // namespace groupcode

#endif  // GROUPCODE_AUTOMATON_HPP
