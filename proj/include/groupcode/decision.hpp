#ifndef GROUPCODE_DECISION_HPP
#define GROUPCODE_DECISION_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "groupcode/automaton.hpp"
#include "groupcode/freegroup.hpp"
#include "groupcode/monoid.hpp"

namespace groupcode {

//! g^power lies in H while g does not.
struct RadicalWitness {
  Word        g;
  std::size_t power;
};

struct RadicalVerdict {
  bool                          closed;
  std::optional<RadicalWitness> witness;  // set iff !closed
};

//! Aperiodicity of the transition monoid of m.
bool is_aperiodic_automaton(InverseAutomaton const& m, std::size_t limit = kDefaultMonoidLimit);

//! Whether H = <generators> is closed under radical, decided through the
//! aperiodicity of its Stallings automaton. When it is not, the witness is
//! the least reduced g (length, then letter order) with g^N in H, g not in
//! H and 2 <= N <= 2|Q| found within a bounded search; past that budget the
//! witness is built from a periodic element of the transition monoid.
RadicalVerdict is_radical_closed(Alphabet const& alphabet, std::span<Word const> generators,
                                 std::size_t limit = kDefaultMonoidLimit);

//! Least N in [1, 2 * state_count(m)] with g^N in H, if any. The bound
//! suffices: writing g = u c u^-1, the states reached by reading u c^k
//! cycle with period at most |Q|.
std::optional<std::size_t> radical_power(InverseAutomaton const& m, Word const& g);

//! g lies in the radical of H (m is a Stallings automaton of H).
bool radical_member(InverseAutomaton const& m, Word const& g);

//! Number of candidate words the radical witness search visits before
//! falling back to the constructed witness.
inline constexpr std::size_t kRadicalSearchBudget = 200'000;

}  // namespace groupcode

#endif  // GROUPCODE_DECISION_HPP
