#ifndef GROUPCODE_MONOID_HPP
#define GROUPCODE_MONOID_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupcode/automaton.hpp"
#include "groupcode/partial_injection.hpp"

namespace groupcode {

//! Default element limit for every closure computation.
inline constexpr std::size_t kDefaultMonoidLimit = 1'000'000;

//! Use of one generating map (or its inverse) in a composition.
struct GeneratorUse {
  std::size_t generator;
  bool        inverted;

  friend bool operator==(GeneratorUse, GeneratorUse) = default;
};

//! Composition g_k o ... o g_1 of generator uses, listed as g_1, ..., g_k
//! (first applied first). Empty means the identity.
using Expression = std::vector<GeneratorUse>;

//! Monoid of partial maps generated by the letter actions of an inverse
//! automaton (together with the identity).
struct TransitionMonoid {
  //! Sorted by image array.
  std::vector<PartialInjection> elements;
  //! One name per generating map: `a`, `a^-1`, `b`, `b^-1`, ...
  std::vector<std::string>      generator_names;

  std::size_t size() const noexcept { return elements.size(); }
  bool        contains(PartialInjection const& f) const;
};

//! Breadth-first closure of {delta(.,x), delta(.,x)^-1} and the identity.
//! Throws ResourceLimitError beyond `limit` elements.
TransitionMonoid transition_monoid(InverseAutomaton const& m,
                                   std::size_t             limit = kDefaultMonoidLimit);

//! Powers f, f^2, ... until the first repetition; true iff the cycle of
//! powers has length one.
bool is_aperiodic_element(PartialInjection const& f);

//! Every element satisfies m^(k+1) = m^k for some k.
bool is_aperiodic(TransitionMonoid const& tm);

//! First element of the transition monoid (in breadth-first order) that is
//! not aperiodic, with a word over the signed letters producing it.
struct PeriodicElement {
  PartialInjection element;
  Word             word;
};
std::optional<PeriodicElement> find_periodic_element(InverseAutomaton const& m,
                                                     std::size_t limit = kDefaultMonoidLimit);

//! Membership of f0 in the inverse monoid generated by `generators`
//! (generators, their inverses and the identity under composition).
bool inverse_monoid_member(PartialInjection const&            f0,
                           std::span<PartialInjection const> generators,
                           std::size_t                       limit = kDefaultMonoidLimit);

//! Shortest expression for f0, or std::nullopt if f0 is not a member.
std::optional<Expression> inverse_monoid_witness(PartialInjection const&            f0,
                                                 std::span<PartialInjection const> generators,
                                                 std::size_t limit = kDefaultMonoidLimit);

//! Full closure (identity included), sorted.
std::vector<PartialInjection> inverse_monoid_closure(std::span<PartialInjection const> generators,
                                                     std::size_t limit = kDefaultMonoidLimit);

//! Partial maps of the reduction from automata intersection emptiness to
//! inverse-monoid membership. Points: o1 = 0, o2 = 1, then the states of
//! each automaton in order.
struct KozenInstance {
  std::size_t              size;
  std::vector<std::size_t> offsets;  // first point of each automaton's block
  PartialInjection         f_init;
  PartialInjection         f_alpha;
  PartialInjection         f_beta;
  PartialInjection         f_0;

  //! {f_init, f_alpha, f_beta}, in that order.
  std::vector<PartialInjection> generators() const { return {f_init, f_alpha, f_beta}; }
};

//! Requires a two-letter alphabet and start != accept in every automaton.
KozenInstance kozen_reduce(std::span<InverseAutomaton const> automata);

}  // namespace groupcode

#endif  // GROUPCODE_MONOID_HPP
