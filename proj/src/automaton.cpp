#include "groupcode/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>

#include "groupcode/error.hpp"

namespace groupcode {

namespace {

constexpr State kNone = PartialInjection::kUndefined;

struct TupleHash {
  std::size_t operator()(std::vector<State> const& t) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto s : t) {
      h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Undirected connectivity from `root` over all defined transitions.
std::vector<bool> connected_from(InverseAutomaton const& m, State root) {
  std::vector<bool> seen(m.state_count(), false);
  std::queue<State> queue;
  seen[root] = true;
  queue.push(root);
  std::size_t const codes = 2 * m.alphabet().size();
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop();
    for (std::size_t c = 0; c < codes; ++c) {
      auto q = m.step(p, SignedLetter::from_code(c));
      if (q && !seen[*q]) {
        seen[*q] = true;
        queue.push(*q);
      }
    }
  }
  return seen;
}

// Extends `map` (m1 state -> m2 state) by parallel traversal from (r1, r2).
bool match_component(InverseAutomaton const& m1, InverseAutomaton const& m2, State r1, State r2,
                     std::vector<State>& forward, std::vector<State>& backward) {
  std::size_t const                codes = 2 * m1.alphabet().size();
  std::queue<std::pair<State, State>> queue;
  auto                                bind = [&](State p, State q) {
    if (forward[p] == kNone && backward[q] == kNone) {
      forward[p]  = q;
      backward[q] = p;
      queue.emplace(p, q);
      return true;
    }
    return forward[p] == q && backward[q] == p;
  };
  if (!bind(r1, r2)) {
    return false;
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop();
    for (std::size_t c = 0; c < codes; ++c) {
      auto x  = SignedLetter::from_code(c);
      auto p2 = m1.step(p, x);
      auto q2 = m2.step(q, x);
      if (p2.has_value() != q2.has_value()) {
        return false;
      }
      if (p2 && !bind(*p2, *q2)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

////////////////////////////////////////////////////////////////////////
// RawGraph
////////////////////////////////////////////////////////////////////////

void RawGraph::add_edge(State p, std::uint32_t letter, State q) {
  edges.push_back(Edge{p, letter, q});
}

void RawGraph::add_signed_edge(State p, SignedLetter x, State q) {
  if (x.positive()) {
    add_edge(p, x.index, q);
  } else {
    add_edge(q, x.index, p);
  }
}

void RawGraph::validate() const {
  if (state_count == 0) {
    throw Error("automaton must have at least one state");
  }
  if (start >= state_count || accept >= state_count) {
    throw Error("start or accept state out of range");
  }
  for (auto const& e : edges) {
    if (e.from >= state_count || e.to >= state_count) {
      throw Error("edge endpoint out of range");
    }
    if (e.letter >= alphabet.size()) {
      throw Error("edge letter out of range");
    }
  }
}

////////////////////////////////////////////////////////////////////////
// InverseAutomaton
////////////////////////////////////////////////////////////////////////

InverseAutomaton::InverseAutomaton(Alphabet alphabet, std::vector<PartialInjection> letter_maps,
                                   State start, State accept)
    : alphabet_(std::move(alphabet)),
      state_count_(0),
      maps_(std::move(letter_maps)),
      start_(start),
      accept_(accept) {
  if (maps_.size() != alphabet_.size()) {
    throw Error("inverse automaton needs one transition map per letter");
  }
  state_count_ = maps_.front().size();
  for (auto const& f : maps_) {
    if (f.size() != state_count_) {
      throw Error("transition maps act on different state sets");
    }
  }
  if (state_count_ == 0) {
    throw Error("automaton must have at least one state");
  }
  if (start_ >= state_count_ || accept_ >= state_count_) {
    throw Error("start or accept state out of range");
  }
  inverse_maps_.reserve(maps_.size());
  for (auto const& f : maps_) {
    inverse_maps_.push_back(inverse(f));
  }
}

InverseAutomaton InverseAutomaton::trivial(Alphabet alphabet) {
  std::vector<PartialInjection> maps(alphabet.size(), PartialInjection(1));
  return InverseAutomaton(std::move(alphabet), std::move(maps), 0, 0);
}

std::optional<State> InverseAutomaton::step(State p, SignedLetter x) const {
  return x.positive() ? maps_[x.index](p) : inverse_maps_[x.index](p);
}

std::optional<State> InverseAutomaton::read(State p, Word const& w) const {
  std::optional<State> q = p;
  for (auto x : w.letters()) {
    q = step(*q, x);
    if (!q) {
      break;
    }
  }
  return q;
}

std::size_t InverseAutomaton::transition_count() const noexcept {
  std::size_t n = 0;
  for (auto const& f : maps_) {
    n += f.rank();
  }
  return n;
}

std::size_t InverseAutomaton::degree(State p) const noexcept {
  std::size_t d = 0;
  for (std::size_t x = 0; x < maps_.size(); ++x) {
    d += maps_[x].defined_at(p) ? 1 : 0;
    d += inverse_maps_[x].defined_at(p) ? 1 : 0;
  }
  return d;
}

RawGraph InverseAutomaton::to_raw() const {
  RawGraph g(alphabet_, state_count_, start_, accept_);
  for (std::uint32_t x = 0; x < maps_.size(); ++x) {
    for (auto [p, q] : maps_[x].pairs()) {
      g.add_edge(p, x, q);
    }
  }
  return g;
}

////////////////////////////////////////////////////////////////////////
// Constructions
////////////////////////////////////////////////////////////////////////

RawGraph flower(Alphabet const& alphabet, std::span<Word const> generators) {
  RawGraph g(alphabet, 1, 0, 0);
  for (auto const& gen : generators) {
    if (!(gen.alphabet() == alphabet)) {
      throw Error("flower: generator over a different alphabet");
    }
    Word const w = reduce(gen);
    if (w.empty()) {
      continue;
    }
    State p = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      State q = i + 1 == w.size() ? State{0} : g.add_state();
      g.add_signed_edge(p, w[i], q);
      p = q;
    }
  }
  return g;
}

InverseAutomaton stallings(Alphabet const& alphabet, std::span<Word const> generators) {
  return trim_core(fold(flower(alphabet, generators)).automaton);
}

std::optional<InverseAutomaton> as_inverse_automaton(RawGraph const& g) {
  g.validate();
  std::vector<std::vector<Point>> images(g.alphabet.size(),
                                         std::vector<Point>(g.state_count, kNone));
  std::vector<std::vector<bool>> hit(g.alphabet.size(), std::vector<bool>(g.state_count, false));
  for (auto const& e : g.edges) {
    auto& im = images[e.letter];
    if ((im[e.from] != kNone && im[e.from] != e.to) || (im[e.from] == kNone && hit[e.letter][e.to])) {
      return std::nullopt;
    }
    im[e.from]          = e.to;
    hit[e.letter][e.to] = true;
  }
  std::vector<PartialInjection> maps;
  for (auto& im : images) {
    maps.emplace_back(std::move(im));
  }
  return InverseAutomaton(g.alphabet, std::move(maps), g.start, g.accept);
}

InverseAutomaton canonical(InverseAutomaton const& m) {
  return fold(m.to_raw()).automaton;
}

////////////////////////////////////////////////////////////////////////
// Queries
////////////////////////////////////////////////////////////////////////

bool accepts(InverseAutomaton const& m, Word const& w) {
  if (!(w.alphabet() == m.alphabet())) {
    throw Error("accepts: word and automaton use different alphabets");
  }
  auto q = m.read(m.start(), w);
  return q && *q == m.accept();
}

bool subgroup_member(InverseAutomaton const& m, Word const& w) {
  return accepts(m, reduce(w));
}

InverseAutomaton trim_core(InverseAutomaton const& m) {
  if (m.start() != m.accept()) {
    throw Error("trim_core: start and accept states differ");
  }
  State const       base = m.start();
  std::size_t const n    = m.state_count();
  std::vector<bool> keep = connected_from(m, base);

  std::vector<std::size_t> degree(n);
  for (State p = 0; p < n; ++p) {
    degree[p] = keep[p] ? m.degree(p) : 0;
  }
  std::queue<State> queue;
  for (State p = 0; p < n; ++p) {
    if (keep[p] && p != base && degree[p] <= 1) {
      queue.push(p);
    }
  }
  std::size_t const codes = 2 * m.alphabet().size();
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop();
    if (!keep[p]) {
      continue;
    }
    keep[p] = false;
    for (std::size_t c = 0; c < codes; ++c) {
      auto q = m.step(p, SignedLetter::from_code(c));
      if (q && keep[*q] && *q != p) {
        if (--degree[*q] <= 1 && *q != base) {
          queue.push(*q);
        }
      }
    }
  }

  std::vector<State> number(n, kNone);
  State              next = 0;
  for (State p = 0; p < n; ++p) {
    if (keep[p]) {
      number[p] = next++;
    }
  }
  std::vector<PartialInjection> maps;
  for (auto const& f : m.letter_maps()) {
    PartialInjection g(next);
    for (auto [p, q] : f.pairs()) {
      if (keep[p] && keep[q]) {
        g.set(number[p], number[q]);
      }
    }
    maps.push_back(std::move(g));
  }
  return canonical(InverseAutomaton(m.alphabet(), std::move(maps), number[base], number[base]));
}

std::size_t rank(InverseAutomaton const& m) {
  auto seen = connected_from(m, m.start());
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("rank: automaton is not connected");
  }
  return m.transition_count() + 1 - m.state_count();
}

IntersectionResult intersect_empty(std::span<InverseAutomaton const> automata) {
  if (automata.empty()) {
    throw Error("intersect_empty: no automata given");
  }
  Alphabet const& alphabet = automata.front().alphabet();
  for (auto const& m : automata) {
    if (!(m.alphabet() == alphabet)) {
      throw Error("intersect_empty: automata use different alphabets");
    }
  }
  std::size_t const codes = 2 * alphabet.size();

  struct Node {
    std::size_t parent;
    std::size_t code;
  };
  std::vector<std::vector<State>>                                  tuples;
  std::vector<Node>                                                nodes;
  std::unordered_map<std::vector<State>, std::size_t, TupleHash> index;

  auto is_accepting = [&](std::vector<State> const& t) {
    for (std::size_t i = 0; i < automata.size(); ++i) {
      if (t[i] != automata[i].accept()) {
        return false;
      }
    }
    return true;
  };
  auto witness = [&](std::size_t node) {
    std::vector<SignedLetter> rev;
    while (node != 0) {
      rev.push_back(SignedLetter::from_code(nodes[node].code));
      node = nodes[node].parent;
    }
    return Word(alphabet, {rev.rbegin(), rev.rend()});
  };

  std::vector<State> start;
  for (auto const& m : automata) {
    start.push_back(m.start());
  }
  tuples.push_back(start);
  nodes.push_back(Node{0, 0});
  index.emplace(start, 0);
  if (is_accepting(start)) {
    return IntersectionResult{false, Word(alphabet)};
  }
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    for (std::size_t c = 0; c < codes; ++c) {
      auto const         x = SignedLetter::from_code(c);
      std::vector<State> next;
      next.reserve(automata.size());
      for (std::size_t i = 0; i < automata.size(); ++i) {
        auto q = automata[i].step(tuples[head][i], x);
        if (!q) {
          break;
        }
        next.push_back(*q);
      }
      if (next.size() != automata.size() || index.contains(next)) {
        continue;
      }
      index.emplace(next, tuples.size());
      nodes.push_back(Node{head, c});
      tuples.push_back(next);
      if (is_accepting(next)) {
        return IntersectionResult{false, witness(tuples.size() - 1)};
      }
    }
  }
  return IntersectionResult{true, std::nullopt};
}

bool isomorphic(InverseAutomaton const& m1, InverseAutomaton const& m2) {
  if (!(m1.alphabet() == m2.alphabet()) || m1.state_count() != m2.state_count()
      || m1.transition_count() != m2.transition_count()) {
    return false;
  }
  std::size_t const  n = m1.state_count();
  std::vector<State> forward(n, kNone);
  std::vector<State> backward(n, kNone);
  if (!match_component(m1, m2, m1.start(), m2.start(), forward, backward)) {
    return false;
  }
  if (forward[m1.accept()] == kNone) {
    if (backward[m2.accept()] != kNone
        || !match_component(m1, m2, m1.accept(), m2.accept(), forward, backward)) {
      return false;
    }
  } else if (forward[m1.accept()] != m2.accept()) {
    return false;
  }
  // Remaining components are unrooted; isomorphism between components is an
  // equivalence relation, so greedy matching is exact.
  for (State p = 0; p < n; ++p) {
    if (forward[p] != kNone) {
      continue;
    }
    bool matched = false;
    for (State q = 0; q < n && !matched; ++q) {
      if (backward[q] != kNone) {
        continue;
      }
      auto f = forward;
      auto b = backward;
      if (match_component(m1, m2, p, q, f, b)) {
        forward  = std::move(f);
        backward = std::move(b);
        matched  = true;
      }
    }
    if (!matched) {
      return false;
    }
  }
  return true;
}

}  // namespace groupcode
