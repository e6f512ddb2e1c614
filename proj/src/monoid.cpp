#include "groupcode/monoid.hpp"

#include <algorithm>
#include <unordered_map>

#include "groupcode/error.hpp"

namespace groupcode {

namespace {

// Breadth-first closure under left multiplication by the generators.
// Element 0 is the identity; every other element records the element it
// was reached from and the generator applied last, so expressions read off
// the parent chain are shortest.
class Closure {
 public:
  Closure(std::size_t points, std::vector<PartialInjection> generators, std::size_t limit)
      : generators_(std::move(generators)), limit_(limit) {
    insert(PartialInjection::identity(points), 0, 0);
  }

  // Runs until exhaustion or until `stop(element)` returns true; returns
  // the index of the stopping element.
  template <typename Stop>
  std::optional<std::size_t> run(Stop&& stop) {
    if (stop(*elements_[0])) {
      return 0;
    }
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        PartialInjection next = compose(generators_[g], *elements_[head]);
        if (index_.contains(next)) {
          continue;
        }
        std::size_t const i = insert(std::move(next), head, g);
        if (stop(*elements_[i])) {
          return i;
        }
      }
    }
    return std::nullopt;
  }

  // Generator indices g_1, ..., g_k with element = g_k o ... o g_1.
  std::vector<std::size_t> path(std::size_t i) const {
    std::vector<std::size_t> rev;
    while (i != 0) {
      rev.push_back(via_[i]);
      i = parent_[i];
    }
    return {rev.rbegin(), rev.rend()};
  }

  std::vector<PartialInjection> sorted_elements() const {
    std::vector<PartialInjection> out;
    out.reserve(elements_.size());
    for (auto const* f : elements_) {
      out.push_back(*f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t insert(PartialInjection f, std::size_t parent, std::size_t via) {
    if (elements_.size() >= limit_) {
      throw ResourceLimitError("monoid closure exceeded " + std::to_string(limit_)
                               + " elements");
    }
    auto [it, inserted] = index_.emplace(std::move(f), elements_.size());
    elements_.push_back(&it->first);
    parent_.push_back(parent);
    via_.push_back(via);
    return it->second;
  }

  std::vector<PartialInjection>                        generators_;
  std::size_t                                          limit_;
  std::unordered_map<PartialInjection, std::size_t>    index_;
  std::vector<PartialInjection const*>                 elements_;
  std::vector<std::size_t>                             parent_;
  std::vector<std::size_t>                             via_;
};

std::vector<PartialInjection> with_inverses(std::span<PartialInjection const> generators) {
  std::vector<PartialInjection> out;
  for (auto const& f : generators) {
    out.push_back(f);
    out.push_back(inverse(f));
  }
  return out;
}

std::size_t common_size(PartialInjection const& f0, std::span<PartialInjection const> gens) {
  for (auto const& g : gens) {
    if (g.size() != f0.size()) {
      throw Error("inverse monoid membership: maps of different sizes");
    }
  }
  return f0.size();
}

PartialInjection power(PartialInjection const& f, std::size_t k) {
  PartialInjection result = PartialInjection::identity(f.size());
  PartialInjection base   = f;
  while (k > 0) {
    if (k & 1U) {
      result = compose(base, result);
    }
    base = compose(base, base);
    k >>= 1U;
  }
  return result;
}

}  // namespace

bool TransitionMonoid::contains(PartialInjection const& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

TransitionMonoid transition_monoid(InverseAutomaton const& m, std::size_t limit) {
  TransitionMonoid tm;
  Closure          closure(m.state_count(), with_inverses(m.letter_maps()), limit);
  closure.run([](PartialInjection const&) { return false; });
  tm.elements = closure.sorted_elements();
  for (auto const& name : m.alphabet().names()) {
    tm.generator_names.push_back(name);
    tm.generator_names.push_back(name + "^-1");
  }
  return tm;
}

bool is_aperiodic_element(PartialInjection const& f) {
  // The powers of a partial injection on n points repeat from index at
  // most n on, so the cycle of powers has length one iff f^(n+1) = f^n.
  PartialInjection const fn = power(f, f.size());
  return compose(f, fn) == fn;
}

bool is_aperiodic(TransitionMonoid const& tm) {
  return std::all_of(tm.elements.begin(), tm.elements.end(), is_aperiodic_element);
}

std::optional<PeriodicElement> find_periodic_element(InverseAutomaton const& m,
                                                     std::size_t             limit) {
  Closure closure(m.state_count(), with_inverses(m.letter_maps()), limit);
  auto    found =
      closure.run([](PartialInjection const& f) { return !is_aperiodic_element(f); });
  if (!found) {
    return std::nullopt;
  }
  Word w(m.alphabet());
  for (auto g : closure.path(*found)) {
    w.push_back(SignedLetter::from_code(g));
  }
  // The word acts left to right; the composition reads right to left.
  PartialInjection f = PartialInjection::identity(m.state_count());
  for (auto x : w.letters()) {
    f = compose(x.positive() ? m.letter_map(x.index) : inverse(m.letter_map(x.index)), f);
  }
  return PeriodicElement{std::move(f), std::move(w)};
}

std::optional<Expression> inverse_monoid_witness(PartialInjection const&            f0,
                                                 std::span<PartialInjection const> generators,
                                                 std::size_t                       limit) {
  std::size_t const n = common_size(f0, generators);
  Closure           closure(n, with_inverses(generators), limit);
  auto found = closure.run([&](PartialInjection const& f) { return f == f0; });
  if (!found) {
    return std::nullopt;
  }
  Expression expr;
  for (auto g : closure.path(*found)) {
    expr.push_back(GeneratorUse{g / 2, g % 2 == 1});
  }
  return expr;
}

bool inverse_monoid_member(PartialInjection const&            f0,
                           std::span<PartialInjection const> generators,
                           std::size_t                       limit) {
  return inverse_monoid_witness(f0, generators, limit).has_value();
}

std::vector<PartialInjection> inverse_monoid_closure(std::span<PartialInjection const> generators,
                                                     std::size_t                       limit) {
  if (generators.empty()) {
    throw Error("inverse_monoid_closure: no generators (size unknown)");
  }
  std::size_t const n = common_size(generators.front(), generators);
  Closure           closure(n, with_inverses(generators), limit);
  closure.run([](PartialInjection const&) { return false; });
  return closure.sorted_elements();
}

KozenInstance kozen_reduce(std::span<InverseAutomaton const> automata) {
  if (automata.empty()) {
    throw Error("kozen_reduce: no automata given");
  }
  PartialInjection const none(0);
  KozenInstance          out{0, {}, none, none, none, none};
  std::size_t   size = 2;
  for (auto const& m : automata) {
    if (m.alphabet().size() != 2) {
      throw Error("kozen_reduce: automata must be over a two-letter alphabet");
    }
    if (!(m.alphabet() == automata.front().alphabet())) {
      throw Error("kozen_reduce: automata use different alphabets");
    }
    if (m.start() == m.accept()) {
      throw Error("kozen_reduce: start and accept state must differ");
    }
    out.offsets.push_back(size);
    size += m.state_count();
  }
  out.size = size;
  constexpr Point o1 = 0;
  constexpr Point o2 = 1;

  std::vector<PartialInjection> letter(2, PartialInjection(size));
  out.f_init = PartialInjection(size);
  out.f_0    = PartialInjection(size);
  for (auto& f : letter) {
    f.set(o2, o2);
  }
  out.f_init.set(o1, o2);
  out.f_0.set(o1, o2);
  for (std::size_t i = 0; i < automata.size(); ++i) {
    auto const& m      = automata[i];
    auto const  offset = static_cast<Point>(out.offsets[i]);
    for (std::size_t x = 0; x < 2; ++x) {
      for (auto [p, q] : m.letter_map(x).pairs()) {
        letter[x].set(offset + p, offset + q);
      }
    }
    out.f_init.set(offset + m.start(), offset + m.start());
    out.f_0.set(offset + m.start(), offset + m.accept());
  }
  out.f_alpha = std::move(letter[0]);
  out.f_beta  = std::move(letter[1]);
  return out;
}

}  // namespace groupcode
