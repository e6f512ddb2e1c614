#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

Key key(Word const& w) {
  Key k;
  for (auto x : w.letters()) {
    k.push_back(2 * x.index + (x.sign < 0 ? 1 : 0));
  }
  return k;
}

Word word(Alphabet const& alphabet, Key const& k) {
  std::vector<groupcode::SignedLetter> letters;
  for (auto c : k) {
    letters.push_back(
        groupcode::SignedLetter{static_cast<std::uint32_t>(c / 2),
                                static_cast<std::int8_t>(c % 2 == 0 ? 1 : -1)});
  }
  return Word(alphabet, std::move(letters));
}

Key naive_reduce(Key k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      if ((k[i] ^ 1U) == k[i + 1]) {
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(i),
                k.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return k;
}

bool naive_is_reduced(Key const& k) {
  return naive_reduce(k) == k;
}

std::vector<Key> reduced_words(std::size_t letters, std::size_t max_len) {
  std::vector<Key> out{Key{}};
  std::size_t      begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t const end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t c = 0; c < 2 * letters; ++c) {
        Key const& w = out[i];
        if (!w.empty() && (w.back() ^ 1U) == c) {
          continue;
        }
        Key next = w;
        next.push_back(c);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

StateSet step(RawGraph const& g, StateSet from, std::size_t code) {
  StateSet           out    = 0;
  std::size_t const  letter = code / 2;
  bool const         back   = code % 2 == 1;
  for (auto const& e : g.edges) {
    if (e.letter != letter) {
      continue;
    }
    auto const src = back ? e.to : e.from;
    auto const dst = back ? e.from : e.to;
    if (from >> src & 1U) {
      out |= StateSet{1} << dst;
    }
  }
  return out;
}

namespace {

void check_small(RawGraph const& g) {
  if (g.state_count > 64) {
    throw std::invalid_argument("oracle graphs are limited to 64 states");
  }
}

}  // namespace

std::set<Key> reduced_language(RawGraph const& g, std::size_t max_len) {
  check_small(g);
  std::set<Key>     out;
  std::size_t const codes = 2 * g.alphabet.size();
  Key               word;
  auto walk = [&](auto&& self, StateSet at) -> void {
    if (at >> g.accept & 1U) {
      out.insert(naive_reduce(word));
    }
    if (word.size() == max_len) {
      return;
    }
    for (std::size_t c = 0; c < codes; ++c) {
      if (StateSet next = step(g, at, c)) {
        word.push_back(c);
        self(self, next);
        word.pop_back();
      }
    }
  };
  walk(walk, StateSet{1} << g.start);
  return out;
}

std::vector<std::vector<bool>> dyck_equivalence(RawGraph const& g) {
  std::size_t const              n = g.state_count;
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    same[p][p] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& e : g.edges) {
      for (auto const& f : g.edges) {
        if (e.letter != f.letter) {
          continue;
        }
        if (same[e.from][f.from] && !same[e.to][f.to]) {
          same[e.to][f.to] = same[f.to][e.to] = true;
          changed = true;
        }
        if (same[e.to][f.to] && !same[e.from][f.from]) {
          same[e.from][f.from] = same[f.from][e.from] = true;
          changed = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (same[i][k] && same[k][j] && !same[i][j]) {
            same[i][j] = true;
            changed = true;
          }
        }
      }
    }
  }
  return same;
}

std::set<Key> reduced_language_exact(RawGraph const& g, std::size_t max_len) {
  check_small(g);
  auto const same  = dyck_equivalence(g);
  auto       close = [&](StateSet s) {
    StateSet out = 0;
    for (std::size_t p = 0; p < g.state_count; ++p) {
      if (s >> p & 1U) {
        for (std::size_t q = 0; q < g.state_count; ++q) {
          if (same[p][q]) {
            out |= StateSet{1} << q;
          }
        }
      }
    }
    return out;
  };
  std::set<Key>     out;
  std::size_t const codes = 2 * g.alphabet.size();
  Key               word;
  auto walk = [&](auto&& self, StateSet at) -> void {
    if (at >> g.accept & 1U) {
      out.insert(word);
    }
    if (word.size() == max_len) {
      return;
    }
    for (std::size_t c = 0; c < codes; ++c) {
      if (!word.empty() && (word.back() ^ 1U) == c) {
        continue;
      }
      if (StateSet next = close(step(g, at, c))) {
        word.push_back(c);
        self(self, next);
        word.pop_back();
      }
    }
  };
  walk(walk, close(StateSet{1} << g.start));
  return out;
}

std::set<Key> accepted_reduced(InverseAutomaton const& m, std::size_t max_len) {
  std::size_t const             letters = m.alphabet().size();
  std::vector<std::vector<int>> forward(letters, std::vector<int>(m.state_count(), -1));
  std::vector<std::vector<int>> backward(letters, std::vector<int>(m.state_count(), -1));
  for (std::size_t x = 0; x < letters; ++x) {
    auto const& image = m.letter_map(x).image();
    for (std::size_t p = 0; p < image.size(); ++p) {
      if (image[p] != PartialInjection::kUndefined) {
        forward[x][p]        = static_cast<int>(image[p]);
        backward[x][image[p]] = static_cast<int>(p);
      }
    }
  }
  std::set<Key> out;
  Key           word;
  auto walk = [&](auto&& self, int at) -> void {
    if (at == static_cast<int>(m.accept())) {
      out.insert(word);
    }
    if (word.size() == max_len) {
      return;
    }
    for (std::size_t c = 0; c < 2 * letters; ++c) {
      if (!word.empty() && (word.back() ^ 1U) == c) {
        continue;
      }
      int const next = (c % 2 == 0 ? forward : backward)[c / 2][static_cast<std::size_t>(at)];
      if (next >= 0) {
        word.push_back(c);
        self(self, next);
        word.pop_back();
      }
    }
  };
  walk(walk, static_cast<int>(m.start()));
  return out;
}

Ball subgroup_ball(std::vector<Key> const& generators, std::size_t max_factors,
                   std::size_t max_len) {
  std::vector<Key> factors;
  for (auto const& y : generators) {
    Key r = naive_reduce(y);
    if (r.empty()) {
      continue;
    }
    Key inv(r.rbegin(), r.rend());
    for (auto& c : inv) {
      c ^= 1U;
    }
    factors.push_back(std::move(r));
    factors.push_back(std::move(inv));
  }
  std::set<Key>    seen{Key{}};
  std::vector<Key> level{Key{}};
  std::size_t      short_before = 1;
  std::size_t      short_now    = 1;
  for (std::size_t k = 1; k <= max_factors; ++k) {
    std::vector<Key> next;
    for (auto const& s : level) {
      for (auto const& y : factors) {
        Key         joined = s;
        std::size_t i      = 0;
        while (!joined.empty() && i < y.size() && (joined.back() ^ 1U) == y[i]) {
          joined.pop_back();
          ++i;
        }
        joined.insert(joined.end(), y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
        if (seen.insert(joined).second) {
          next.push_back(std::move(joined));
        }
      }
    }
    level        = std::move(next);
    short_before = short_now;
    short_now    = static_cast<std::size_t>(
        std::count_if(seen.begin(), seen.end(), [&](Key const& w) { return w.size() <= max_len; }));
  }
  Ball ball{{}, short_now == short_before};
  for (auto const& w : seen) {
    if (w.size() <= max_len) {
      ball.elements.insert(w);
    }
  }
  return ball;
}

std::set<Key> capped_closure(std::vector<Key> const& generators, std::size_t cap) {
  std::set<Key>    seen{Key{}};
  std::vector<Key> frontier{Key{}};
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (auto const& s : frontier) {
      for (auto const& y : generators) {
        for (bool inverted : {false, true}) {
          Key factor = y;
          if (inverted) {
            std::reverse(factor.begin(), factor.end());
            for (auto& c : factor) {
              c ^= 1U;
            }
          }
          Key joined = naive_reduce([&] {
            Key k = s;
            k.insert(k.end(), factor.begin(), factor.end());
            return k;
          }());
          if (joined.size() <= cap && seen.insert(joined).second) {
            next.push_back(std::move(joined));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Map to_map(PartialInjection const& f) {
  Map out(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (auto y = f(static_cast<groupcode::Point>(x))) {
      out[x] = static_cast<int>(*y);
    }
  }
  return out;
}

Map map_compose(Map const& f, Map const& g) {
  Map out(g.size(), -1);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] >= 0) {
      out[x] = f[static_cast<std::size_t>(g[x])];
    }
  }
  return out;
}

Map map_inverse(Map const& f) {
  Map out(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= 0) {
      out[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
    }
  }
  return out;
}

std::set<Map> naive_closure(std::vector<Map> const& generators, std::size_t n) {
  Map identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Map> out{identity};
  for (auto const& f : generators) {
    out.insert(f);
    out.insert(map_inverse(f));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Map> const current(out.begin(), out.end());
    for (auto const& f : current) {
      for (auto const& g : current) {
        changed = out.insert(map_compose(f, g)).second || changed;
      }
    }
  }
  return out;
}

bool naive_is_aperiodic(std::set<Map> const& elements) {
  for (auto const& m : elements) {
    std::vector<Map> powers{m};
    while (true) {
      Map  next = map_compose(powers.back(), m);
      auto seen = std::find(powers.begin(), powers.end(), next);
      if (seen != powers.end()) {
        if (seen != powers.end() - 1) {
          return false;
        }
        break;
      }
      powers.push_back(std::move(next));
    }
  }
  return true;
}

std::size_t partial_injection_count(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t binom = 1;
    for (std::size_t i = 0; i < k; ++i) {
      binom = binom * (n - i) / (i + 1);
    }
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= k; ++i) {
      fact *= i;
    }
    total += binom * binom * fact;
  }
  return total;
}

Word random_reduced_word(Rng& rng, Alphabet const& alphabet, std::size_t min_len,
                         std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> code_dist(0, 2 * alphabet.size() - 1);
  std::size_t const                          len = len_dist(rng);
  Key                                        k;
  while (k.size() < len) {
    std::size_t const c = code_dist(rng);
    if (k.empty() || (k.back() ^ 1U) != c) {
      k.push_back(c);
    }
  }
  return word(alphabet, k);
}

RawGraph random_raw_graph(Rng& rng, Alphabet const& alphabet, std::size_t max_states,
                          std::size_t max_edges) {
  std::size_t const n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::uniform_int_distribution<groupcode::State> state(0, static_cast<groupcode::State>(n - 1));
  std::uniform_int_distribution<std::uint32_t>    letter(
      0, static_cast<std::uint32_t>(alphabet.size() - 1));
  RawGraph          g(alphabet, n, state(rng), state(rng));
  std::size_t const edges = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  for (std::size_t i = 0; i < edges; ++i) {
    auto const p = state(rng);
    auto const x = letter(rng);
    g.add_edge(p, x, state(rng));
  }
  return g;
}

PartialInjection random_partial_injection(Rng& rng, std::size_t n, double density) {
  std::vector<groupcode::Point> targets(n);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::bernoulli_distribution defined(density);
  for (auto& t : targets) {
    if (!defined(rng)) {
      t = PartialInjection::kUndefined;
    }
  }
  return PartialInjection(std::move(targets));
}

InverseAutomaton random_inverse_automaton(Rng& rng, Alphabet const& alphabet,
                                          std::size_t max_states, double density,
                                          bool distinct_ends) {
  std::size_t const n =
      std::uniform_int_distribution<std::size_t>(distinct_ends ? 2 : 1, max_states)(rng);
  std::vector<PartialInjection> maps;
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    maps.push_back(random_partial_injection(rng, n, density));
  }
  std::uniform_int_distribution<groupcode::State> state(0, static_cast<groupcode::State>(n - 1));
  auto const                                      start  = state(rng);
  auto                                            accept = state(rng);
  while (distinct_ends && accept == start) {
    accept = state(rng);
  }
  return InverseAutomaton(alphabet, std::move(maps), start, accept);
}

}  // namespace oracle
