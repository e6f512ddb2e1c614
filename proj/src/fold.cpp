#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <random>

#include "groupcode/automaton.hpp"
#include "groupcode/error.hpp"

namespace groupcode {

namespace {

constexpr State kNone = PartialInjection::kUndefined;

// An original edge read from `src` in the direction of some signed letter.
struct Arrow {
  State src = kNone;
  State dst = kNone;

  bool present() const noexcept { return src != kNone; }
};

struct Pending {
  State     a;
  State     b;
  FoldMerge record;
};

class Folder {
 public:
  Folder(RawGraph const& g, std::optional<std::uint64_t> seed)
      : g_(g),
        codes_(2 * g.alphabet.size()),
        parent_(g.state_count),
        size_(g.state_count, 1),
        table_(g.state_count * codes_) {
    std::iota(parent_.begin(), parent_.end(), State{0});
    if (seed) {
      rng_.emplace(*seed);
    }
  }

  FoldResult run() {
    std::vector<Edge> edges = g_.edges;
    if (rng_) {
      std::shuffle(edges.begin(), edges.end(), *rng_);
    }
    for (auto const& e : edges) {
      add_arrow(e.from, SignedLetter{e.letter, 1}.code(), e.to);
      add_arrow(e.to, SignedLetter{e.letter, -1}.code(), e.from);
    }
    while (!pending_.empty()) {
      Pending next = pop();
      unite(next);
    }
    return build();
  }

 private:
  State find(State x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  Arrow& slot(State root, std::size_t code) { return table_[root * codes_ + code]; }

  void add_arrow(State src, std::size_t code, State dst) {
    Arrow& s = slot(find(src), code);
    if (!s.present()) {
      s = Arrow{src, dst};
      return;
    }
    auto const x = SignedLetter::from_code(code).inverse();
    pending_.push_back(Pending{s.dst, dst, FoldMerge{s.dst, dst, x, s.src, src}});
  }

  Pending pop() {
    if (rng_) {
      std::uniform_int_distribution<std::size_t> pick(0, pending_.size() - 1);
      std::size_t const                          i = pick(*rng_);
      std::swap(pending_[i], pending_.back());
      Pending out = pending_.back();
      pending_.pop_back();
      return out;
    }
    Pending out = pending_.front();
    pending_.pop_front();
    return out;
  }

  void unite(Pending const& p) {
    State ra = find(p.a);
    State rb = find(p.b);
    if (ra == rb) {
      return;
    }
    merges_.push_back(p.record);
    bool keep_a = size_[ra] >= size_[rb];
    if (rng_ && size_[ra] == size_[rb]) {
      keep_a = std::bernoulli_distribution(0.5)(*rng_);
    }
    State const root  = keep_a ? ra : rb;
    State const other = keep_a ? rb : ra;
    parent_[other]    = root;
    size_[root] += size_[other];
    for (std::size_t c = 0; c < codes_; ++c) {
      Arrow& mine   = slot(root, c);
      Arrow& theirs = slot(other, c);
      if (!theirs.present()) {
        continue;
      }
      if (!mine.present()) {
        mine = theirs;
      } else {
        auto const x = SignedLetter::from_code(c).inverse();
        pending_.push_back(
            Pending{mine.dst, theirs.dst, FoldMerge{mine.dst, theirs.dst, x, mine.src, theirs.src}});
      }
      theirs = Arrow{};
    }
  }

  FoldResult build() {
    std::size_t const  n = g_.state_count;
    std::vector<State> number(n, kNone);
    State              next = 0;
    auto               bfs  = [&](State root) {
      std::queue<State> queue;
      number[root] = next++;
      queue.push(root);
      while (!queue.empty()) {
        State r = queue.front();
        queue.pop();
        for (std::size_t c = 0; c < codes_; ++c) {
          Arrow const& a = slot(r, c);
          if (!a.present()) {
            continue;
          }
          State t = find(a.dst);
          if (number[t] == kNone) {
            number[t] = next++;
            queue.push(t);
          }
        }
      }
    };
    if (n > 0) {
      bfs(find(g_.start));
      for (State s = 0; s < n; ++s) {
        if (number[find(s)] == kNone) {
          bfs(find(s));
        }
      }
    }
    std::size_t const classes = next;
    std::vector<std::vector<Point>> images(g_.alphabet.size(),
                                           std::vector<Point>(classes, kNone));
    for (State r = 0; r < n; ++r) {
      if (find(r) != r) {
        continue;
      }
      for (std::uint32_t x = 0; x < g_.alphabet.size(); ++x) {
        Arrow const& a = slot(r, SignedLetter{x, 1}.code());
        if (a.present()) {
          images[x][number[r]] = number[find(a.dst)];
        }
      }
    }
    std::vector<PartialInjection> maps;
    maps.reserve(images.size());
    for (auto& im : images) {
      maps.emplace_back(std::move(im));
    }
    FoldTrace trace;
    trace.class_of.resize(n);
    for (State s = 0; s < n; ++s) {
      trace.class_of[s] = number[find(s)];
    }
    trace.merges = std::move(merges_);
    InverseAutomaton m(g_.alphabet, std::move(maps), trace.class_of.at(g_.start),
                       trace.class_of.at(g_.accept));
    return FoldResult{std::move(m), std::move(trace)};
  }

  RawGraph const&                   g_;
  std::size_t                       codes_;
  std::vector<State>                parent_;
  std::vector<std::size_t>          size_;
  std::vector<Arrow>                table_;
  std::deque<Pending>               pending_;
  std::vector<FoldMerge>            merges_;
  std::optional<std::mt19937_64>    rng_;
};

// Dyck words attached to merges, following the inductive construction:
// the word for merge i is  x . w . x^-1  where w links via_first to
// via_second through earlier merges.
class WitnessBuilder {
 public:
  WitnessBuilder(RawGraph const& g, FoldTrace const& trace)
      : g_(g), trace_(trace), adjacent_(g.state_count), memo_(trace.merges.size()) {
    for (std::size_t i = 0; i < trace.merges.size(); ++i) {
      adjacent_[trace.merges[i].first].push_back(i);
      adjacent_[trace.merges[i].second].push_back(i);
    }
  }

  Word path(State p, State q) {
    // The merges form a forest on the original states; walk its unique
    // p-q path.
    std::vector<std::size_t> via(g_.state_count, kNoMerge);
    std::vector<bool>        seen(g_.state_count, false);
    std::queue<State>        queue;
    queue.push(p);
    seen[p] = true;
    while (!queue.empty() && !seen[q]) {
      State s = queue.front();
      queue.pop();
      for (auto i : adjacent_[s]) {
        auto const& m = trace_.merges[i];
        State       t = m.first == s ? m.second : m.first;
        if (!seen[t]) {
          seen[t] = true;
          via[t]  = i;
          queue.push(t);
        }
      }
    }
    if (!seen[q]) {
      throw Error("fold_witness: states are not fold-equivalent");
    }
    std::vector<std::pair<std::size_t, bool>> steps;  // merge, forward?
    for (State s = q; s != p;) {
      auto const& m = trace_.merges[via[s]];
      bool        forward = m.second == s;
      steps.emplace_back(via[s], forward);
      s = forward ? m.first : m.second;
    }
    Word out(g_.alphabet);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      Word const& w = merge_word(it->first);
      out.append(it->second ? w : invert(w));
    }
    return out;
  }

 private:
  static constexpr std::size_t kNoMerge = static_cast<std::size_t>(-1);

  Word const& merge_word(std::size_t i) {
    if (!memo_[i]) {
      auto const& m = trace_.merges[i];
      Word        w(g_.alphabet, {m.letter});
      w.append(path(m.via_first, m.via_second));
      w.push_back(m.letter.inverse());
      memo_[i] = std::move(w);
    }
    return *memo_[i];
  }

  RawGraph const&                       g_;
  FoldTrace const&                      trace_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::vector<std::optional<Word>>      memo_;
};

}  // namespace

FoldResult fold(RawGraph const& g, std::optional<std::uint64_t> shuffle_seed) {
  g.validate();
  return Folder(g, shuffle_seed).run();
}

Word fold_witness(RawGraph const& g, FoldTrace const& trace, State p, State q) {
  if (p >= g.state_count || q >= g.state_count) {
    throw Error("fold_witness: state out of range");
  }
  if (trace.class_of.at(p) != trace.class_of.at(q)) {
    throw Error("fold_witness: states are not fold-equivalent");
  }
  return WitnessBuilder(g, trace).path(p, q);
}

}  // namespace groupcode
