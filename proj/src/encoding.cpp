#include "groupcode/encoding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupcode/error.hpp"

namespace groupcode {

namespace {

struct LabelledEdge {
  State         from;
  std::uint32_t letter;
  State         to;
  Word          label;
  bool          alive = true;
};

struct Reading {
  std::size_t edge;
  State       to;
  Word        label;
};

}  // namespace

GroupEncoding::GroupEncoding(Alphabet source, std::vector<Word> images)
    : source_(std::move(source)),
      target_(Alphabet::two_letter()),
      images_(std::move(images)),
      image_automaton_(InverseAutomaton::trivial(Alphabet::two_letter())) {
  if (images_.size() != source_.size()) {
    throw Error("group encoding needs exactly one image per source letter");
  }
  for (auto& w : images_) {
    if (w.alphabet().names() != target_.names()) {
      throw Error("group encoding images must be words over {a, b}");
    }
    w = reduce(Word(target_, w.letters()));
  }
  if (!is_group_code(images_)) {
    throw Error("images do not form a group code");
  }
  image_automaton_ = stallings(target_, images_);
  build_decoder();
}

void GroupEncoding::build_decoder() {
  std::vector<LabelledEdge> edges;
  std::size_t               vertices = 1;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    Word const& w = images_[i];
    State       p = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      State q = j + 1 == w.size() ? State{0} : static_cast<State>(vertices++);
      Word  label(source_);
      if (j == 0) {
        label.push_back(SignedLetter{i, 1});
      }
      if (w[j].positive()) {
        edges.push_back({p, w[j].index, q, std::move(label)});
      } else {
        edges.push_back({q, w[j].index, p, invert(label)});
      }
      p = q;
    }
  }

  std::size_t const codes = 2 * target_.size();
  auto readings = [&](State p, std::size_t code) {
    auto const           x = SignedLetter::from_code(code);
    std::vector<Reading> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto const& e = edges[k];
      if (!e.alive || e.letter != x.index) {
        continue;
      }
      if (x.positive() && e.from == p) {
        out.push_back({k, e.to, e.label});
      } else if (!x.positive() && e.to == p) {
        out.push_back({k, e.from, invert(e.label)});
      }
    }
    return out;
  };

  // Fold until deterministic. Identifying two vertices first re-gauges the
  // discarded one (labels out of it multiplied on the left by c, labels into
  // it on the right by c^-1), which leaves every closed path at the base
  // unchanged and makes the two folded edges carry equal labels.
  bool changed = true;
  while (changed) {
    changed = false;
    for (State p = 0; p < vertices && !changed; ++p) {
      for (std::size_t code = 0; code < codes && !changed; ++code) {
        auto rs = readings(p, code);
        if (rs.size() < 2) {
          continue;
        }
        changed = true;
        Reading r1 = rs[0];
        Reading r2 = rs[1];
        if (r1.to == r2.to) {
          if (!(r1.label == r2.label)) {
            throw Error("images satisfy a non-trivial relation");
          }
          edges[r1.edge].alive = false;
          continue;
        }
        if (r1.to == 0) {
          std::swap(r1, r2);
        }
        State const victim = r1.to;
        State const keep   = r2.to;
        Word const  c      = free_multiply(invert(r2.label), r1.label);
        Word const  c_inv  = invert(c);
        for (auto& e : edges) {
          if (!e.alive) {
            continue;
          }
          if (e.from == victim) {
            e.label = free_multiply(c, e.label);
          }
          if (e.to == victim) {
            e.label = free_multiply(e.label, c_inv);
          }
        }
        for (auto& e : edges) {
          if (e.from == victim) {
            e.from = keep;
          }
          if (e.to == victim) {
            e.to = keep;
          }
        }
        auto const& e1 = edges[r1.edge];
        auto const& e2 = edges[r2.edge];
        if (e1.from != e2.from || e1.to != e2.to || !(e1.label == e2.label)) {
          throw std::logic_error("decoder fold produced inconsistent labels");
        }
        edges[r1.edge].alive = false;
      }
    }
  }

  std::vector<State> number(vertices, PartialInjection::kUndefined);
  State              next = 0;
  number[0]               = next++;
  for (auto const& e : edges) {
    if (!e.alive) {
      continue;
    }
    for (State v : {e.from, e.to}) {
      if (number[v] == PartialInjection::kUndefined) {
        number[v] = next++;
      }
    }
  }
  decoder_.assign(next, std::vector<std::optional<LabelledArrow>>(codes));
  for (auto const& e : edges) {
    if (!e.alive) {
      continue;
    }
    decoder_[number[e.from]][SignedLetter{e.letter, 1}.code()] =
        LabelledArrow{number[e.to], e.label};
    decoder_[number[e.to]][SignedLetter{e.letter, -1}.code()] =
        LabelledArrow{number[e.from], invert(e.label)};
  }
}

Word GroupEncoding::encode(Word const& w) const {
  if (!(w.alphabet() == source_)) {
    throw Error("encode: word is not over the source alphabet");
  }
  Word out(target_);
  for (auto x : w.letters()) {
    out.append(x.positive() ? images_[x.index] : invert(images_[x.index]));
  }
  return reduce(out);
}

std::optional<Word> GroupEncoding::decode(Word const& w) const {
  if (w.alphabet().names() != target_.names()) {
    throw Error("decode: word is not over {a, b}");
  }
  Word  r     = reduce(Word(target_, w.letters()));
  State state = 0;
  Word  out(source_);
  for (auto x : r.letters()) {
    auto const& arrow = decoder_[state][x.code()];
    if (!arrow) {
      return std::nullopt;
    }
    out.append(arrow->label);
    state = arrow->to;
  }
  if (state != 0) {
    return std::nullopt;
  }
  return reduce(out);
}

GroupEncoding make_aperiodic_encoding(std::size_t n) {
  if (n == 0) {
    throw Error("make_aperiodic_encoding: n must be positive");
  }
  Alphabet const    ab = Alphabet::two_letter();
  SignedLetter const a{0, 1};
  SignedLetter const b{1, 1};
  std::vector<Word> images;
  for (std::size_t i = 0; i < n; ++i) {
    Word w(ab);
    for (std::size_t k = 0; k < i; ++k) {
      w.push_back(a);
    }
    w.push_back(b);
    for (std::size_t k = 0; k < i; ++k) {
      w.push_back(a.inverse());
    }
    images.push_back(std::move(w));
  }
  return GroupEncoding(Alphabet::numbered("x_", n), std::move(images));
}

bool is_group_code(std::span<Word const> words) {
  if (words.empty()) {
    return true;
  }
  Alphabet const& alphabet = words.front().alphabet();
  std::set<std::vector<SignedLetter>> seen;
  std::vector<Word>                   reduced;
  for (auto const& w : words) {
    if (!(w.alphabet() == alphabet)) {
      throw Error("is_group_code: words over different alphabets");
    }
    Word r = reduce(w);
    if (r.empty() || !seen.insert(r.letters()).second) {
      return false;
    }
    reduced.push_back(std::move(r));
  }
  return rank(stallings(alphabet, reduced)) == words.size();
}

Word encode_word(GroupEncoding const& e, Word const& w) {
  return e.encode(w);
}

std::optional<Word> decode_word(GroupEncoding const& e, Word const& w) {
  return e.decode(w);
}

EncodedAutomaton encode_automaton_traced(GroupEncoding const& e, InverseAutomaton const& m) {
  if (!(m.alphabet() == e.source())) {
    throw Error("encode_automaton: automaton is not over the source alphabet");
  }
  RawGraph g(e.target(), m.state_count(), m.start(), m.accept());
  for (std::uint32_t x = 0; x < m.alphabet().size(); ++x) {
    Word const& image = e.image(x);
    for (auto [p, q] : m.letter_map(x).pairs()) {
      State from = p;
      for (std::size_t j = 0; j < image.size(); ++j) {
        State to = j + 1 == image.size() ? q : g.add_state();
        g.add_signed_edge(from, image[j], to);
        from = to;
      }
    }
  }
  auto result = fold(g);
  return EncodedAutomaton{std::move(g), std::move(result.automaton), std::move(result.trace)};
}

InverseAutomaton encode_automaton(GroupEncoding const& e, InverseAutomaton const& m) {
  return encode_automaton_traced(e, m).folded;
}

bool recognize_nielsen_codeword(Word const& w) {
  auto const a = w.alphabet().find("a");
  auto const b = w.alphabet().find("b");
  if (!a || !b) {
    return false;
  }
  auto const& xs = w.letters();
  std::size_t i  = 0;
  while (i < xs.size() && xs[i].index == *a && xs[i].positive()) {
    ++i;
  }
  std::size_t const n = i;
  if (i == xs.size() || xs[i].index != *b || !xs[i].positive()) {
    return false;
  }
  ++i;
  std::size_t tail = 0;
  while (i < xs.size() && xs[i].index == *a && !xs[i].positive()) {
    ++i;
    ++tail;
  }
  return i == xs.size() && tail == n;
}

}  // namespace groupcode
