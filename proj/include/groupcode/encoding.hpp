#ifndef GROUPCODE_ENCODING_HPP
#define GROUPCODE_ENCODING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "groupcode/automaton.hpp"
#include "groupcode/freegroup.hpp"

namespace groupcode {

//! Injective free-group morphism FG(X) -> FG({a, b}) given by the images
//! of the letters of X. Immutable once built.
class GroupEncoding {
 public:
  //! Reduces the images and checks that they form a group code over {a,b};
  //! throws Error otherwise.
  GroupEncoding(Alphabet source, std::vector<Word> images);

  Alphabet const&          source() const noexcept { return source_; }
  Alphabet const&          target() const noexcept { return target_; }
  std::vector<Word> const& images() const noexcept { return images_; }
  Word const&              image(std::size_t letter) const { return images_.at(letter); }

  //! Stallings automaton of the image subgroup.
  InverseAutomaton const& image_automaton() const noexcept { return image_automaton_; }

  Word                encode(Word const& w) const;
  std::optional<Word> decode(Word const& w) const;

 private:
  // Folded image flower whose edges carry source-group labels: the product
  // of labels along a closed path at the base is its preimage.
  struct LabelledArrow {
    State to;
    Word  label;
  };

  void build_decoder();

  Alphabet          source_;
  Alphabet          target_;
  std::vector<Word> images_;
  InverseAutomaton  image_automaton_;
  // decoder_[state][signed letter code]
  std::vector<std::vector<std::optional<LabelledArrow>>> decoder_;
};

//! x_i -> a^(i-1) b a^-(i-1), 1 <= i <= n. Throws Error if n == 0.
GroupEncoding make_aperiodic_encoding(std::size_t n);

//! Distinct non-empty reductions whose Stallings automaton has rank equal
//! to the number of words.
bool is_group_code(std::span<Word const> words);

Word                encode_word(GroupEncoding const& e, Word const& w);
std::optional<Word> decode_word(GroupEncoding const& e, Word const& w);

//! Subdivides every transition p --x--> q into a path labelled by the image
//! of x, then folds.
InverseAutomaton encode_automaton(GroupEncoding const& e, InverseAutomaton const& m);

//! Same, also returning the unfolded graph and its fold trace.
struct EncodedAutomaton {
  RawGraph         subdivided;
  InverseAutomaton folded;
  FoldTrace        trace;
};
EncodedAutomaton encode_automaton_traced(GroupEncoding const& e, InverseAutomaton const& m);

//! Linear scan for w = a^n b a^-n, n >= 0 (letters named `a` and `b`).
bool recognize_nielsen_codeword(Word const& w);

}  // namespace groupcode

#endif  // GROUPCODE_ENCODING_HPP
