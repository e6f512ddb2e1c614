#ifndef GROUPCODE_FREEGROUP_HPP
#define GROUPCODE_FREEGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace groupcode {

//! Ordered list of distinct letter names.
//!
//! Names are arbitrary printable identifiers without whitespace, `^` or `#`,
//! so alphabets like {x_1, ..., x_n} of any size are representable. Copies
//! share the underlying storage.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);
  Alphabet(std::initializer_list<std::string_view> letters);

  //! {prefix1, ..., prefixN}, e.g. numbered("x_", 3) = {x_1, x_2, x_3}.
  static Alphabet numbered(std::string_view prefix, std::size_t n);

  //! The two-letter alphabet {a, b}.
  static Alphabet two_letter();

  std::size_t size() const noexcept { return letters_->size(); }
  std::string const& name(std::size_t index) const { return letters_->at(index); }
  std::vector<std::string> const& names() const noexcept { return *letters_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(Alphabet const& lhs, Alphabet const& rhs) {
    return lhs.letters_ == rhs.letters_ || *lhs.letters_ == *rhs.letters_;
  }

 private:
  std::shared_ptr<std::vector<std::string> const> letters_;
};

//! A letter of A or of A^-1.
struct SignedLetter {
  std::uint32_t index = 0;
  std::int8_t   sign  = 1;  // +1 or -1

  constexpr SignedLetter inverse() const noexcept {
    return SignedLetter{index, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool positive() const noexcept { return sign > 0; }

  //! Dense code 2*index + (negative ? 1 : 0); this is also the canonical
  //! letter order a, a^-1, b, b^-1, ... used for every search.
  constexpr std::size_t code() const noexcept {
    return 2 * static_cast<std::size_t>(index) + (sign < 0 ? 1 : 0);
  }
  static constexpr SignedLetter from_code(std::size_t code) noexcept {
    return SignedLetter{static_cast<std::uint32_t>(code / 2),
                        static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(SignedLetter, SignedLetter) = default;
  friend constexpr auto operator<=>(SignedLetter lhs, SignedLetter rhs) noexcept {
    return lhs.code() <=> rhs.code();
  }
};

//! Element of the free monoid over A^{+-1}; not necessarily reduced.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<SignedLetter> letters);

  Alphabet const&                  alphabet() const noexcept { return alphabet_; }
  std::vector<SignedLetter> const& letters() const noexcept { return letters_; }
  std::span<SignedLetter const>    span() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool        empty() const noexcept { return letters_.empty(); }
  SignedLetter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(SignedLetter x);
  void pop_back() { letters_.pop_back(); }
  void append(Word const& other);

  friend bool operator==(Word const& lhs, Word const& rhs) {
    return lhs.letters_ == rhs.letters_ && lhs.alphabet_ == rhs.alphabet_;
  }
  //! Length-lexicographic order on the letter codes (alphabets ignored).
  friend bool operator<(Word const& lhs, Word const& rhs);

 private:
  Alphabet                  alphabet_;
  std::vector<SignedLetter> letters_;
};

//! Free reduction by a single left-to-right stack pass.
Word reduce(Word const& w);
bool is_reduced(Word const& w);

Word invert(Word const& w);

//! Concatenation in the free monoid (no reduction).
Word concatenate(Word const& u, Word const& v);

//! reduce(u v). Throws Error on alphabet mismatch.
Word free_multiply(Word const& u, Word const& v);

//! w^k as a free-monoid word (no reduction), k >= 0.
Word power(Word const& w, std::size_t k);

bool is_dyck(Word const& w);

//! w = u c u^-1 without cancellation, c cyclically reduced, u maximal.
//! Throws Error if w is empty or not reduced.
std::pair<Word, Word> cyclic_decompose(Word const& w);

//! Parses space-separated tokens `x` or `x^-1`. The single token `1`
//! denotes the empty word unless `1` is itself a letter.
Word parse_word(Alphabet const& alphabet, std::string_view text);

//! Space-separated tokens; the empty word prints as the empty string.
std::string to_string(Word const& w);

//! Letter names used in `text`, in order of first appearance (the `1`
//! empty-word token is skipped).
std::vector<std::string> letter_names(std::string_view text);

}  // namespace groupcode

#endif  // GROUPCODE_FREEGROUP_HPP
