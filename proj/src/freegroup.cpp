#include "groupcode/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "groupcode/error.hpp"

namespace groupcode {

namespace {

bool valid_letter_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto const c = static_cast<unsigned char>(ch);
    return std::isgraph(c) != 0 && ch != '^' && ch != '#';
  });
}

void require_same_alphabet(Word const& u, Word const& v, char const* what) {
  if (!(u.alphabet() == v.alphabet())) {
    throw Error(std::string(what) + ": words over different alphabets");
  }
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t                   i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t const start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(text.substr(start, i - start));
    }
  }
  return tokens;
}

constexpr std::string_view kInverseSuffix = "^-1";

}  // namespace

////////////////////////////////////////////////////////////////////////
// Alphabet
////////////////////////////////////////////////////////////////////////

Alphabet::Alphabet(std::vector<std::string> letters) {
  if (letters.empty()) {
    throw Error("alphabet must contain at least one letter");
  }
  std::unordered_set<std::string> seen;
  for (auto const& name : letters) {
    if (!valid_letter_name(name)) {
      throw Error("invalid letter name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error("duplicate letter name '" + name + "'");
    }
  }
  letters_ = std::make_shared<std::vector<std::string> const>(std::move(letters));
}

Alphabet::Alphabet(std::initializer_list<std::string_view> letters)
    : Alphabet(std::vector<std::string>(letters.begin(), letters.end())) {}

Alphabet Alphabet::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

Alphabet Alphabet::two_letter() {
  static Alphabet const ab{"a", "b"};
  return ab;
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = std::find(letters_->begin(), letters_->end(), name);
  if (it == letters_->end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - letters_->begin());
}

////////////////////////////////////////////////////////////////////////
// Word
////////////////////////////////////////////////////////////////////////

Word::Word(Alphabet alphabet, std::vector<SignedLetter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (auto x : letters_) {
    if (x.index >= alphabet_.size() || (x.sign != 1 && x.sign != -1)) {
      throw Error("word letter out of range for its alphabet");
    }
  }
}

void Word::push_back(SignedLetter x) {
  if (x.index >= alphabet_.size() || (x.sign != 1 && x.sign != -1)) {
    throw Error("word letter out of range for its alphabet");
  }
  letters_.push_back(x);
}

void Word::append(Word const& other) {
  require_same_alphabet(*this, other, "append");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

bool operator<(Word const& lhs, Word const& rhs) {
  if (lhs.size() != rhs.size()) {
    return lhs.size() < rhs.size();
  }
  return lhs.letters_ < rhs.letters_;
}

////////////////////////////////////////////////////////////////////////
// Free group operations
////////////////////////////////////////////////////////////////////////

Word reduce(Word const& w) {
  std::vector<SignedLetter> stack;
  stack.reserve(w.size());
  for (auto x : w.letters()) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(w.alphabet(), std::move(stack));
}

bool is_reduced(Word const& w) {
  auto const& xs = w.letters();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] == xs[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

Word invert(Word const& w) {
  std::vector<SignedLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.alphabet(), std::move(out));
}

Word concatenate(Word const& u, Word const& v) {
  Word out = u;
  out.append(v);
  return out;
}

Word free_multiply(Word const& u, Word const& v) {
  require_same_alphabet(u, v, "free_multiply");
  return reduce(concatenate(u, v));
}

Word power(Word const& w, std::size_t k) {
  Word out(w.alphabet());
  for (std::size_t i = 0; i < k; ++i) {
    out.append(w);
  }
  return out;
}

bool is_dyck(Word const& w) {
  return reduce(w).empty();
}

std::pair<Word, Word> cyclic_decompose(Word const& w) {
  if (w.empty()) {
    throw Error("cyclic_decompose: empty word");
  }
  if (!is_reduced(w)) {
    throw Error("cyclic_decompose: word is not reduced");
  }
  auto const&       xs = w.letters();
  std::size_t const n  = xs.size();
  std::size_t       k  = 0;
  // 2k < n always holds for a reduced word: the two middle letters of an
  // even-length word cannot be mutually inverse.
  while (2 * (k + 1) < n && xs[k] == xs[n - 1 - k].inverse()) {
    ++k;
  }
  Word u(w.alphabet(), {xs.begin(), xs.begin() + k});
  Word c(w.alphabet(), {xs.begin() + k, xs.end() - k});
  return {std::move(u), std::move(c)};
}

////////////////////////////////////////////////////////////////////////
// Text syntax
////////////////////////////////////////////////////////////////////////

Word parse_word(Alphabet const& alphabet, std::string_view text) {
  auto tokens = tokenize(text);
  Word w(alphabet);
  if (tokens.size() == 1 && tokens[0] == "1" && !alphabet.find("1")) {
    return w;
  }
  for (auto token : tokens) {
    std::int8_t sign = 1;
    if (token.size() > kInverseSuffix.size() && token.ends_with(kInverseSuffix)) {
      token.remove_suffix(kInverseSuffix.size());
      sign = -1;
    }
    auto index = alphabet.find(token);
    if (!index) {
      throw ParseError("unknown letter '" + std::string(token) + "'");
    }
    w.push_back(SignedLetter{static_cast<std::uint32_t>(*index), sign});
  }
  return w;
}

std::string to_string(Word const& w) {
  std::string out;
  for (auto x : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += w.alphabet().name(x.index);
    if (!x.positive()) {
      out += kInverseSuffix;
    }
  }
  return out;
}

std::vector<std::string> letter_names(std::string_view text) {
  auto                     tokens = tokenize(text);
  std::vector<std::string> names;
  if (tokens.size() == 1 && tokens[0] == "1") {
    return names;
  }
  for (auto token : tokens) {
    if (token.size() > kInverseSuffix.size() && token.ends_with(kInverseSuffix)) {
      token.remove_suffix(kInverseSuffix.size());
    }
    std::string name(token);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(std::move(name));
    }
  }
  return names;
}

}  // namespace groupcode
