// groupcode: command-line front end for the free-group / inverse-automaton
// toolkit.
//
// Exit codes: 0 affirmative answer or success, 1 negative answer, 2 usage or
// parse error, 3 resource limit exceeded.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groupcode/automaton.hpp"
#include "groupcode/decision.hpp"
#include "groupcode/encoding.hpp"
#include "groupcode/error.hpp"
#include "groupcode/freegroup.hpp"
#include "groupcode/io.hpp"
#include "groupcode/monoid.hpp"

namespace {

using namespace groupcode;

constexpr int kYes        = 0;
constexpr int kNo         = 1;
constexpr int kUsage      = 2;
constexpr int kExhausted  = 3;

// Numeric-aware ordering so that x_2 sorts before x_10.
bool natural_less(std::string const& lhs, std::string const& rhs) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    bool const di = std::isdigit(static_cast<unsigned char>(lhs[i])) != 0;
    bool const dj = std::isdigit(static_cast<unsigned char>(rhs[j])) != 0;
    if (di && dj) {
      std::size_t i2 = i;
      std::size_t j2 = j;
      while (i2 < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[i2]))) {
        ++i2;
      }
      while (j2 < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[j2]))) {
        ++j2;
      }
      auto a = lhs.substr(i, i2 - i);
      auto b = rhs.substr(j, j2 - j);
      a.erase(0, std::min(a.find_first_not_of('0'), a.size()));
      b.erase(0, std::min(b.find_first_not_of('0'), b.size()));
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      if (a != b) {
        return a < b;
      }
      i = i2;
      j = j2;
    } else {
      if (lhs[i] != rhs[j]) {
        return lhs[i] < rhs[j];
      }
      ++i;
      ++j;
    }
  }
  return lhs.size() - i < rhs.size() - j;
}

std::string show(Word const& w) {
  return w.empty() ? "1" : to_string(w);
}

struct Options {
  std::vector<std::string> words;
  std::vector<std::string> files;
  std::string              file;
  std::string              word;
  std::string              output;
  std::string              alphabet;
  std::string              encode_file;
  std::size_t              encode_n = 0;
  std::size_t              limit    = kDefaultMonoidLimit;
  bool                     from_stdin = false;
};

Alphabet alphabet_for(Options const& opt, std::vector<std::string> const& words) {
  if (!opt.alphabet.empty()) {
    // Split by hand: duplicates must reach the Alphabet check.
    std::istringstream       in(opt.alphabet);
    std::vector<std::string> given{std::istream_iterator<std::string>(in), {}};
    return Alphabet(std::move(given));
  }
  std::vector<std::string> names;
  for (auto const& w : words) {
    for (auto& name : letter_names(w)) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        names.push_back(std::move(name));
      }
    }
  }
  if (names.empty()) {
    return Alphabet::two_letter();
  }
  std::sort(names.begin(), names.end(), natural_less);
  return Alphabet(std::move(names));
}

std::vector<Word> parse_words(Alphabet const& alphabet, std::vector<std::string> const& texts) {
  std::vector<Word> out;
  for (auto const& t : texts) {
    out.push_back(parse_word(alphabet, t));
  }
  return out;
}

std::vector<std::string> word_inputs(Options const& opt) {
  if (!opt.from_stdin) {
    return {opt.word};
  }
  std::vector<std::string> lines;
  std::string              line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(line);
  }
  return lines;
}

void emit_automaton(Options const& opt, InverseAutomaton const& m) {
  auto text = io::format_automaton(m);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    io::write_file(opt.output, text);
  }
}

InverseAutomaton load_automaton(std::string const& path) {
  try {
    return io::parse_automaton(io::read_file(path));
  } catch (ParseError const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GroupEncoding load_encoding(Options const& opt) {
  if (!opt.encode_file.empty()) {
    if (opt.encode_n != 0) {
      throw ParseError("give either --encode or --encode-file, not both");
    }
    return io::parse_encoding(io::read_file(opt.encode_file));
  }
  if (opt.encode_n == 0) {
    throw ParseError("an encoding is required: --encode n or --encode-file path");
  }
  return make_aperiodic_encoding(opt.encode_n);
}

int run_reduce(Options const& opt) {
  auto inputs   = word_inputs(opt);
  auto alphabet = alphabet_for(opt, inputs);
  for (auto const& w : parse_words(alphabet, inputs)) {
    std::cout << show(reduce(w)) << '\n';
  }
  return kYes;
}

int run_stallings(Options const& opt) {
  auto alphabet = alphabet_for(opt, opt.words);
  emit_automaton(opt, stallings(alphabet, parse_words(alphabet, opt.words)));
  return kYes;
}

int run_fold(Options const& opt) {
  RawGraph g = [&] {
    try {
      return io::parse_graph(io::read_file(opt.file));
    } catch (ParseError const& e) {
      throw ParseError(opt.file + ": " + e.what());
    }
  }();
  emit_automaton(opt, fold(g).automaton);
  return kYes;
}

int run_member(Options const& opt) {
  auto m   = load_automaton(opt.file);
  int  ret = kYes;
  for (auto const& text : word_inputs(opt)) {
    bool const yes = subgroup_member(m, parse_word(m.alphabet(), text));
    std::cout << (yes ? "yes" : "no") << '\n';
    ret = yes ? ret : kNo;
  }
  return ret;
}

int run_rank(Options const& opt) {
  std::cout << rank(load_automaton(opt.file)) << '\n';
  return kYes;
}

int run_aperiodic(Options const& opt) {
  auto m        = load_automaton(opt.file);
  auto periodic = find_periodic_element(m, opt.limit);
  if (!periodic) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no\nwitness: " << show(periodic->word) << '\n';
  return kNo;
}

int run_radical_closed(Options const& opt) {
  auto alphabet = alphabet_for(opt, opt.words);
  auto verdict  = is_radical_closed(alphabet, parse_words(alphabet, opt.words), opt.limit);
  if (verdict.closed) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no\nwitness: " << show(verdict.witness->g) << " ^ " << verdict.witness->power
            << '\n';
  return kNo;
}

int run_radical_member(Options const& opt) {
  auto m   = load_automaton(opt.file);
  int  ret = kYes;
  for (auto const& text : word_inputs(opt)) {
    Word g = reduce(parse_word(m.alphabet(), text));
    auto n = radical_power(m, g);
    if (n) {
      std::cout << "yes\nwitness: " << show(g) << " ^ " << *n << '\n';
    } else {
      std::cout << "no\n";
      ret = kNo;
    }
  }
  return ret;
}

int run_encode(Options const& opt) {
  auto e = load_encoding(opt);
  for (auto const& text : word_inputs(opt)) {
    std::cout << show(encode_word(e, parse_word(e.source(), text))) << '\n';
  }
  return kYes;
}

int run_decode(Options const& opt) {
  auto e   = load_encoding(opt);
  int  ret = kYes;
  for (auto const& text : word_inputs(opt)) {
    auto u = decode_word(e, parse_word(e.target(), text));
    if (u) {
      std::cout << show(*u) << '\n';
    } else {
      std::cout << "no\n";
      ret = kNo;
    }
  }
  return ret;
}

int run_encode_automaton(Options const& opt) {
  auto e = load_encoding(opt);
  auto m = load_automaton(opt.file);
  if (!(m.alphabet() == e.source())) {
    throw ParseError(opt.file + ": automaton alphabet does not match the encoding's source");
  }
  emit_automaton(opt, encode_automaton(e, m));
  return kYes;
}

int run_intersect(Options const& opt) {
  std::vector<InverseAutomaton> ms;
  for (auto const& f : opt.files) {
    ms.push_back(load_automaton(f));
  }
  auto result = intersect_empty(ms);
  if (result.empty) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no\nwitness: " << show(*result.witness) << '\n';
  return kNo;
}

int run_monoid_member(Options const& opt) {
  auto maps = [&] {
    try {
      return io::parse_maps(io::read_file(opt.file));
    } catch (ParseError const& e) {
      throw ParseError(opt.file + ": " + e.what());
    }
  }();
  if (maps.maps.empty()) {
    throw ParseError(opt.file + ": no maps given");
  }
  auto query = std::find_if(maps.maps.begin(), maps.maps.end(),
                            [](auto const& named) { return named.first == "f_0"; });
  if (query == maps.maps.end()) {
    query = maps.maps.begin();
  }
  std::vector<std::string>      names;
  std::vector<PartialInjection> gens;
  for (auto it = maps.maps.begin(); it != maps.maps.end(); ++it) {
    if (it != query) {
      names.push_back(it->first);
      gens.push_back(it->second);
    }
  }
  auto expr = inverse_monoid_witness(query->second, gens, opt.limit);
  if (!expr) {
    std::cout << "no\n";
    return kNo;
  }
  std::cout << "yes\nwitness: ";
  if (expr->empty()) {
    std::cout << "id";
  }
  // Composition order: the rightmost map is applied first.
  for (auto it = expr->rbegin(); it != expr->rend(); ++it) {
    if (it != expr->rbegin()) {
      std::cout << " o ";
    }
    std::cout << names[it->generator] << (it->inverted ? "^-1" : "");
  }
  std::cout << '\n';
  return kYes;
}

int run_kozen(Options const& opt) {
  std::vector<InverseAutomaton> ms;
  for (auto const& f : opt.files) {
    ms.push_back(load_automaton(f));
  }
  KozenInstance const k = kozen_reduce(ms);
  io::NamedMaps       maps{k.size,
                           {{"f_init", k.f_init},
                            {"f_alpha", k.f_alpha},
                            {"f_beta", k.f_beta},
                            {"f_0", k.f_0}}};
  auto text = io::format_maps(maps);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    io::write_file(opt.output, text);
  }
  return kYes;
}

int run_is_code(Options const& opt) {
  auto alphabet = alphabet_for(opt, opt.words);
  auto words    = parse_words(alphabet, opt.words);
  if (is_group_code(words)) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no\n";
  return kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free groups, Stallings foldings, group codes and inverse automata"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", opt.alphabet,
                    "Space-separated letter names (default: letters used, sorted)");
  };
  auto add_stdin = [&](CLI::App* sub) {
    sub->add_flag("--stdin", opt.from_stdin, "Read one word per line from standard input");
  };
  auto add_encoding = [&](CLI::App* sub) {
    sub->add_option("--encode", opt.encode_n, "Use the encoding x_i -> a^(i-1) b a^-(i-1)");
    sub->add_option("--encode-file", opt.encode_file, "Read `image x <word>` lines");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", opt.limit, "Monoid element limit (exit 3 beyond it)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output, "Write to this file instead of stdout");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce a word");
  reduce_cmd->add_option("word", opt.word, "Word, e.g. \"a a^-1 b\"");
  add_alphabet(reduce_cmd);
  add_stdin(reduce_cmd);

  auto* stallings_cmd = app.add_subcommand("stallings", "Stallings automaton of <words>");
  stallings_cmd->add_option("words", opt.words, "Generators")->required();
  add_alphabet(stallings_cmd);
  add_output(stallings_cmd);

  auto* fold_cmd = app.add_subcommand("fold", "Fold an automaton file maximally");
  fold_cmd->add_option("file", opt.file)->required();
  add_output(fold_cmd);

  auto* member_cmd = app.add_subcommand("member", "Does the subgroup contain <word>?");
  member_cmd->add_option("file", opt.file)->required();
  member_cmd->add_option("word", opt.word);
  add_stdin(member_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "Rank of the subgroup of a core automaton");
  rank_cmd->add_option("file", opt.file)->required();

  auto* aperiodic_cmd = app.add_subcommand("aperiodic", "Is the transition monoid aperiodic?");
  aperiodic_cmd->add_option("file", opt.file)->required();
  add_limit(aperiodic_cmd);

  auto* radical_closed_cmd =
      app.add_subcommand("radical-closed", "Is <words> generating a radical-closed subgroup?");
  radical_closed_cmd->add_option("words", opt.words, "Generators");
  add_alphabet(radical_closed_cmd);
  add_limit(radical_closed_cmd);

  auto* radical_member_cmd =
      app.add_subcommand("radical-member", "Does some power of <word> lie in the subgroup?");
  radical_member_cmd->add_option("file", opt.file)->required();
  radical_member_cmd->add_option("word", opt.word);
  add_stdin(radical_member_cmd);

  auto* encode_cmd = app.add_subcommand("encode", "Encode a word over x_1..x_n into {a,b}");
  encode_cmd->add_option("word", opt.word);
  add_encoding(encode_cmd);
  add_stdin(encode_cmd);

  auto* decode_cmd = app.add_subcommand("decode", "Decode a word over {a,b}");
  decode_cmd->add_option("word", opt.word);
  add_encoding(decode_cmd);
  add_stdin(decode_cmd);

  auto* encode_automaton_cmd =
      app.add_subcommand("encode-automaton", "Encode an inverse automaton over {a,b}");
  encode_automaton_cmd->add_option("file", opt.file)->required();
  add_encoding(encode_automaton_cmd);
  add_output(encode_automaton_cmd);

  auto* intersect_cmd =
      app.add_subcommand("intersect", "Is the intersection of the languages empty?");
  intersect_cmd->add_option("files", opt.files)->required();

  auto* monoid_member_cmd = app.add_subcommand(
      "monoid-member", "Is f_0 in the inverse monoid generated by the other maps?");
  monoid_member_cmd->add_option("file", opt.file)->required();
  add_limit(monoid_member_cmd);

  auto* kozen_cmd =
      app.add_subcommand("kozen", "Reduce intersection emptiness to monoid membership");
  kozen_cmd->add_option("files", opt.files)->required();
  add_output(kozen_cmd);

  auto* is_code_cmd = app.add_subcommand("is-code", "Do <words> form a group code?");
  is_code_cmd->add_option("words", opt.words, "Words");
  add_alphabet(is_code_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (reduce_cmd->parsed()) return run_reduce(opt);
    if (stallings_cmd->parsed()) return run_stallings(opt);
    if (fold_cmd->parsed()) return run_fold(opt);
    if (member_cmd->parsed()) return run_member(opt);
    if (rank_cmd->parsed()) return run_rank(opt);
    if (aperiodic_cmd->parsed()) return run_aperiodic(opt);
    if (radical_closed_cmd->parsed()) return run_radical_closed(opt);
    if (radical_member_cmd->parsed()) return run_radical_member(opt);
    if (encode_cmd->parsed()) return run_encode(opt);
    if (decode_cmd->parsed()) return run_decode(opt);
    if (encode_automaton_cmd->parsed()) return run_encode_automaton(opt);
    if (intersect_cmd->parsed()) return run_intersect(opt);
    if (monoid_member_cmd->parsed()) return run_monoid_member(opt);
    if (kozen_cmd->parsed()) return run_kozen(opt);
    if (is_code_cmd->parsed()) return run_is_code(opt);
  } catch (ResourceLimitError const& e) {
    std::cerr << "groupcode: " << e.what() << '\n';
    return kExhausted;
  } catch (std::exception const& e) {
    std::cerr << "groupcode: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
