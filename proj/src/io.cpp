#include "groupcode/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "groupcode/error.hpp"

namespace groupcode::io {

namespace {

struct Line {
  std::size_t                   number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t       number = 0;
  while (!text.empty()) {
    ++number;
    auto const      eol  = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line        parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
        ++i;
      }
      std::size_t const start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        ++i;
      }
      if (i > start) {
        parsed.tokens.push_back(line.substr(start, i - start));
      }
    }
    if (!parsed.tokens.empty()) {
      out.push_back(std::move(parsed));
    }
  }
  return out;
}

std::size_t parse_number(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

void expect_arity(Line const& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError("'" + std::string(line.tokens[0]) + "' expects "
                         + std::to_string(n - 1) + " argument(s)",
                     line.number);
  }
}

template <typename T>
void set_once(std::optional<T>& slot, T value, Line const& line) {
  if (slot) {
    throw ParseError("duplicate '" + std::string(line.tokens[0]) + "' line", line.number);
  }
  slot = std::move(value);
}

}  // namespace

RawGraph parse_graph(std::string_view text) {
  std::optional<Alphabet>    alphabet;
  std::optional<std::size_t> states;
  std::optional<std::size_t> start;
  std::optional<std::size_t> accept;
  struct PendingEdge {
    std::size_t      line;
    std::size_t      from;
    std::string_view letter;
    std::size_t      to;
  };
  std::vector<PendingEdge> edges;

  for (auto const& line : lines_of(text)) {
    auto const keyword = line.tokens[0];
    if (keyword == "alphabet") {
      if (line.tokens.size() < 2) {
        throw ParseError("'alphabet' needs at least one letter", line.number);
      }
      try {
        set_once(alphabet,
                 Alphabet(std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end())),
                 line);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), line.number);
      }
    } else if (keyword == "states") {
      expect_arity(line, 2);
      set_once(states, parse_number(line.tokens[1], line.number), line);
    } else if (keyword == "start") {
      expect_arity(line, 2);
      set_once(start, parse_number(line.tokens[1], line.number), line);
    } else if (keyword == "accept") {
      expect_arity(line, 2);
      set_once(accept, parse_number(line.tokens[1], line.number), line);
    } else if (keyword == "edge") {
      expect_arity(line, 4);
      edges.push_back(PendingEdge{line.number, parse_number(line.tokens[1], line.number),
                                  line.tokens[2], parse_number(line.tokens[3], line.number)});
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line.number);
    }
  }
  if (!alphabet || !states || !start || !accept) {
    throw ParseError("automaton needs 'alphabet', 'states', 'start' and 'accept' lines");
  }
  if (*states == 0) {
    throw ParseError("automaton must have at least one state");
  }
  if (*start >= *states || *accept >= *states) {
    throw ParseError("start or accept state out of range");
  }
  RawGraph g(*alphabet, *states, static_cast<State>(*start), static_cast<State>(*accept));
  for (auto const& e : edges) {
    auto letter = alphabet->find(e.letter);
    if (!letter) {
      throw ParseError("unknown letter '" + std::string(e.letter) + "'", e.line);
    }
    if (e.from >= *states || e.to >= *states) {
      throw ParseError("edge endpoint out of range", e.line);
    }
    g.add_edge(static_cast<State>(e.from), static_cast<std::uint32_t>(*letter),
               static_cast<State>(e.to));
  }
  return g;
}

InverseAutomaton parse_automaton(std::string_view text) {
  auto m = as_inverse_automaton(parse_graph(text));
  if (!m) {
    throw ParseError("graph is not deterministic (not an inverse automaton); fold it first");
  }
  return std::move(*m);
}

std::string format_graph(RawGraph const& g) {
  std::ostringstream out;
  out << "alphabet";
  for (auto const& name : g.alphabet.names()) {
    out << ' ' << name;
  }
  out << "\nstates " << g.state_count << "\nstart " << g.start << "\naccept " << g.accept
      << '\n';
  for (auto const& e : g.edges) {
    out << "edge " << e.from << ' ' << g.alphabet.name(e.letter) << ' ' << e.to << '\n';
  }
  return out.str();
}

std::string format_automaton(InverseAutomaton const& m) {
  return format_graph(m.to_raw());
}

NamedMaps parse_maps(std::string_view text) {
  std::optional<std::size_t> size;
  NamedMaps                  out;
  for (auto const& line : lines_of(text)) {
    auto const keyword = line.tokens[0];
    if (keyword == "size") {
      expect_arity(line, 2);
      set_once(size, parse_number(line.tokens[1], line.number), line);
    } else if (keyword == "map") {
      if (!size) {
        throw ParseError("'map' before 'size'", line.number);
      }
      if (line.tokens.size() < 2) {
        throw ParseError("'map' needs a name", line.number);
      }
      std::string name(line.tokens[1]);
      for (auto const& [existing, f] : out.maps) {
        if (existing == name) {
          throw ParseError("duplicate map '" + name + "'", line.number);
        }
      }
      std::vector<std::pair<Point, Point>> pairs;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        auto const token = line.tokens[i];
        auto const arrow = token.find("->");
        if (arrow == std::string_view::npos) {
          throw ParseError("expected 'x->y', got '" + std::string(token) + "'", line.number);
        }
        auto const x = parse_number(token.substr(0, arrow), line.number);
        auto const y = parse_number(token.substr(arrow + 2), line.number);
        if (x >= *size || y >= *size) {
          throw ParseError("point out of range in '" + std::string(token) + "'", line.number);
        }
        pairs.emplace_back(static_cast<Point>(x), static_cast<Point>(y));
      }
      try {
        out.maps.emplace_back(std::move(name), PartialInjection::from_pairs(*size, pairs));
      } catch (Error const& e) {
        throw ParseError(e.what(), line.number);
      }
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line.number);
    }
  }
  if (!size) {
    throw ParseError("map file needs a 'size' line");
  }
  out.size = *size;
  return out;
}

std::string format_maps(NamedMaps const& maps) {
  std::ostringstream out;
  out << "size " << maps.size << '\n';
  for (auto const& [name, f] : maps.maps) {
    out << "map " << name;
    for (auto [x, y] : f.pairs()) {
      out << ' ' << x << "->" << y;
    }
    out << '\n';
  }
  return out.str();
}

GroupEncoding parse_encoding(std::string_view text) {
  std::vector<std::string> sources;
  std::vector<Word>        images;
  Alphabet const           ab = Alphabet::two_letter();
  for (auto const& line : lines_of(text)) {
    if (line.tokens[0] != "image" || line.tokens.size() < 3) {
      throw ParseError("expected 'image <letter> <word>'", line.number);
    }
    std::string name(line.tokens[1]);
    for (auto const& s : sources) {
      if (s == name) {
        throw ParseError("duplicate image for '" + name + "'", line.number);
      }
    }
    std::string word;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      word += std::string(line.tokens[i]) + ' ';
    }
    try {
      images.push_back(parse_word(ab, word));
    } catch (Error const& e) {
      throw ParseError(e.what(), line.number);
    }
    sources.push_back(std::move(name));
  }
  if (sources.empty()) {
    throw ParseError("encoding file lists no images");
  }
  try {
    return GroupEncoding(Alphabet(std::move(sources)), std::move(images));
  } catch (ParseError const&) {
    throw;
  } catch (Error const& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(std::filesystem::path const& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << contents;
}

}  // namespace groupcode::io
