#ifndef GROUPCODE_IO_HPP
#define GROUPCODE_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupcode/automaton.hpp"
#include "groupcode/encoding.hpp"
#include "groupcode/partial_injection.hpp"

namespace groupcode::io {

// Automaton files are line based; `#` starts a comment:
//
//   alphabet a b
//   states 3
//   start 0
//   accept 0
//   edge 0 a 1
//
// Only positive-letter edges are listed. A graph file describes an inverse
// automaton exactly when it is deterministic.

RawGraph    parse_graph(std::string_view text);
std::string format_graph(RawGraph const& g);
std::string format_automaton(InverseAutomaton const& m);

//! Throws ParseError naming the file if the graph is not deterministic.
InverseAutomaton parse_automaton(std::string_view text);

// Map files:
//
//   size 4
//   map f_init 0->1 2->2
//
// Points outside the domain are omitted.

struct NamedMaps {
  std::size_t                                          size = 0;
  std::vector<std::pair<std::string, PartialInjection>> maps;
};

NamedMaps   parse_maps(std::string_view text);
std::string format_maps(NamedMaps const& maps);

// Encoding files list one `image <source letter> <word over a, b>` per
// line; the source alphabet is taken in order of appearance.
GroupEncoding parse_encoding(std::string_view text);

std::string read_file(std::filesystem::path const& path);
void        write_file(std::filesystem::path const& path, std::string_view contents);

}  // namespace groupcode::io

#endif  // GROUPCODE_IO_HPP
