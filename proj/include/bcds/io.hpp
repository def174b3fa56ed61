#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "bcds/graph.hpp"
#include "bcds/greedy.hpp"

namespace bcds {

/// Parses the text instance format: a `p <n> <m>` header, then m lines
/// `<u> <v>` with 0-based ids. Blank lines and `#` comments are skipped.
/// Syntax errors throw InputError with a line number. Connectivity is not
/// checked here.
Graph parse_instance(std::string_view text);

/// Reads and parses a file; throws InputError if it cannot be opened.
Graph read_instance_file(const std::string& path);

/// Canonical serialisation: header, then edges in lexicographic order, one
/// per line, each line ending in '\n'. parse_instance inverts it exactly.
std::string format_instance(const Graph& g);

/// `{"n": int, "sets": [[int]]}`.
SetSystem parse_set_system_json(std::string_view text);
std::string format_set_system_json(const SetSystem& sys);

}  // namespace bcds
