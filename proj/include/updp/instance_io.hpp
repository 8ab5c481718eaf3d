#pragma once

#include <stdexcept>
#include <string>

#include "updp/drawing.hpp"

namespace updp {

// Line-oriented instance format, '#' starts a comment:
//   v <id> <x> <y>   vertex, coordinates integer or "p/q"
//   e <u> <v>        directed edge u->v
//   p <s> <t>        terminal pair; pair index = occurrence order
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Instance parse_instance(const std::string& text);

// Vertices and edges sorted ascending; pairs kept in pair-index order (the
// order is part of the instance semantics). parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);

Instance load_instance_file(const std::string& path);  // throws on I/O failure

bool instances_equal(const Instance& a, const Instance& b);

}  // namespace updp
