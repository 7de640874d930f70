#pragma once

#include <iosfwd>
#include <string>

#include "glsg/cayley_table.hpp"

namespace glsg {

/// Text format: line 1 holds n, lines 2..n+1 hold n space-separated element
/// indices in 1..n. Reading is whitespace-tolerant; writing is bit-exact
/// (single spaces, one trailing newline per line).
CayleyTable read_table_text(std::istream& in);
void write_table_text(std::ostream& out, const CayleyTable& t);

/// JSON format: {"n": int, "table": [[int]]}.
CayleyTable read_table_json(std::istream& in);
void write_table_json(std::ostream& out, const CayleyTable& t);

/// Sniffs the format from the first non-whitespace character ('{' = JSON).
CayleyTable read_table_auto(std::istream& in);

std::string table_to_text(const CayleyTable& t);

}  // namespace glsg
