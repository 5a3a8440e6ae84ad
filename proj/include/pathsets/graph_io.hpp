#pragma once

#include <iosfwd>
#include <string>

#include "pathsets/path_set.hpp"

namespace pathsets {

/// Parses the GraphFile text format:
///   alphabet: SYM...     (exactly once; declaration order is alphabet order)
///   vertices: NAME...    (exactly once; may list zero names)
///   initial: NAME        (exactly once; name omitted only for zero vertices)
///   edge: SRC SYM DST    (zero or more; duplicate triples rejected)
/// '#' begins a comment, blank lines are ignored, names are arbitrary
/// non-whitespace tokens. Throws ValidationError on malformed input.
Presentation parse_graph_file(std::istream& in);
Presentation parse_graph_file_text(const std::string& text);

/// Serializes a presentation in GraphFile form. Canonical path sets
/// round-trip byte-identically (vertex names are the canonical indices).
std::string print_graph_file(const Presentation& p);

/// DOT export with the initial vertex double-circled and edges labeled by
/// symbol names.
std::string to_dot(const Presentation& p);

} // namespace pathsets
