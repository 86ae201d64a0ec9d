#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpokit/cpomap.hpp"
#include "cpokit/poset.hpp"

namespace cpokit {

// Poset text format:
//   poset <name>
//   elements: <label> <label> ...
//   bottom: <label>
//   covers: a<b a<c ...        (may be empty)
// '#' starts a comment line; tokens are whitespace-separated.
FinPoset parse_poset(std::istream& in);
FinPoset parse_poset_string(const std::string& text);
FinPoset load_poset_file(const std::string& path);
std::string format_poset(const FinPoset& p);

// Map text format:
//   map <name> : <src-poset-name> -> <dst-poset-name>
//   <src-label> -> <dst-label>    (one line per source element)
FinCpoMap parse_map(std::istream& in, std::span<const FinPoset> posets);
FinCpoMap parse_map_string(const std::string& text, std::span<const FinPoset> posets);
FinCpoMap load_map_file(const std::string& path, std::span<const FinPoset> posets);
std::string format_map(const FinCpoMap& f);

// Hasse diagram (transitive reduction) as a DOT digraph.
std::string emit_dot(const FinPoset& p);

}  // namespace cpokit
