#pragma once

#include <string>
#include <vector>

#include "sq/rep.hpp"

namespace sq {

// Text serialization for module files: a `dims` line, then for every arrow
// of the drawn quiver a `map <arrow-index> <rows> <cols>` header followed by
// the matrix rows.  Matrices act against the drawn arrows (right-module
// convention): the map for arrow i->j carries the component at j to the
// component at i, so the stored representation lives over the reversed
// quiver.  Several modules are separated by `module` lines.
std::string serialize_modules(const Quiver& drawn, const std::vector<Representation>& mods);
std::vector<Representation> parse_modules(const Quiver& drawn, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sq
