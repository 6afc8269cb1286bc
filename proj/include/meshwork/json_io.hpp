#pragma once

#include <string>

#include <json.hpp>

#include "meshwork/collection.hpp"

namespace meshwork {

using ordered_json = nlohmann::ordered_json;

/// Cayley table files: {"name": string?, "elements": [string,...]?,
/// "table": [[int,...],...]}, row-major, table[i][j] = index of i*j.
ordered_json semigroup_to_json(const Semigroup& sg);
Semigroup semigroup_from_json(const ordered_json& j,
                              const std::string& where = "<json>");
Semigroup load_semigroup(const std::string& path);

/// Subsets: array of element indices, e.g. [0,2].
ordered_json subset_to_json(const Subset& s);
Subset subset_from_json(const Semigroup& sg, const ordered_json& j,
                        const std::string& where = "<json>");

/// Collections: {"sets": [[int,...],...]}; an empty inner array is the
/// empty set as a member, "sets": [] is the empty collection.
ordered_json collection_to_json(const Collection& c);
Collection collection_from_json(const Semigroup& sg, const ordered_json& j,
                                const std::string& where = "<json>");

ordered_json flags_to_json(const ClassFlags& f);

std::string read_file(const std::string& path);
ordered_json parse_json(const std::string& text, const std::string& where);

}  // namespace meshwork
