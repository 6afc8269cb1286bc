#include "meshwork/json_io.hpp"

#include <fstream>
#include <sstream>

namespace meshwork {

ordered_json semigroup_to_json(const Semigroup& sg) {
  ordered_json j;
  if (!sg.name().empty()) j["name"] = sg.name();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < sg.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < sg.size(); ++k) row.push_back(sg.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

Semigroup semigroup_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("table"))
    throw ParseError(where, "expected an object with a \"table\" field");
  const auto& t = j["table"];
  if (!t.is_array() || t.empty())
    throw ParseError(where, "\"table\" must be a nonempty array of rows");
  std::vector<std::vector<long long>> table;
  for (const auto& row : t) {
    if (!row.is_array())
      throw ParseError(where, "\"table\" rows must be arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ParseError(where, "table entries must be integers");
      r.push_back(v.get<long long>());
    }
    table.push_back(std::move(r));
  }
  std::string name = j.value("name", std::string{});
  return Semigroup::validated(table.size(), table, name);
}

Semigroup load_semigroup(const std::string& path) {
  return semigroup_from_json(parse_json(read_file(path), path), path);
}

ordered_json subset_to_json(const Subset& s) {
  ordered_json j = ordered_json::array();
  for (std::size_t x : s.elements()) j.push_back(x);
  return j;
}

Subset subset_from_json(const Semigroup& sg, const ordered_json& j,
                        const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "a subset is an array of indices");
  Subset s(sg);
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<unsigned long long>() >= sg.size())
      throw ParseError(where, "subset element out of range");
    s.set(v.get<std::size_t>());
  }
  return s;
}

ordered_json collection_to_json(const Collection& c) {
  ordered_json sets = ordered_json::array();
  for (const Subset& m : c.members()) sets.push_back(subset_to_json(m));
  ordered_json j;
  j["sets"] = std::move(sets);
  return j;
}

Collection collection_from_json(const Semigroup& sg, const ordered_json& j,
                                const std::string& where) {
  const ordered_json* sets = nullptr;
  if (j.is_array()) {
    sets = &j;  // bare array of sets is accepted inline
  } else if (j.is_object() && j.contains("sets")) {
    sets = &j["sets"];
  } else {
    throw ParseError(where, "expected {\"sets\": [...]} or a bare array");
  }
  if (!sets->is_array())
    throw ParseError(where, "\"sets\" must be an array of subsets");
  std::vector<Subset> ms;
  for (const auto& s : *sets) ms.push_back(subset_from_json(sg, s, where));
  return Collection(sg, std::move(ms));
}

ordered_json flags_to_json(const ClassFlags& f) {
  ordered_json j;
  j["proper"] = f.proper;
  j["stack"] = f.stack;
  j["filter"] = f.filter;
  j["grill"] = f.grill;
  j["ultrafilter"] = f.ultrafilter;
  j["product_filter"] = f.product_filter;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json(const std::string& text, const std::string& where) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace meshwork
