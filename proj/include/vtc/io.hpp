#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "vtc/induction.hpp"

namespace vtc {

// Category documents:
//   {"name": "...", "base_parameter": "s", "families": ["virasoro-kp2", "virasoro-t"],
//    "bound": 12, "unit": true}
// One family selects that built-in, two form their Deligne product. "bound"
// restricts every index; "unit": false drops the unit object.
inline CategoryPtr category_from_json(const nlohmann::json& j) {
  try {
    auto fams = j.at("families").get<std::vector<std::string>>();
    CategoryPtr cat;
    if (fams.size() == 1) cat = builtin_category(fams[0]);
    else if (fams.size() == 2) cat = deligne(builtin_category(fams[0]), builtin_category(fams[1]));
    else throw ParseError("a category needs one or two families");
    std::string name = j.value("name", cat->name);
    if (j.contains("base_parameter") && j["base_parameter"].get<std::string>() != cat->base_parameter)
      throw ParseError("base_parameter '" + j["base_parameter"].get<std::string>() + "' does not match families (" +
                       cat->base_parameter + ")");
    if (j.contains("bound")) {
      auto b = j["bound"].get<std::int64_t>();
      if (b < 1) throw ParseError("bound must be >= 1");
      cat = restrict_bound(cat, b, name);
    } else {
      auto c = std::make_shared<CategorySpec>(*cat);
      c->name = name;
      cat = c;
    }
    if (!j.value("unit", true)) {
      auto c = std::make_shared<CategorySpec>(*cat);
      c->unit.reset();
      cat = c;
    }
    return cat;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed category document: ") + e.what());
  }
}

// Algebra documents:
//   {"name": "...", "base_category": "deligne(virasoro-kp2,virasoro-t)" | {category document},
//    "summand_rule": "(Lk(1,r) x Lt(1,r))"}
inline AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  try {
    AlgebraObject a;
    a.name = j.at("name").get<std::string>();
    const auto& bc = j.at("base_category");
    a.base = bc.is_string() ? builtin_category(bc.get<std::string>()) : category_from_json(bc);
    a.summand_rule = parse_template(j.at("summand_rule").get<std::string>());
    return make_algebra(std::move(a));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace vtc
