#pragma once

#include <json.hpp>

#include <string>

#include "vtc/dirlim/system.hpp"

namespace vtc::dirlim {

// {poset: {elements, leq}, spaces: {id: [[basis_id, weight]]}, maps: {"i<=j": [[entry]]}}
// with weights and entries as canonical rational strings.

inline nlohmann::json to_json(const DirectSystem& sys) {
  nlohmann::json j;
  j["poset"]["elements"] = sys.poset.elements();
  auto& leq = j["poset"]["leq"] = nlohmann::json::array();
  for (const auto& [a, b] : sys.poset.relation()) leq.push_back({a, b});
  auto& spaces = j["spaces"] = nlohmann::json::object();
  for (const auto& [id, W] : sys.spaces) {
    auto arr = nlohmann::json::array();
    for (const auto& b : W.basis()) arr.push_back({b.id, to_string(b.weight)});
    spaces[id] = std::move(arr);
  }
  auto& maps = j["maps"] = nlohmann::json::object();
  for (const auto& [key, f] : sys.maps) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
      auto row = nlohmann::json::array();
      for (std::size_t c = 0; c < f.matrix.cols(); ++c) row.push_back(to_string(f.matrix(r, c)));
      rows.push_back(std::move(row));
    }
    maps[key.first + "<=" + key.second] = std::move(rows);
  }
  return j;
}

/// Throws ParseError on malformed documents; the result is not validated.
inline DirectSystem system_from_json(const nlohmann::json& j) {
  try {
    DirectSystem sys;
    std::vector<std::string> elements = j.at("poset").at("elements").get<std::vector<std::string>>();
    std::set<std::pair<std::string, std::string>> leq;
    for (const auto& p : j.at("poset").at("leq")) leq.emplace(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    sys.poset = DirectedPoset(std::move(elements), std::move(leq));
    for (const auto& [id, arr] : j.at("spaces").items()) {
      std::vector<BasisVector> basis;
      for (const auto& b : arr) basis.push_back({b.at(0).get<std::string>(), parse_rat(b.at(1).get<std::string>())});
      sys.spaces.emplace(id, GradedSpace(std::move(basis)));
    }
    for (const auto& [key, rows] : j.at("maps").items()) {
      auto sep = key.find("<=");
      if (sep == std::string::npos) throw ParseError("map key '" + key + "' is not of the form i<=j");
      std::string a = key.substr(0, sep), b = key.substr(sep + 2);
      const GradedSpace& src = sys.space(a);
      const GradedSpace& dst = sys.space(b);
      Matrix m(rows.size(), rows.empty() ? src.dim() : rows.at(0).size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw ParseError("ragged matrix for map '" + key + "'");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rat(rows[r][c].get<std::string>());
      }
      sys.maps.emplace(std::pair{a, b}, GradeMap{src, dst, std::move(m)});
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed direct system JSON: ") + e.what());
  } catch (const UnknownElement& e) {
    throw ParseError(std::string("malformed direct system JSON: ") + e.what());
  }
}

}  // namespace vtc::dirlim
