#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "vtc/catdata/category.hpp"

namespace vtc {

namespace detail {
inline void require_all(const CategorySpec& cat, const FusionElement& a) {
  for (const auto& [x, m] : a.terms())
    if (!cat.contains(x)) throw CategoryMismatch(to_string(x) + " does not belong to " + cat.name);
}
}  // namespace detail

/// Bilinear extension of fusion.
inline FusionElement ring_mul(const CategorySpec& cat, const FusionElement& a, const FusionElement& b) {
  detail::require_all(cat, a);
  detail::require_all(cat, b);
  FusionElement out;
  for (const auto& [x, mx] : a.terms())
    for (const auto& [y, my] : b.terms()) fuse_into(out, x, y, mx * my);
  return out;
}

/// dim Hom(a, b) in the semisimple setting.
inline std::uint64_t hom_dim(const CategorySpec& cat, const FusionElement& a, const FusionElement& b) {
  detail::require_all(cat, a);
  detail::require_all(cat, b);
  std::uint64_t d = 0;
  for (const auto& [x, m] : a.terms()) d += m * b.multiplicity(x);
  return d;
}

// ---------------------------------------------------------------------------
// Monodromy from the balancing equation: on a summand z of x⊠y the double
// braiding is e^{2πi(h_z - h_x - h_y)}.

enum class ExponentStatus { Integer, NonIntegerConstant, ParameterDependent };

inline std::string to_string(ExponentStatus s) {
  switch (s) {
    case ExponentStatus::Integer: return "integer";
    case ExponentStatus::NonIntegerConstant: return "non-integer-constant";
    case ExponentStatus::ParameterDependent: return "parameter-dependent";
  }
  return "?";
}

inline ExponentStatus parse_exponent_status(const std::string& s) {
  if (s == "integer") return ExponentStatus::Integer;
  if (s == "non-integer-constant") return ExponentStatus::NonIntegerConstant;
  if (s == "parameter-dependent") return ExponentStatus::ParameterDependent;
  throw ParseError("unknown exponent status '" + s + "'");
}

inline ExponentStatus classify_exponent(const RatFunc& e) {
  auto c = as_constant(e);
  if (!c) return ExponentStatus::ParameterDependent;
  return is_integer(*c) ? ExponentStatus::Integer : ExponentStatus::NonIntegerConstant;
}

struct MonodromyEntry {
  SimpleLabel summand;
  RatFunc exponent;
  ExponentStatus status;
  std::optional<Phase> phase;  // set iff the exponent is constant

  friend bool operator==(const MonodromyEntry&, const MonodromyEntry&) = default;
};

inline MonodromyEntry make_monodromy_entry(SimpleLabel z, RatFunc e) {
  auto c = as_constant(e);
  ExponentStatus st = classify_exponent(e);
  std::optional<Phase> ph;
  if (c) ph = Phase(*c);
  return {std::move(z), std::move(e), st, ph};
}

struct MonodromyReport {
  std::vector<MonodromyEntry> entries;  // in summand order

  bool trivial() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const MonodromyEntry& e) { return e.status == ExponentStatus::Integer; });
  }
  friend bool operator==(const MonodromyReport&, const MonodromyReport&) = default;
};

inline MonodromyReport monodromy(const CategorySpec& cat, const SimpleLabel& x, const SimpleLabel& y) {
  if (!cat.contains(x) || !cat.contains(y))
    throw CategoryMismatch("monodromy of " + to_string(x) + " and " + to_string(y) + " outside " + cat.name);
  RatFunc hx = cat.weight_of(x), hy = cat.weight_of(y);
  MonodromyReport rep;
  for (const auto& [z, m] : fuse_labels(x, y).terms())
    rep.entries.push_back(make_monodromy_entry(z, cat.weight_of(z) - hx - hy));
  return rep;
}

inline nlohmann::json to_json(const MonodromyReport& rep, const std::string& var) {
  auto arr = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    nlohmann::json j;
    j["summand"] = to_string(e.summand);
    j["exponent"] = to_string(e.exponent, var);
    j["status"] = to_string(e.status);
    j["phase"] = e.phase ? nlohmann::json(to_string(*e.phase)) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Reads the array written by to_json; status and phase are re-derived and
/// checked against the stored values.
inline MonodromyReport monodromy_report_from_json(const nlohmann::json& j, const std::string& var) {
  try {
    MonodromyReport rep;
    for (const auto& item : j) {
      MonodromyEntry e = make_monodromy_entry(parse_label(item.at("summand").get<std::string>()),
                                              parse_ratfunc(item.at("exponent").get<std::string>(), var));
      if (parse_exponent_status(item.at("status").get<std::string>()) != e.status)
        throw ParseError("status does not match exponent");
      const auto& ph = item.at("phase");
      if (ph.is_null() != !e.phase || (e.phase && !(Phase(parse_rat(ph.get<std::string>())) == *e.phase)))
        throw ParseError("phase does not match exponent");
      rep.entries.push_back(std::move(e));
    }
    return rep;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed monodromy report: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------
// Transparency and the Müger center.

struct TransparencyCertificate {
  SimpleLabel witness;
  SimpleLabel summand;
  RatFunc exponent;
  ExponentStatus status;
};

struct TransparencyResult {
  bool transparent;
  std::optional<TransparencyCertificate> certificate;  // first failure in witness order
};

/// Transparent iff every monodromy exponent against every witness is an
/// integer constant. Witnesses outside the category are skipped.
inline TransparencyResult is_transparent(const CategorySpec& cat, const SimpleLabel& x,
                                         const std::vector<SimpleLabel>& witnesses) {
  if (!cat.contains(x)) return {false, std::nullopt};
  RatFunc hx = cat.weight_of(x);
  for (const auto& w : witnesses) {
    if (!cat.contains(w)) continue;
    RatFunc hw = cat.weight_of(w);
    for (const auto& [z, m] : fuse_labels(x, w).terms()) {
      RatFunc e = cat.weight_of(z) - hx - hw;
      ExponentStatus st = classify_exponent(e);
      if (st != ExponentStatus::Integer) return {false, TransparencyCertificate{w, z, e, st}};
    }
  }
  return {true, std::nullopt};
}

/// Worker count: hardware concurrency capped by $VTC_THREADS.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VTC_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, unsigned(cap));
  }
  return n;
}

/// Labels with indices <= index_bound that are transparent against every
/// label with indices <= witness_bound, in sorted order.
inline std::vector<SimpleLabel> mueger_scan(const CategorySpec& cat, std::int64_t index_bound,
                                            std::int64_t witness_bound, unsigned threads = 1) {
  if (index_bound < 1 || witness_bound < 1) throw std::invalid_argument("scan bounds must be >= 1");
  std::vector<SimpleLabel> candidates = cat.labels(index_bound);
  std::vector<SimpleLabel> witnesses = cat.labels(witness_bound);
  std::vector<char> keep(candidates.size(), 0);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < candidates.size(); i += stride)
      keep[i] = is_transparent(cat, candidates[i], witnesses).transparent;
  };
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(candidates.size())));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  std::vector<SimpleLabel> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vtc
