// vtc: tables of weights, fusion, monodromy, locality and direct limits.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vtc/dirlim/selftest.hpp"
#include "vtc/vtc.hpp"

namespace {

using Row = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string category;
  std::string category_file;
  std::string algebra;
  std::string algebra_file;
  std::int64_t bound = 12;
  std::optional<std::int64_t> witness_bound;
  std::int64_t truncate = 20;
  std::string format = "tsv";
  std::uint64_t seed = 0;
  std::uint64_t cases = 100;
  std::string sample;
  std::optional<std::int64_t> n, m, r, s;
  std::string x, y;
  std::string input;
};

void emit(const std::vector<Row>& rows, const std::vector<std::string>& columns, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << Row(rows).dump(2) << "\n";
    return;
  }
  std::cout << "#";
  for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "\t" : "") << columns[i];
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& v = row.at(columns[i]);
      std::cout << (i ? "\t" : "") << (v.is_null() ? "-" : v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << "\n";
  }
}

vtc::CategoryPtr load_category(const Config& cfg) {
  if (!cfg.category_file.empty()) return vtc::category_from_json(vtc::read_json_file(cfg.category_file));
  if (cfg.category.empty()) throw ConfigError("--category is required");
  return vtc::builtin_category(cfg.category);
}

vtc::AlgebraPtr load_algebra(const Config& cfg) {
  if (!cfg.algebra_file.empty()) return vtc::algebra_from_json(vtc::read_json_file(cfg.algebra_file));
  if (cfg.algebra.empty()) throw ConfigError("--algebra is required");
  return vtc::builtin_algebra(cfg.algebra);
}

// A label of the category from the string `text`, or from the index pair.
vtc::SimpleLabel category_label(const vtc::CategorySpec& cat, const std::string& text, std::optional<std::int64_t> a,
                                std::optional<std::int64_t> b, const char* what) {
  if (!text.empty()) return vtc::parse_label(text);
  if (!a) throw ConfigError(std::string("no label given for ") + what);
  auto sample = cat.labels(1);
  if (sample.empty() || sample[0].is_composite())
    throw ConfigError(std::string("category ") + cat.name + " needs a label string for " + what);
  return vtc::SimpleLabel::with_indices(sample[0].kind(), *a, b.value_or(1));
}

// Induction base from the string `text`, or the algebra's standard base (n, m).
vtc::SimpleLabel algebra_base(const vtc::AlgebraObject& alg, const std::string& text, std::optional<std::int64_t> a,
                              std::optional<std::int64_t> b, const char* what) {
  if (!text.empty()) return vtc::parse_label(text);
  if (!a) throw ConfigError(std::string("no base given for ") + what);
  if (!alg.standard_base) throw ConfigError("algebra " + alg.name + " needs a label string for " + what);
  return alg.standard_base(*a, b.value_or(1));
}

std::string var(const vtc::CategorySpec& cat) { return cat.base_parameter; }

int cmd_weights(const Config& cfg) {
  auto cat = load_category(cfg);
  std::vector<Row> rows;
  for (const auto& x : cat->labels(cfg.bound)) {
    auto tw = vtc::twist_exponent(*cat, x);
    rows.push_back({{"label", to_string(x)}, {"weight", to_string(tw.exponent, var(*cat))},
                    {"parity", to_string(tw.parity)}});
  }
  emit(rows, {"label", "weight", "parity"}, cfg);
  return 0;
}

int cmd_fuse(const Config& cfg) {
  std::vector<Row> rows;
  // With an algebra and no category: fusion of the induced modules.
  if (cfg.category.empty() && cfg.category_file.empty() && (!cfg.algebra.empty() || !cfg.algebra_file.empty())) {
    auto alg = load_algebra(cfg);
    auto b1 = algebra_base(*alg, cfg.x, cfg.n, cfg.m, "x");
    auto b2 = algebra_base(*alg, cfg.y, cfg.r, cfg.s, "y");
    for (const auto& [z, mult] : vtc::induced_fusion(alg, b1, b2).terms())
      rows.push_back({{"summand", to_string(z)}, {"multiplicity", mult}});
    emit(rows, {"summand", "multiplicity"}, cfg);
    return 0;
  }
  auto cat = load_category(cfg);
  auto x = category_label(*cat, cfg.x, cfg.n, cfg.m, "x");
  auto y = category_label(*cat, cfg.y, cfg.r, cfg.s, "y");
  for (const auto& [z, mult] : vtc::fusion(*cat, x, y).terms())
    rows.push_back({{"summand", to_string(z)}, {"multiplicity", mult}});
  emit(rows, {"summand", "multiplicity"}, cfg);
  return 0;
}

int cmd_monodromy(const Config& cfg) {
  auto cat = load_category(cfg);
  auto x = category_label(*cat, cfg.x, cfg.n, cfg.m, "x");
  auto y = category_label(*cat, cfg.y, cfg.r, cfg.s, "y");
  for (const auto* l : {&x, &y}) vtc::require_member(*cat, *l);
  std::vector<Row> rows;
  for (const auto& e : vtc::monodromy(*cat, x, y).entries)
    rows.push_back({{"summand", to_string(e.summand)},
                    {"exponent", to_string(e.exponent, var(*cat))},
                    {"status", to_string(e.status)},
                    {"phase", e.phase ? Row(to_string(*e.phase)) : Row(nullptr)}});
  emit(rows, {"summand", "exponent", "status", "phase"}, cfg);
  return 0;
}

std::vector<vtc::SimpleLabel> bases_for(const vtc::AlgebraObject& alg, const Config& cfg, const char* what) {
  if (!cfg.x.empty() || cfg.n) return {algebra_base(alg, cfg.x, cfg.n, cfg.m, what)};
  if (!alg.standard_base) throw ConfigError("algebra " + alg.name + " needs --x");
  std::vector<vtc::SimpleLabel> out;
  for (std::int64_t a = 1; a <= cfg.bound; ++a)
    for (std::int64_t b = 1; b <= (alg.standard_arity == 2 ? cfg.bound : 1); ++b) out.push_back(alg.standard_base(a, b));
  return out;
}

int cmd_locality(const Config& cfg) {
  auto alg = load_algebra(cfg);
  std::vector<Row> rows;
  for (const auto& base : bases_for(*alg, cfg, "locality")) {
    auto c = vtc::locality(alg, base, cfg.truncate);
    rows.push_back({{"base", to_string(base)},
                    {"verdict", to_string(c.verdict)},
                    {"family", c.family ? Row(vtc::to_factored_string(*c.family)) : Row(nullptr)},
                    {"witness", c.witness ? Row(*c.witness) : Row(nullptr)},
                    {"checked_up_to", c.checked_up_to ? Row(*c.checked_up_to) : Row(nullptr)}});
  }
  emit(rows, {"base", "verdict", "family", "witness", "checked_up_to"}, cfg);
  return 0;
}

int cmd_induce(const Config& cfg) {
  auto alg = load_algebra(cfg);
  auto mod = vtc::induce(alg, algebra_base(*alg, cfg.x, cfg.n, cfg.m, "induce"));
  std::vector<Row> rows;
  for (std::int64_t r = 1; r <= cfg.truncate; ++r) {
    auto res = mod.restriction(r);
    for (const auto& [z, mult] : res.terms())
      rows.push_back({{"r", r}, {"summand", to_string(z)}, {"multiplicity", mult},
                      {"weight", to_string(alg->base->weight_of(z), var(*alg->base))}});
  }
  emit(rows, {"r", "summand", "multiplicity", "weight"}, cfg);
  return 0;
}

int cmd_min_weight(const Config& cfg) {
  auto alg = load_algebra(cfg);
  vtc::Rat sample = cfg.sample.empty() ? vtc::default_sample() : vtc::parse_rat(cfg.sample);
  if (sample <= 0) throw ConfigError("--sample must be positive");
  std::vector<Row> rows;
  for (const auto& base : bases_for(*alg, cfg, "min-weight")) {
    auto mod = vtc::induce(alg, base);
    auto mw = vtc::min_weight_summand(mod, sample, cfg.truncate);
    rows.push_back({{"module", to_string(mod.label())},
                    {"r", mw.r},
                    {"summand", to_string(mw.summand)},
                    {"weight", to_string(mw.weight, var(*alg->base))}});
  }
  emit(rows, {"module", "r", "summand", "weight"}, cfg);
  return 0;
}

int cmd_frobenius(const Config& cfg) {
  auto alg = load_algebra(cfg);
  auto b1 = algebra_base(*alg, cfg.x, cfg.n, cfg.m, "the first base");
  auto b2 = algebra_base(*alg, cfg.y, cfg.r, cfg.s, "the second base");
  std::vector<Row> rows{{{"base1", to_string(b1)}, {"base2", to_string(b2)},
                         {"dim", vtc::frobenius_dim(alg, b1, b2)}}};
  emit(rows, {"base1", "base2", "dim"}, cfg);
  return 0;
}

int cmd_center(const Config& cfg) {
  auto cat = load_category(cfg);
  auto labels = vtc::mueger_scan(*cat, cfg.bound, cfg.witness_bound.value_or(cfg.bound), vtc::worker_count());
  std::vector<Row> rows;
  for (const auto& x : labels) rows.push_back({{"label", to_string(x)}});
  emit(rows, {"label"}, cfg);
  return 0;
}

int cmd_checklist(const Config& cfg) {
  auto cat = load_category(cfg);
  std::vector<Row> rows;
  for (const auto& item : vtc::checklist_report(*cat))
    rows.push_back({{"condition", item.number},
                    {"satisfied", item.satisfied},
                    {"statement", item.condition},
                    {"justification", item.justification}});
  emit(rows, {"condition", "satisfied", "statement", "justification"}, cfg);
  return 0;
}

int cmd_dirlim_selftest(const Config& cfg) {
  std::uint64_t passed = 0;
  std::vector<Row> failures;
  for (std::uint64_t k = 0; k < cfg.cases; ++k) {
    auto res = vtc::dirlim::run_selftest_case(cfg.seed + k);
    if (res.ok()) ++passed;
    for (const auto& f : res.failures) failures.push_back({{"seed", res.seed}, {"property", f}});
  }
  if (cfg.format == "json") {
    Row out{{"passed", passed}, {"cases", cfg.cases}, {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& f : failures) std::cout << "FAIL\t" << f["seed"].dump() << "\t" << f["property"].get<std::string>() << "\n";
    std::cout << passed << "/" << cfg.cases << " passed\n";
  }
  return passed == cfg.cases ? 0 : 1;
}

int cmd_dirlim_limit(const Config& cfg) {
  if (cfg.input.empty()) throw ConfigError("--input is required");
  auto sys = vtc::dirlim::system_from_json(vtc::read_json_file(cfg.input));
  auto lim = vtc::dirlim::direct_limit(sys);
  std::vector<Row> rows;
  for (const auto& b : lim.space.basis()) rows.push_back({{"basis", b.id}, {"weight", vtc::to_string(b.weight)}});
  emit(rows, {"basis", "weight"}, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fusion-category and direct-limit calculator"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--category", cfg.category, "virasoro-t, virasoro-kp2, kl-sl2, supervir, osp, deligne(a,b)");
  app.add_option("--category-file", cfg.category_file, "category JSON document");
  app.add_option("--algebra", cfg.algebra, "svir-ext or osp-ext");
  app.add_option("--algebra-file", cfg.algebra_file, "algebra JSON document");
  app.add_option("--bound", cfg.bound, "largest label index")->check(CLI::PositiveNumber);
  app.add_option("--witness-bound", cfg.witness_bound, "largest witness index (center)")->check(CLI::PositiveNumber);
  app.add_option("--truncate", cfg.truncate, "largest summand index r")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", cfg.seed);
  app.add_option("--cases", cfg.cases, "selftest cases");
  app.add_option("--sample", cfg.sample, "positive rational used to order weights");
  app.add_option("--n", cfg.n, "first index of the first label/base")->check(CLI::PositiveNumber);
  app.add_option("--m", cfg.m, "second index of the first label/base")->check(CLI::PositiveNumber);
  app.add_option("--r", cfg.r, "first index of the second label/base")->check(CLI::PositiveNumber);
  app.add_option("--s-index", cfg.s, "second index of the second label/base")->check(CLI::PositiveNumber);
  app.add_option("--x", cfg.x, "first label, e.g. 'S(2,2)' or '(Lk(2,1) x Lt(2,1))'");
  app.add_option("--y", cfg.y, "second label");
  app.add_option("--input", cfg.input, "direct system JSON (dirlim-limit)");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const std::vector<Command> commands = {
      {"weights", "conformal weight and parity of every label up to --bound", cmd_weights},
      {"fuse", "fusion product of two labels, or of two induced modules with --algebra", cmd_fuse},
      {"monodromy", "monodromy exponents on each summand of a product", cmd_monodromy},
      {"locality", "locality verdict of an induction base", cmd_locality},
      {"induce", "restriction of an induced module for r up to --truncate", cmd_induce},
      {"min-weight", "summand of lowest conformal weight in an induced module", cmd_min_weight},
      {"frobenius", "dim Hom between two induced modules", cmd_frobenius},
      {"center", "labels transparent against every witness", cmd_center},
      {"checklist", "tensor-category conditions and their justifications", cmd_checklist},
      {"dirlim-selftest", "randomized direct-limit property suite", cmd_dirlim_selftest},
      {"dirlim-limit", "direct limit of a system read from --input", cmd_dirlim_limit},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& c : commands)
      if (app.got_subcommand(c.name)) return c.run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vtc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vtc::InvalidLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vtc::ForeignLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vtc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
