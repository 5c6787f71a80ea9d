#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace minkpot::cli {

using nlohmann::json;

namespace {

std::string fmt_double(double v, const char* spec = "%.3e") {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Polynomial parse_table(const std::string& label, int arity, const json& table) {
  if (!table.is_object()) throw ConfigError("slot " + label + ": expected a coefficient table");
  Polynomial p;
  p.arity = arity;
  for (const auto& [key, coef] : table.items()) {
    if (!coef.is_number()) throw ConfigError("slot " + label + ": coefficient of '" + key + "' is not a number");
    Polynomial::Term t;
    std::stringstream ss(key);
    std::string part;
    int k = 0;
    while (std::getline(ss, part, ',')) {
      if (k >= arity) throw ConfigError("slot " + label + ": exponent tuple '" + key + "' longer than arity " +
                                        std::to_string(arity));
      try {
        std::size_t used = 0;
        const int e = std::stoi(part, &used);
        if (used != part.size() || e < 0) throw std::invalid_argument(part);
        t.exps[static_cast<std::size_t>(k)] = e;
      } catch (const std::logic_error&) {
        throw ConfigError("slot " + label + ": bad exponent '" + part + "' in '" + key + "'");
      }
      ++k;
    }
    if (k != arity)
      throw ConfigError("slot " + label + ": exponent tuple '" + key + "' needs " + std::to_string(arity) +
                        " entries");
    t.coef = coef.get<double>();
    p.terms.push_back(t);
  }
  return p;
}

Polynomial constant_poly(int arity, double c) {
  Polynomial p;
  p.arity = arity;
  if (c != 0.0) p.terms.push_back({{0, 0, 0}, c});
  return p;
}

SlotSet example_slots(const ClassEntry& e, const ParamMap& params) {
  const std::string id = e.id.str();
  if (id == "C4.16") return presets::c416_example_slots();
  if (id != "P3.19") throw ConfigError("no \"example\" slot preset for " + id);
  // C1 = C2 = C3 = 0, C4 = phi(t) = t.
  SlotSet s;
  for (const auto& spec : e.active_slots(params)) {
    Polynomial p = constant_poly(spec.arity, 0.0);
    if (spec.label == "C4") p.terms.push_back({{1, 0, 0}, 1.0});
    s.emplace(spec.label, polynomial_slot(spec.label, p));
  }
  return s;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["class_id"] = r.class_id;
  j["dim"] = r.dim;
  j["n_points"] = r.n_points;
  j["max_residual"] = r.max_residual;
  json gens = json::array();
  for (const auto& g : r.per_generator) gens.push_back({{"label", g.label}, {"max_residual", g.max_residual}});
  j["per_generator"] = gens;
  j["closedness_max"] = r.closedness_max;
  j["detected_dim"] = r.detected_dim ? json(*r.detected_dim) : json(nullptr);
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["status"] = r.status;
  j["note"] = r.note;
  return j;
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ConfigError("unknown format '" + s + "'");
}

bool counts_as_failure(const VerificationReport& r) { return r.status != "NOTE" && !r.pass; }

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (counts_as_failure(r)) return kFailed;
  return kOk;
}

VerifyOptions options_for(std::uint64_t seed, int points, double tol) {
  VerifyOptions o;
  o.seed = seed;
  o.points = points;
  o.tol = tol;
  return o;
}

// --- list ---

std::optional<ClassKind> parse_kind(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "P" || s == "p") return ClassKind::Potential;
  if (s == "C" || s == "c") return ClassKind::Maxwell;
  throw ConfigError("unknown kind '" + s + "', expected P or C");
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string slot_text(const ClassEntry& e) {
  std::vector<std::string> parts;
  for (const auto& s : e.slots) parts.push_back(s.label + "/" + std::to_string(s.arity));
  return join(parts, " ");
}

void write_listing(std::ostream& out, const std::vector<const ClassEntry*>& rows, Format format) {
  if (format == Format::Json) {
    for (const auto* e : rows) {
      json slots = json::array();
      for (const auto& s : e->slots) slots.push_back({{"label", s.label}, {"arity", s.arity}, {"args", s.args}});
      json j = {{"class_id", e->id.str()}, {"dim", e->dim()},       {"generators", e->generator_labels},
                {"constraints", e->constraint_text()},              {"slots", slots},
                {"empty", e->empty},         {"summary", e->summary}};
      out << j.dump() << '\n';
    }
    return;
  }
  if (format == Format::Csv) {
    out << "class,dim,generators,constraints,slots,empty,summary\n";
    auto q = [](const std::string& s) {
      std::string r = "\"";
      for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
      return r + "\"";
    };
    for (const auto* e : rows)
      out << e->id.str() << ',' << e->dim() << ',' << q(join(e->generator_labels, "; ")) << ','
          << q(e->constraint_text()) << ',' << q(slot_text(*e)) << ',' << (e->empty ? "true" : "false") << ','
          << q(e->summary) << '\n';
    return;
  }
  for (const auto* e : rows) {
    out << e->id.str() << "  dim " << e->dim() << "  [" << join(e->generator_labels) << "]";
    if (const auto c = e->constraint_text(); !c.empty()) out << "  {" << c << "}";
    if (!e->slots.empty()) out << "  slots " << slot_text(*e);
    if (e->empty) out << "  EMPTY";
    out << "  -- " << e->summary << '\n';
  }
}

// --- detect ---

void write_detection(std::ostream& out, const ClassEntry& e, const ParamMap& params, const SymmetryBasis& s,
                     Format format) {
  const auto gens = generators_of(e, params);
  std::vector<std::string> contained;
  bool all = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const bool in = projection_residual(s, gens[k]) <= 1e-6;
    all = all && in;
    if (in) contained.push_back(k < e.generator_labels.size() ? e.generator_labels[k] : label(gens[k]));
  }
  if (format == Format::Json) {
    json basis = json::array();
    for (const auto& g : s.basis) basis.push_back(g.coefficients());
    json labels = json::array();
    for (auto l : kBasisLabels) labels.push_back(std::string(l));
    json j = {{"class_id", e.id.str()},
              {"dim", s.dim},
              {"class_dim", e.dim()},
              {"contains_class_algebra", all},
              {"basis_labels", labels},
              {"basis", basis},
              {"singular_values", s.singular_values}};
    out << j.dump() << '\n';
    return;
  }
  out << "class " << e.id.str() << '\n';
  out << "dim = " << s.dim << '\n';
  if (all) out << "dim ≥ " << e.dim() << "; contains " << join(contained) << '\n';
  else out << "class generators not all contained (" << contained.size() << " of " << gens.size() << ")\n";
  out << "basis (";
  for (std::size_t k = 0; k < 10; ++k) out << (k ? " " : "") << kBasisLabels[k];
  out << ")\n";
  for (const auto& g : s.basis) {
    out << " ";
    for (double c : g.coefficients()) out << ' ' << fmt_double(std::fabs(c) < 1e-14 ? 0.0 : c, "%+.6f");
    out << '\n';
  }
  out << "singular values\n ";
  for (double v : s.singular_values) out << ' ' << fmt_double(v);
  out << '\n';
}

} // namespace

// --- config ---

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  bool have_class = false;
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "class") {
        cfg.class_id = v.get<std::string>();
        (void)ClassId::parse(cfg.class_id);
        have_class = true;
      } else if (key == "params") {
        if (!v.is_object()) throw ConfigError("params must be an object");
        for (const auto& [name, value] : v.items()) {
          if (!value.is_number()) throw ConfigError("parameter '" + name + "' is not a number");
          cfg.params[name] = value.get<double>();
        }
      } else if (key == "slots") {
        if (v.is_string()) {
          if (v.get<std::string>() != "example") throw ConfigError("unknown slot preset '" + v.get<std::string>() + "'");
          cfg.example_slots = true;
        } else if (!v.is_object()) {
          throw ConfigError("slots must be \"example\" or an object of coefficient tables");
        }
      } else if (key == "points") {
        if (!v.is_number_integer() || v.get<long long>() < 1) throw ConfigError("points must be a positive integer");
        cfg.points = v.get<int>();
      } else if (key == "seed") {
        if (!v.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "tol") {
        if (!v.is_number() || !(v.get<double>() > 0.0)) throw ConfigError("tol must be a positive number");
        cfg.tol = v.get<double>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("bad config value: ") + ex.what());
  }
  if (!have_class) throw ConfigError("config is missing the class key");
  // Slot tables need the resolved class for arities.
  if (doc.contains("slots") && doc["slots"].is_object()) {
    const auto r = resolve_class(cfg.class_id, cfg.params);
    SlotSet slots;
    const auto active = r.entry->active_slots(r.params);
    for (const auto& [label, table] : doc["slots"].items()) {
      auto it = std::find_if(active.begin(), active.end(), [&](const SlotSpec& s) { return s.label == label; });
      if (it == active.end()) throw ConfigError("unknown slot '" + label + "' for " + r.entry->id.str());
      slots.emplace(label, polynomial_slot(label, parse_table(label, it->arity, table)));
    }
    for (const auto& s : active)
      if (!slots.count(s.label)) throw ConfigError("missing slot '" + s.label + "' for " + r.entry->id.str());
    cfg.slots = std::move(slots);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Instance make_instance(const RunConfig& cfg) {
  const auto r = resolve_class(cfg.class_id, cfg.params);
  Instance inst{r.entry, r.params, {}};
  if (r.entry->empty) throw EmptyClass(r.entry->id.str() + " is empty");
  validate_params(*r.entry, r.params);
  if (cfg.example_slots) {
    inst.slots = example_slots(*r.entry, r.params);
  } else if (cfg.slots) {
    inst.slots = *cfg.slots;
  } else {
    std::mt19937_64 rng(class_seed(cfg.seed, r.entry->id.str()));
    inst.slots = default_slots(*r.entry, r.params, rng, SlotFamily::Polynomial);
  }
  return inst;
}

// --- reports ---

std::string report_json_line(const VerificationReport& r) { return report_to_json(r).dump(); }

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format format) {
  if (format == Format::Json) {
    for (const auto& r : reports) out << report_json_line(r) << '\n';
    return;
  }
  if (format == Format::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports)
      out << r.class_id << ',' << r.dim << ',' << r.n_points << ',' << fmt_double(r.max_residual, "%.17g") << ','
          << fmt_double(r.closedness_max, "%.17g") << ','
          << (r.detected_dim ? std::to_string(*r.detected_dim) : std::string()) << ','
          << (r.pass ? "true" : "false") << ',' << r.seed << '\n';
    return;
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-30s %4s %7s %12s %12s %5s  %-12s\n", "class", "dim", "points", "residual",
                "closedness", "det", "status");
  out << line;
  int passed = 0, failed = 0, other = 0;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-30s %4d %7d %12s %12s %5s  %-12s", r.class_id.c_str(), r.dim, r.n_points,
                  fmt_double(r.max_residual).c_str(), fmt_double(r.closedness_max).c_str(),
                  r.detected_dim ? std::to_string(*r.detected_dim).c_str() : "-", r.status.c_str());
    out << line;
    if (!r.note.empty()) out << "  " << r.note;
    out << '\n';
    if (r.status == "PASS") ++passed;
    else if (counts_as_failure(r)) ++failed;
    else ++other;
  }
  out << passed << " passed, " << failed << " failed, " << other << " other\n";
}

// --- entry point ---

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincaré-invariant potentials and Maxwell fields in Minkowski space", "minkpot"};
  app.require_subcommand(1);

  std::string format_text = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* list = app.add_subcommand("list", "List catalog classes");
  std::string kind_text;
  int dim_filter = 0;
  list->add_option("--kind", kind_text, "P (potentials) or C (Maxwell fields)");
  list->add_option("--dim", dim_filter, "Group dimension 1..6");
  add_format(list);

  std::uint64_t seed = 42;
  int points = 100;
  double tol = kVerifyTolerance;
  std::vector<std::string> configs;
  std::string class_text;

  auto* verify = app.add_subcommand("verify", "Check invariance and closedness");
  bool all = false;
  verify->add_flag("--all", all, "Verify the whole registry with default slots");
  verify->add_option("--class", class_text, "Verify one class with random draws");
  verify->add_option("--config", configs, "RunConfig JSON file (repeatable)");
  verify->add_option("--seed", seed, "Run seed");
  verify->add_option("--points", points, "Points per draw")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  add_format(verify);

  auto* detect = app.add_subcommand("detect", "Detect the symmetry algebra of one instance");
  std::string detect_config;
  detect->add_option("--config", detect_config, "RunConfig JSON file")->required();
  add_format(detect);

  auto* appendix = app.add_subcommand("appendix", "Worked examples and Maxwell class checks");
  appendix->add_option("--seed", seed, "Run seed");
  add_format(appendix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Format format = parse_format(format_text);

    if (list->parsed()) {
      const auto kind = parse_kind(kind_text);
      std::optional<int> dim;
      if (list->count("--dim")) {
        if (dim_filter < 1 || dim_filter > 6) throw ConfigError("dimension out of range 1..6");
        dim = dim_filter;
      }
      write_listing(out, list_classes(kind, dim), format);
      return kOk;
    }

    if (verify->parsed()) {
      const int modes = int(all) + int(!class_text.empty()) + int(!configs.empty());
      if (modes != 1) throw ConfigError("verify needs exactly one of --all, --class, --config");
      std::vector<VerificationReport> reports;
      if (all) {
        reports = verify_all(options_for(seed, points, tol));
      } else if (!class_text.empty()) {
        const auto r = resolve_class(class_text, {});
        reports.push_back(verify_class(*r.entry, options_for(seed, points, tol)));
      } else {
        for (const auto& path : configs) {
          const RunConfig cfg = load_config(path);
          const auto r = resolve_class(cfg.class_id, cfg.params);
          if (r.entry->empty) {
            VerificationReport rep;
            rep.class_id = r.entry->id.str();
            rep.dim = r.entry->dim();
            rep.seed = cfg.seed;
            rep.status = "SKIP(EMPTY)";
            rep.pass = true;
            reports.push_back(rep);
            continue;
          }
          const Instance inst = make_instance(cfg);
          reports.push_back(
              verify_instance(*inst.entry, inst.params, inst.slots, options_for(cfg.seed, cfg.points, cfg.tol)));
        }
      }
      write_reports(out, reports, format);
      return exit_for(reports);
    }

    if (detect->parsed()) {
      const RunConfig cfg = load_config(detect_config);
      const Instance inst = make_instance(cfg);
      const auto points_for = sample_domain(*inst.entry, inst.params, std::min(cfg.points, kDetectionPoints),
                                            class_seed(cfg.seed, inst.entry->id.str()));
      const SymmetryBasis s =
          inst.entry->id.kind == ClassKind::Maxwell
              ? detect_symmetry_algebra(instantiate_maxwell(*inst.entry, inst.params, inst.slots), points_for)
              : detect_symmetry_algebra(instantiate_potential(*inst.entry, inst.params, inst.slots), points_for);
      write_detection(out, *inst.entry, inst.params, s, format);
      return kOk;
    }

    if (appendix->parsed()) {
      const auto reports = appendix_reports(seed);
      write_reports(out, reports, format);
      return exit_for(reports);
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace minkpot::cli
