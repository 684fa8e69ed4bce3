// grouplab command line: catalog inspection, property tables, theorem suites.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grouplab/grouplab.hpp"

namespace {

using namespace grouplab;

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::optional<std::string> catalog;
  std::size_t jobs = 1;
  std::size_t max_group_order = 2000;
  std::size_t max_lattice_order = 400;
  std::size_t max_ccp_order = 100;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;  // commas inside has-supplement-in(...) and {..} do not split
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_or_print(const ordered_json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json(j, out);
  }
}

HarnessConfig harness_config(const Options& o, const std::string& catalog_version) {
  HarnessConfig cfg;
  cfg.lattice.max_order = o.max_lattice_order;
  cfg.embedding.max_ccp_order = o.max_ccp_order;
  cfg.jobs = o.jobs;
  cfg.catalog_version = catalog_version;
  return cfg;
}

std::pair<std::vector<CatalogEntry>, std::string> load(const Options& o) {
  return load_catalog(o.catalog, GroupLimits{o.max_group_order});
}

const CatalogEntry& require_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  const CatalogEntry* e = find_entry(catalog, name);
  if (!e) throw ParseError("no group named '" + name + "' in the catalog");
  return *e;
}

int cmd_catalog_list(const Options& o) {
  const auto [catalog, version] = load(o);
  std::cout << "# catalog " << version << '\n';
  for (const auto& e : catalog) {
    std::cout << e.name << "\torder " << e.group.order() << "\tdegree " << e.group.degree() << '\n';
  }
  return kOk;
}

int cmd_structure(const Options& o, const std::string& name) {
  const auto [catalog, version] = load(o);
  const CatalogEntry& entry = require_entry(catalog, name);
  const SubgroupLattice lat(entry.group, LatticeLimits{o.max_lattice_order});

  ordered_json j;
  j["group"] = entry.name;
  j["order"] = entry.group.order();
  j["subgroups"] = lat.size();
  ordered_json normals = ordered_json::array();
  for (SubgroupId n : lat.normals()) normals.push_back(subgroup_json(lat, n));
  j["normal_subgroups"] = std::move(normals);
  ordered_json cf_orders = ordered_json::array();
  const auto series = chief_series(lat);
  for (std::size_t i = 1; i < series.size(); ++i) cf_orders.push_back(lat.order(series[i]) / lat.order(series[i - 1]));
  j["chief_factor_orders"] = std::move(cf_orders);
  j["frattini"] = subgroup_json(lat, frattini(lat));
  j["fitting"] = subgroup_json(lat, fitting(lat));
  j["generalized_fitting"] = subgroup_json(lat, generalized_fitting(lat));
  j["hypercentre_U"] = subgroup_json(lat, hypercentre(lat, FormationId::U));
  ordered_json sylow = ordered_json::object();
  for (auto p : PrimeSet::of(entry.group.order())) {
    sylow[std::to_string(p)] = sylow_subgroups(lat, p).size();
  }
  j["sylow_counts"] = std::move(sylow);
  const SubgroupId g = lat.whole();
  ordered_json classes;
  classes["abelian"] = is_abelian(lat, g);
  classes["cyclic"] = is_cyclic(lat, g);
  classes["nilpotent"] = is_nilpotent(lat, g);
  classes["supersoluble"] = is_supersoluble(lat, g);
  classes["soluble"] = is_soluble(lat, g);
  classes["quasinilpotent"] = is_quasinilpotent(lat, g);
  j["classes"] = std::move(classes);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct PropertyRequest {
  std::string label;
  std::optional<PropertyId> id;
  std::optional<ClassSpec> cls;  // for has-supplement-in(<class>)
};

PropertyRequest parse_property_request(const std::string& text) {
  constexpr std::string_view prefix = "has-supplement-in(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const auto inner = std::string_view(text).substr(prefix.size(), text.size() - prefix.size() - 1);
    return {text, std::nullopt, parse_class_spec(inner)};
  }
  if (auto id = parse_property(text); id && *id != PropertyId::has_supplement_in) return {text, id, std::nullopt};
  throw ParseError("unknown property '" + text + "'");
}

std::vector<SubgroupId> selected_subgroups(const SubgroupLattice& lat, const std::string& spec) {
  std::vector<SubgroupId> out;
  if (spec.empty() || spec == "all") {
    for (SubgroupId h = 0; h < lat.size(); ++h) out.push_back(h);
    return out;
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("--subgroup must be a JSON array of image arrays: ") + e.what());
  }
  if (!parsed.is_array()) throw ParseError("--subgroup must be a JSON array of image arrays");
  std::vector<Permutation> gens;
  try {
    for (const auto& row : parsed) gens.emplace_back(row.get<std::vector<Point>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("--subgroup: ") + e.what());
  }
  out.push_back(lat.id_of(generate_by_permutations(lat.group(), gens)));
  return out;
}

int cmd_props(const Options& o, const std::string& name, const std::string& subgroup, const std::string& properties,
              const std::string& out) {
  std::vector<PropertyRequest> requests;
  for (const auto& p : split_list(properties)) requests.push_back(parse_property_request(p));
  if (requests.empty()) throw ParseError("--properties is empty");

  const auto [catalog, version] = load(o);
  const CatalogEntry& entry = require_entry(catalog, name);
  const SubgroupLattice lat(entry.group, LatticeLimits{o.max_lattice_order});
  const EmbeddingLimits limits{o.max_ccp_order};

  ordered_json rows = ordered_json::array();
  for (SubgroupId h : selected_subgroups(lat, subgroup)) {
    for (const auto& req : requests) {
      const PropertyVerdict v = req.cls ? has_supplement_in_class(lat, h, *req.cls) : check_classical(lat, h, *req.id, limits);
      ordered_json row;
      row["subgroup"] = subgroup_json(lat, h);
      row["property"] = req.label;
      row["holds"] = v.holds;
      ordered_json w = witness_json(lat, v.witness);
      if (!w.empty()) row["witness"] = std::move(w);
      rows.push_back(std::move(row));
    }
  }
  ordered_json doc;
  doc["group"] = entry.name;
  doc["catalog_version"] = version;
  doc["rows"] = std::move(rows);
  write_or_print(doc, out);
  return kOk;
}

int cmd_verify(const Options& o, const std::string& suites_arg, const std::string& formation,
               std::optional<std::size_t> max_order, const std::string& out) {
  std::vector<SuiteId> suites;
  for (const auto& s : split_list(suites_arg)) {
    if (s == "all") {
      for (auto id : all_suites()) suites.push_back(id);
    } else if (auto id = parse_suite(s)) {
      suites.push_back(*id);
    } else {
      throw ParseError("unknown suite '" + s + "'");
    }
  }
  if (suites.empty()) throw ParseError("--suite is empty");

  const auto [catalog, version] = load(o);
  HarnessConfig cfg = harness_config(o, version);
  if (formation == "U") cfg.formation = FormationId::U;
  else if (formation == "S") cfg.formation = FormationId::S;
  else if (!formation.empty()) throw ParseError("--formation must be U or S");
  if (max_order) cfg.max_order = *max_order;

  const std::string stamp = utc_timestamp();
  std::vector<SuiteReport> reports;
  for (SuiteId id : suites) {
    reports.push_back(run_suite(id, catalog, cfg));
    const SuiteReport& r = reports.back();
    std::cerr << r.suite << ": confirmed " << r.tallies.confirmed << ", vacuous " << r.tallies.vacuous
              << ", VIOLATION " << r.tallies.violation << ", skipped " << r.tallies.skipped << ", errors "
              << r.errors.size() << '\n';
  }
  if (reports.size() == 1) {
    write_or_print(report_json(reports.front(), stamp), out);
  } else {
    ordered_json doc;
    ordered_json all = ordered_json::array();
    for (const auto& r : reports) all.push_back(report_json(r, stamp));
    doc["reports"] = std::move(all);
    doc["timestamp"] = stamp;
    write_or_print(doc, out);
  }
  return verify_exit_code(reports);
}

int cmd_distinguish(const Options& o, const std::string& a, const std::string& b, std::optional<std::size_t> max_order,
                    const std::string& out) {
  const auto pa = parse_property(a);
  const auto pb = parse_property(b);
  if (!pa || *pa == PropertyId::has_supplement_in) throw ParseError("unknown property '" + a + "'");
  if (!pb || *pb == PropertyId::has_supplement_in) throw ParseError("unknown property '" + b + "'");
  const auto [catalog, version] = load(o);
  HarnessConfig cfg = harness_config(o, version);
  if (max_order) cfg.max_order = *max_order;
  const SeparationResult r = distinguish(*pa, *pb, catalog, cfg);
  ordered_json doc;
  doc["prop_a"] = a;
  doc["prop_b"] = b;
  ordered_json found = ordered_json::array();
  for (const auto& s : r.found) {
    ordered_json row;
    row["group"] = s.group;
    row["subgroup"] = s.subgroup;
    found.push_back(std::move(row));
  }
  doc["found"] = std::move(found);
  doc["skipped_groups"] = r.skipped_groups;
  write_or_print(doc, out);
  return r.skipped_groups.empty() ? kOk : kCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite permutation group toolkit: subgroup lattices, embedding properties, theorem suites"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Catalog JSON file (default: $GROUPLAB_CATALOG or built-in)");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-group-order", o.max_group_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-lattice-order", o.max_lattice_order, "Most subgroups enumerated per group")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ccp-order", o.max_ccp_order, "Largest group for completely-c-permutable checks")
      ->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog operations");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog groups");

  std::string group, subgroup = "all", properties, out, suites, formation, prop_a, prop_b;
  std::optional<std::size_t> max_order;

  auto* structure_cmd = app.add_subcommand("structure", "Structural summary of one group");
  structure_cmd->add_option("--group", group, "Catalog group name")->required();

  auto* props_cmd = app.add_subcommand("props", "Embedding-property verdicts");
  props_cmd->add_option("--group", group, "Catalog group name")->required();
  props_cmd->add_option("--subgroup", subgroup, "JSON array of generator image arrays, or 'all'");
  props_cmd->add_option("--properties", properties, "Comma-separated property ids")->required();
  props_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run theorem suites over the catalog");
  verify_cmd->add_option("--suite", suites, "Suite id list or 'all'")->required();
  verify_cmd->add_option("--formation", formation, "U or S (theorem A family)");
  verify_cmd->add_option("--max-order", max_order, "Skip groups above this order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* distinguish_cmd = app.add_subcommand("distinguish", "Find subgroups with property a but not b");
  distinguish_cmd->add_option("--prop-a", prop_a, "Property that holds")->required();
  distinguish_cmd->add_option("--prop-b", prop_b, "Property that fails")->required();
  distinguish_cmd->add_option("--max-order", max_order, "Skip groups above this order")->check(CLI::PositiveNumber);
  distinguish_cmd->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (!catalog_path.empty()) o.catalog = catalog_path;

  try {
    if (list_cmd->parsed()) return cmd_catalog_list(o);
    if (structure_cmd->parsed()) return cmd_structure(o, group);
    if (props_cmd->parsed()) return cmd_props(o, group, subgroup, properties, out);
    if (verify_cmd->parsed()) return cmd_verify(o, suites, formation, max_order, out);
    if (distinguish_cmd->parsed()) return cmd_distinguish(o, prop_a, prop_b, max_order, out);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
