// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "grouplab/grouplab.hpp"

using namespace grouplab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      note(what);
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string tally_text(const SuiteReport& r) {
  std::ostringstream s;
  s << "confirmed " << r.tallies.confirmed << ", vacuous " << r.tallies.vacuous << ", VIOLATION "
    << r.tallies.violation << ", skipped " << r.tallies.skipped << ", group errors " << r.errors.size();
  return s.str();
}

bool order_is(const ordered_json& subgroup, std::size_t n) { return subgroup.at("order") == n; }

Outcome intro_example() {
  Outcome o;
  const auto t0 = Clock::now();
  // a: x -> x+1, b: x -> 3x on Z/5, so b^-1 a b = a^2
  const FiniteGroup g = group_from_generators(5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 3, 1, 4, 2})});
  const SubgroupLattice lat(g);
  const Elem b = *g.index_of(Permutation({0, 3, 1, 4, 2}));
  const SubgroupId h = lat.id_of(generate(g, {g.mul(b, b)}));
  const bool pi_supp = is_pi_supplemented(lat, h).holds;
  const bool c_supp = check_classical(lat, h, PropertyId::c_supplemented).holds;
  const double secs = seconds_since(t0);
  o.require(g.order() == 20, "order " + std::to_string(g.order()));
  o.require(pi_supp, "pi-supplemented is false");
  o.require(!c_supp, "c-supplemented is true");
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  o.note(std::string("pi-supplemented=") + (pi_supp ? "true" : "false") +
         ", c-supplemented=" + (c_supp ? "true" : "false") + ", " + std::to_string(secs) + " s");
  return o;
}

Outcome proposition_suite(SuiteId id, const std::vector<CatalogEntry>& catalog, double time_limit) {
  Outcome o;
  const auto t0 = Clock::now();
  const SuiteReport r = run_suite(id, catalog, {});
  const double secs = seconds_since(t0);
  o.require(r.tallies.violation == 0, "violations present");
  o.require(r.tallies.confirmed >= 50, "fewer than 50 confirmed");
  o.require(r.errors.empty(), "groups skipped by caps");
  o.require(secs < time_limit, "too slow");
  o.note(tally_text(r) + ", " + std::to_string(secs) + " s");
  return o;
}

Outcome theorem_b(const std::vector<CatalogEntry>& catalog) {
  Outcome o;
  const SuiteReport r = run_suite(SuiteId::thm_b, catalog, {});
  bool s3 = false, f20 = false, a4_seen = false, a4_vacuous = true;
  for (const auto& rec : r.records) {
    const auto& p = rec.params.at("P");
    if (rec.group == "S3" && order_is(p, 3) && rec.status == Status::confirmed) s3 = true;
    if (rec.group == "F20" && order_is(p, 5) && rec.status == Status::confirmed) f20 = true;
    if (rec.group == "A4" && order_is(p, 4)) {
      a4_seen = true;
      a4_vacuous = a4_vacuous && rec.status == Status::vacuous;
    }
  }
  o.require(r.tallies.violation == 0, "violations present");
  o.require(r.errors.empty(), "groups skipped by caps");
  o.require(s3, "(S3, C3) not confirmed");
  o.require(f20, "(F20, <a>) not confirmed");
  o.require(a4_seen && a4_vacuous, "(A4, V4) instances not all vacuous");
  o.note(tally_text(r));
  return o;
}

Outcome theorem_c(const std::vector<CatalogEntry>& catalog) {
  Outcome o;
  const SuiteReport r = run_suite(SuiteId::thm_c, catalog, {});
  bool d10 = false;
  std::size_t s4_p2 = 0, s4_p2_vacuous = 0;
  for (const auto& rec : r.records) {
    if (rec.group == "D10" && rec.params.at("p") == 2 && rec.status == Status::confirmed) d10 = true;
    if (rec.group == "S4" && rec.params.at("p") == 2) {
      ++s4_p2;
      s4_p2_vacuous += rec.status == Status::vacuous;
    }
  }
  o.require(r.tallies.violation == 0, "violations present");
  o.require(r.errors.empty(), "groups skipped by caps");
  o.require(d10, "(D10, p=2) not confirmed");
  o.require(s4_p2 > 0 && s4_p2 == s4_p2_vacuous, "S4 p=2 instances not all vacuous");
  o.note(tally_text(r) + "; S4 p=2 instances " + std::to_string(s4_p2));
  return o;
}

Outcome theorem_a(const std::vector<CatalogEntry>& catalog) {
  Outcome o;
  std::string text;
  for (FormationId f : {FormationId::U, FormationId::S}) {
    HarnessConfig cfg;
    cfg.formation = f;
    cfg.max_order = 120;
    const SuiteReport r = run_suite(SuiteId::thm_a, catalog, cfg);
    o.require(r.tallies.violation == 0, std::string("violations for ") + std::string(to_string(f)));
    o.require(r.errors.empty(), "groups skipped by caps");
    o.require(!r.records.empty(), "no instances");
    text += std::string(to_string(f)) + ": " + tally_text(r) + ". ";
  }
  o.note(text);
  return o;
}

Outcome zero_violation_suites(std::initializer_list<SuiteId> ids, const std::vector<CatalogEntry>& catalog,
                              std::size_t max_order) {
  Outcome o;
  std::string text;
  for (SuiteId id : ids) {
    HarnessConfig cfg;
    cfg.max_order = max_order;
    const SuiteReport r = run_suite(id, catalog, cfg);
    o.require(r.tallies.violation == 0, std::string("violations in ") + std::string(to_string(id)));
    o.require(r.errors.empty(), "groups skipped by caps");
    o.require(r.tallies.confirmed > 0, std::string("nothing confirmed in ") + std::string(to_string(id)));
    text += std::string(to_string(id)) + ": " + tally_text(r) + ". ";
  }
  o.note(text);
  return o;
}

// Factor-order multisets over every chief series (paths in the covering graph).
std::set<std::multiset<std::size_t>> chief_series_shapes(const SubgroupLattice& lat) {
  std::map<SubgroupId, std::vector<SubgroupId>> up;
  for (const auto& f : chief_factor_pairs(lat)) up[f.lower].push_back(f.upper);
  std::set<std::multiset<std::size_t>> shapes;
  std::function<void(SubgroupId, std::multiset<std::size_t>)> walk = [&](SubgroupId at, std::multiset<std::size_t> m) {
    if (at == lat.whole()) {
      shapes.insert(m);
      return;
    }
    for (SubgroupId next : up[at]) {
      auto n = m;
      n.insert(lat.order(next) / lat.order(at));
      walk(next, std::move(n));
    }
  };
  walk(lat.trivial(), {});
  return shapes;
}

Outcome structural(const std::vector<CatalogEntry>& catalog) {
  Outcome o;
  std::vector<std::unique_ptr<SubgroupLattice>> lats;
  for (const auto& e : catalog) {
    lats.push_back(all_subgroups(e.group));
    const SubgroupLattice& lat = *lats.back();
    if (hypercentre(lat, FormationId::U) != hypercentre_greedy(lat)) o.require(false, "Z_U mismatch on " + e.name);
    const SubgroupId f = generalized_fitting(lat);
    if (!centralizer(lat[f]).is_subgroup_of(lat[f])) o.require(false, "C(F*) not in F* on " + e.name);
    for (auto p : PrimeSet::of(e.group.order())) {
      if (sylow_subgroups(lat, p).size() % p != 1) o.require(false, "Sylow count on " + e.name);
    }
    if (chief_series_shapes(lat).size() != 1) o.require(false, "Jordan-Holder on " + e.name);
  }
  std::mt19937 rng(1234567);
  std::uniform_int_distribution<std::size_t> pick_group(0, lats.size() - 1);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const SubgroupLattice& lat = *lats[pick_group(rng)];
    std::uniform_int_distribution<SubgroupId> pick(0, static_cast<SubgroupId>(lat.size() - 1));
    const SubgroupId h = pick(rng), k = pick(rng);
    const auto hk = subgroup_product(lat[h], lat[k]);
    if (hk.elements.count() * lat.order(lat.meet(h, k)) != lat.order(h) * lat.order(k)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " product-formula failures");
  o.note(std::to_string(catalog.size()) + " groups, 1000 random pairs");
  return o;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string stripped_report(const std::filesystem::path& p) {
  std::ifstream in(p);
  auto j = ordered_json::parse(in);
  strip_timestamps(j);
  return j.dump(2);
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "grouplab_accept_run1.json";
  const auto b = dir / "grouplab_accept_run2.json";
  const std::string base = std::string(GROUPLAB_CLI) + " verify --suite all --out ";
  const int rc1 = run_command(base + a.string() + " 2> /dev/null");
  const int rc2 = run_command(base + b.string() + " 2> /dev/null");
  o.require(rc1 == 0 && rc2 == 0, "exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
  if (o.pass) {
    const std::string sa = stripped_report(a), sb = stripped_report(b);
    o.require(sa == sb, "reports differ");
    o.note(std::to_string(sa.size()) + " bytes after stripping timestamps");
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return o;
}

}  // namespace

int main() {
  const auto catalog = builtin_catalog();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 intro example (F20, <b^2>)", [] { return intro_example(); }},
      {"2 prop-4.1 suite", [&] { return proposition_suite(SuiteId::prop_4_1, catalog, 600.0); }},
      {"3 prop-4.2 suite", [&] { return proposition_suite(SuiteId::prop_4_2, catalog, 600.0); }},
      {"4 thm-b suite", [&] { return theorem_b(catalog); }},
      {"5 thm-c suite", [&] { return theorem_c(catalog); }},
      {"6 thm-a suite, U and S, order <= 120", [&] { return theorem_a(catalog); }},
      {"7 lemma-2.1 transfer, order <= 60", [&] { return zero_violation_suites({SuiteId::lemma_2_1}, catalog, 60); }},
      {"8 structural oracles", [&] { return structural(catalog); }},
      {"9 lemma-2.13 / lemma-2.15 suites",
       [&] { return zero_violation_suites({SuiteId::lemma_2_13, SuiteId::lemma_2_15}, catalog, SIZE_MAX); }},
      {"10 determinism of verify --suite all", [] { return determinism(); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  (" << o.detail << ")" << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
