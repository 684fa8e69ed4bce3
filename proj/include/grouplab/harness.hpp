#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "grouplab/catalog.hpp"
#include "grouplab/embedding.hpp"
#include "grouplab/quotient.hpp"

namespace grouplab {

using ordered_json = nlohmann::ordered_json;

enum class SuiteId {
  thm_a,
  thm_b,
  thm_c,
  cor_1_3,
  cor_1_4,
  prop_4_1,
  prop_4_2,
  lemma_2_1,
  lemma_2_13,
  lemma_2_15,
  example_intro,
};

inline constexpr std::array<std::pair<SuiteId, std::string_view>, 11> kSuiteNames{{
    {SuiteId::thm_a, "thm-a"},
    {SuiteId::thm_b, "thm-b"},
    {SuiteId::thm_c, "thm-c"},
    {SuiteId::cor_1_3, "cor-1.3"},
    {SuiteId::cor_1_4, "cor-1.4"},
    {SuiteId::prop_4_1, "prop-4.1"},
    {SuiteId::prop_4_2, "prop-4.2"},
    {SuiteId::lemma_2_1, "lemma-2.1"},
    {SuiteId::lemma_2_13, "lemma-2.13"},
    {SuiteId::lemma_2_15, "lemma-2.15"},
    {SuiteId::example_intro, "example-intro"},
}};

inline std::string_view to_string(SuiteId id) {
  for (const auto& [s, n] : kSuiteNames) {
    if (s == id) return n;
  }
  return "?";
}

inline std::optional<SuiteId> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

inline std::vector<SuiteId> all_suites() {
  std::vector<SuiteId> out;
  for (const auto& [s, n] : kSuiteNames) out.push_back(s);
  return out;
}

enum class Status { confirmed, vacuous, violation };

inline Status status_of(bool hypothesis, bool conclusion) {
  if (!hypothesis) return Status::vacuous;
  return conclusion ? Status::confirmed : Status::violation;
}

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::vacuous: return "vacuous";
    case Status::violation: return "VIOLATION";
  }
  return "?";
}

struct CheckRecord {
  std::string group;
  ordered_json params;
  bool hypothesis = false;
  bool conclusion = false;
  Status status = Status::vacuous;
  ordered_json witness;  // null when absent
};

struct Tallies {
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t violation = 0;
  std::size_t skipped = 0;  // checks abandoned because a per-check cap was hit
};

struct SuiteReport {
  std::string suite;
  ordered_json config;
  std::vector<CheckRecord> records;
  Tallies tallies;
  std::vector<ordered_json> errors;  // groups that could not be processed
  std::vector<ordered_json> notes;

  // No violations and at least one non-vacuous confirmation.
  bool passed() const { return tallies.violation == 0 && tallies.confirmed > 0; }
};

struct HarnessConfig {
  LatticeLimits lattice;
  EmbeddingLimits embedding;
  std::size_t max_order = std::numeric_limits<std::size_t>::max();
  std::optional<FormationId> formation;  // theorem A family; both when unset
  std::size_t jobs = 1;
  std::string catalog_version = kBuiltinCatalogVersion;
};

// Order bound applied by a suite on top of HarnessConfig::max_order.
inline std::size_t suite_order_bound(SuiteId id) {
  switch (id) {
    case SuiteId::thm_a:
    case SuiteId::cor_1_3:
    case SuiteId::cor_1_4: return 120;
    case SuiteId::lemma_2_1: return 60;
    default: return std::numeric_limits<std::size_t>::max();
  }
}

// ---------------------------------------------------------------------------
// Serialization helpers shared by reports and the CLI.

inline ordered_json subgroup_json(const SubgroupLattice& lat, SubgroupId id) {
  ordered_json j;
  j["order"] = lat.order(id);
  ordered_json gens = ordered_json::array();
  for (Elem e : canonical_generators(lat[id])) {
    const auto img = lat.group().element(e).images();
    gens.push_back(std::vector<Point>(img.begin(), img.end()));
  }
  j["generators"] = std::move(gens);
  return j;
}

inline ordered_json chief_factor_json(const SubgroupLattice& lat, const ChiefFactor& cf) {
  ordered_json j;
  j["lower"] = subgroup_json(lat, cf.lower);
  j["upper"] = subgroup_json(lat, cf.upper);
  j["order"] = cf.order;
  return j;
}

inline ordered_json witness_json(const SubgroupLattice& lat, const Witness& w) {
  ordered_json j = ordered_json::object();
  if (w.supplement) j["supplement"] = subgroup_json(lat, *w.supplement);
  if (w.intermediate) j["intermediate"] = subgroup_json(lat, *w.intermediate);
  if (w.other) j["other"] = subgroup_json(lat, *w.other);
  if (w.chief_factor) j["chief_factor"] = chief_factor_json(lat, *w.chief_factor);
  if (w.element) {
    const auto img = lat.group().element(*w.element).images();
    j["element"] = std::vector<Point>(img.begin(), img.end());
  }
  return j;
}

// ---------------------------------------------------------------------------
// Theorem instances.

enum class TheoremId { A, B, C, Cor13, Cor14 };

inline std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::C: return "C";
    case TheoremId::Cor13: return "Cor1.3";
    case TheoremId::Cor14: return "Cor1.4";
  }
  return "?";
}

// Parameters of one theorem check.
//  B: p_subgroup is a normal p-subgroup P, d_order the order of D.
//  C: e is normal, p_subgroup a Sylow p-subgroup of e, d_order the order of D.
//  A, Cor13, Cor14: e and x with F*(E) <= X <= E, formation fixed; the
//  hypothesis ranges over every prime of |X| and every non-cyclic Sylow
//  subgroup of X, with D existential (A), of index p (Cor13) or trivial (Cor14).
struct TheoremInstance {
  TheoremId theorem = TheoremId::B;
  SubgroupId e = 0;
  SubgroupId x = 0;
  SubgroupId p_subgroup = 0;
  std::uint64_t p = 0;
  std::size_t d_order = 1;
  FormationId formation = FormationId::U;
};

namespace detail {

enum : std::uint64_t { kTagSupplementedEnough = kTagFirstFree + 16 };

}  // namespace detail

// H is pi-supplemented in G or has a p-supersoluble supplement in G.
inline bool pi_supplemented_or_p_supersoluble_supplement(const SubgroupLattice& lat, SubgroupId h, std::uint64_t p) {
  return lat.cached_flag(detail::memo_key(detail::kTagSupplementedEnough, p, h), [&] {
    return pi_supplemented_holds(lat, h) || has_supplement_in_class(lat, h, ClassSpec::p_supersoluble(p)).holds;
  });
}

// The subgroup condition shared by every theorem: each proper subgroup H of P
// with |H| = |D| or p|D| passes, and when P is not quaternion-free and |D| = 1
// so does each cyclic subgroup of order 4.
inline bool subgroup_condition(const SubgroupLattice& lat, SubgroupId p_sub, std::uint64_t p, std::size_t d_order) {
  const auto inside = lat.subgroups_of(p_sub);
  for (SubgroupId h : inside) {
    if (h == p_sub) continue;
    const std::size_t n = lat.order(h);
    if ((n == d_order || n == p * d_order) && !pi_supplemented_or_p_supersoluble_supplement(lat, h, p)) return false;
  }
  if (p == 2 && d_order == 1 && !is_quaternion_free(lat, p_sub)) {
    for (SubgroupId h : inside) {
      if (lat.order(h) == 4 && is_cyclic(lat, h) && !pi_supplemented_or_p_supersoluble_supplement(lat, h, 2)) {
        return false;
      }
    }
  }
  return true;
}

// Orders 1, p, ..., |P|/p.
inline std::vector<std::size_t> d_orders_below(std::size_t p_order, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d < p_order; d *= p) out.push_back(d);
  return out;
}

inline bool hypothesis_holds(const SubgroupLattice& lat, const TheoremInstance& in) {
  switch (in.theorem) {
    case TheoremId::B:
    case TheoremId::C: return subgroup_condition(lat, in.p_subgroup, in.p, in.d_order);
    case TheoremId::A:
    case TheoremId::Cor13:
    case TheoremId::Cor14:
      for (auto p : PrimeSet::of(lat.order(in.x))) {
        for (SubgroupId ps : sylow_subgroups(lat, p, in.x)) {
          if (is_cyclic(lat, ps)) continue;
          const std::size_t n = lat.order(ps);
          bool ok = false;
          if (in.theorem == TheoremId::Cor13) {
            ok = subgroup_condition(lat, ps, p, n / p);
          } else if (in.theorem == TheoremId::Cor14) {
            ok = subgroup_condition(lat, ps, p, 1);
          } else {
            for (std::size_t d : d_orders_below(n, p)) {
              if (subgroup_condition(lat, ps, p, d)) {
                ok = true;
                break;
              }
            }
          }
          if (!ok) return false;
        }
      }
      return true;
  }
  return false;
}

inline bool conclusion_holds(const SubgroupLattice& lat, const TheoremInstance& in) {
  switch (in.theorem) {
    case TheoremId::B: return lat.contains(hypercentre(lat, FormationId::U), in.p_subgroup);
    case TheoremId::C: return is_p_nilpotent(lat, in.e, in.p);
    case TheoremId::A:
    case TheoremId::Cor13:
    case TheoremId::Cor14: return in_formation(lat, lat.whole(), in.formation);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Suites.

struct GroupOutcome {
  std::vector<CheckRecord> records;
  std::size_t skipped = 0;
  std::vector<ordered_json> errors;
  std::vector<ordered_json> notes;
};

namespace detail {

inline CheckRecord make_record(const std::string& group, ordered_json params, bool hyp, bool concl,
                               ordered_json witness = nullptr) {
  return CheckRecord{group, std::move(params), hyp, concl, status_of(hyp, concl), std::move(witness)};
}

inline std::vector<FormationId> formations_for(const HarnessConfig& cfg) {
  if (cfg.formation) return {*cfg.formation};
  return {FormationId::U, FormationId::S};
}

inline bool is_prime_power_or_one(std::size_t n) { return n == 1 || prime_power_base(n).has_value(); }

inline void theorem_a_family(const std::string& name, const SubgroupLattice& lat, TheoremId which,
                             const HarnessConfig& cfg, GroupOutcome& out) {
  for (FormationId f : formations_for(cfg)) {
    for (SubgroupId e : lat.normals()) {
      if (!quotient_in_formation(lat, e, f)) continue;
      const SubgroupId fstar = generalized_fitting(lat, e);
      for (SubgroupId x : lat.normals()) {
        if (!lat.contains(x, fstar) || !lat.contains(e, x)) continue;
        TheoremInstance in{which, e, x, 0, 0, 1, f};
        ordered_json params;
        params["theorem"] = to_string(which);
        params["formation"] = to_string(f);
        params["E"] = subgroup_json(lat, e);
        params["X"] = subgroup_json(lat, x);
        out.records.push_back(make_record(name, std::move(params), hypothesis_holds(lat, in), conclusion_holds(lat, in)));
      }
    }
  }
}

inline void theorem_b(const std::string& name, const SubgroupLattice& lat, GroupOutcome& out) {
  for (SubgroupId ps : lat.normals()) {
    const auto p = p_group_prime(lat, ps);
    if (!p) continue;
    for (std::size_t d : d_orders_below(lat.order(ps), *p)) {
      TheoremInstance in{TheoremId::B, 0, 0, ps, *p, d, FormationId::U};
      ordered_json params;
      params["P"] = subgroup_json(lat, ps);
      params["p"] = *p;
      params["d_order"] = d;
      out.records.push_back(make_record(name, std::move(params), hypothesis_holds(lat, in), conclusion_holds(lat, in)));
    }
  }
}

inline void theorem_c(const std::string& name, const SubgroupLattice& lat, GroupOutcome& out) {
  for (SubgroupId e : lat.normals()) {
    const std::size_t ne = lat.order(e);
    for (auto p : PrimeSet::of(ne)) {
      if (std::gcd(ne, static_cast<std::size_t>(p - 1)) != 1) continue;
      for (SubgroupId ps : sylow_subgroups(lat, p, e)) {
        for (std::size_t d : d_orders_below(lat.order(ps), p)) {
          TheoremInstance in{TheoremId::C, e, 0, ps, p, d, FormationId::U};
          ordered_json params;
          params["E"] = subgroup_json(lat, e);
          params["P"] = subgroup_json(lat, ps);
          params["p"] = p;
          params["d_order"] = d;
          out.records.push_back(
              make_record(name, std::move(params), hypothesis_holds(lat, in), conclusion_holds(lat, in)));
        }
      }
    }
  }
}

// Sufficient conditions for the pi-property, indexed 1..6.
inline bool pi_property_condition(const SubgroupLattice& lat, SubgroupId h, int which) {
  switch (which) {
    case 1: return cap_holds(lat, h);
    case 2: return check_classical(lat, h, PropertyId::u_hypercentrally_embedded).holds;
    case 3: return s_quasinormal_holds(lat, h);
    case 4: return is_prime_power_or_one(lat.order(h)) && s_semipermutable_holds(lat, h);
    case 5: return is_soluble(lat, normal_closure_of(lat, h)) && s_qn_embedded_holds(lat, h);
    case 6: return is_soluble(lat, normal_closure_of(lat, h)) && !s_conditional_failure(lat, h).has_value();
  }
  return false;
}

// Sufficient conditions for being pi-supplemented, indexed 1..6.
inline bool pi_supplemented_condition(const SubgroupLattice& lat, SubgroupId h, int which,
                                      const EmbeddingLimits& limits) {
  switch (which) {
    case 1: return check_classical(lat, h, PropertyId::cas).holds;
    case 2: return check_classical(lat, h, PropertyId::u_supplemented).holds;
    case 3: return check_classical(lat, h, PropertyId::weakly_s_supplemented).holds;
    case 4:
      return is_prime_power_or_one(lat.order(h)) && check_classical(lat, h, PropertyId::weakly_sbar_supplemented).holds;
    case 5:
      return is_soluble(lat, normal_closure_of(lat, h)) &&
             check_classical(lat, h, PropertyId::weakly_s_supp_embedded).holds;
    case 6:
      return is_soluble(lat, normal_closure_of(lat, h)) &&
             check_classical(lat, h, PropertyId::weakly_c_permutable, limits).holds;
  }
  return false;
}

inline void prop_4_1(const std::string& name, const SubgroupLattice& lat, GroupOutcome& out) {
  const auto series = chief_series(lat);
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    const bool concl = pi_property_holds(lat, h);
    if (concl != pi_property_on_series(lat, h, series)) {
      ordered_json note;
      note["group"] = name;
      note["subgroup"] = subgroup_json(lat, h);
      note["note"] = "pi-property over all chief factors differs from the verdict over one chief series";
      out.notes.push_back(std::move(note));
    }
    for (int c = 1; c <= 6; ++c) {
      ordered_json params;
      params["H"] = subgroup_json(lat, h);
      params["condition"] = c;
      out.records.push_back(make_record(name, std::move(params), pi_property_condition(lat, h, c), concl));
    }
  }
}

inline void prop_4_2(const std::string& name, const SubgroupLattice& lat, const HarnessConfig& cfg,
                     GroupOutcome& out) {
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    const auto verdict = is_pi_supplemented(lat, h);
    for (int c = 1; c <= 6; ++c) {
      bool hyp = false;
      try {
        hyp = pi_supplemented_condition(lat, h, c, cfg.embedding);
      } catch (const CapExceeded&) {
        ++out.skipped;
        continue;
      }
      ordered_json params;
      params["H"] = subgroup_json(lat, h);
      params["condition"] = c;
      out.records.push_back(make_record(name, std::move(params), hyp, verdict.holds,
                                        verdict.holds ? witness_json(lat, verdict.witness) : ordered_json(nullptr)));
    }
  }
}

inline void lemma_2_1(const std::string& name, const SubgroupLattice& lat, const HarnessConfig& cfg,
                      GroupOutcome& out) {
  for (SubgroupId n : lat.normals()) {
    const QuotientMap q = quotient(lat[n]);
    const SubgroupLattice qlat(q.image, cfg.lattice);
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      const SubgroupId image = qlat.id_of(q.project(lat[h]));
      ordered_json params;
      params["N"] = subgroup_json(lat, n);
      params["H"] = subgroup_json(lat, h);

      params["part"] = 1;
      out.records.push_back(
          make_record(name, params, pi_property_holds(lat, h), pi_property_holds(qlat, image)));

      const bool side = lat.contains(h, n) || std::gcd(lat.order(h), lat.order(n)) == 1;
      params["part"] = 2;
      const bool hyp = side && pi_supplemented_holds(lat, h);
      out.records.push_back(make_record(name, std::move(params), hyp, pi_supplemented_holds(qlat, image)));
    }
  }
}

inline bool coprime_to_p_minus_1(std::size_t n, std::uint64_t p) { return std::gcd(n, static_cast<std::size_t>(p - 1)) == 1; }

inline void lemma_2_13(const std::string& name, const SubgroupLattice& lat, GroupOutcome& out) {
  const std::size_t g = lat.order(lat.whole());
  for (auto p : PrimeSet::of(g)) {
    if (!coprime_to_p_minus_1(g, p)) continue;
    const bool pnil = is_p_nilpotent(lat, lat.whole(), p);

    ordered_json params;
    params["p"] = p;
    params["part"] = 1;
    const auto sylows = sylow_subgroups(lat, p);
    out.records.push_back(make_record(name, params, is_cyclic(lat, sylows.front()), pnil));

    params["part"] = 2;
    for (SubgroupId e : lat.normals()) {
      const bool hyp = p_part(lat.order(e), p) <= p && quotient_is_p_nilpotent(lat, e, p);
      ordered_json pe = params;
      pe["E"] = subgroup_json(lat, e);
      out.records.push_back(make_record(name, std::move(pe), hyp, pnil));
    }

    params["part"] = 3;
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      if (lat.order(h) * p != g) continue;
      ordered_json ph = params;
      ph["H"] = subgroup_json(lat, h);
      out.records.push_back(make_record(name, std::move(ph), true, lat.is_normal(h)));
    }
  }
}

inline void lemma_2_15(const std::string& name, const SubgroupLattice& lat, GroupOutcome& out) {
  const std::size_t g = lat.order(lat.whole());
  for (auto p : PrimeSet::of(g)) {
    if (!coprime_to_p_minus_1(g, p)) continue;
    const bool pnil = is_p_nilpotent(lat, lat.whole(), p);
    for (SubgroupId ps : sylow_subgroups(lat, p)) {
      bool hyp = true;
      for (SubgroupId h : lat.subgroups_of(ps)) {
        if (lat.order(h) == p && !check_classical(lat, h, PropertyId::complemented).holds) {
          hyp = false;
          break;
        }
      }
      ordered_json params;
      params["p"] = p;
      params["P"] = subgroup_json(lat, ps);
      out.records.push_back(make_record(name, std::move(params), hyp, pnil));
    }
  }
}

// The separating example: in F20 = <a, b>, H = <b^2> is pi-supplemented but
// not c-supplemented.
inline void example_intro(const CatalogEntry& entry, const SubgroupLattice& lat, GroupOutcome& out) {
  const FiniteGroup& g = lat.group();
  const Elem b = g.generator_indices()[1];
  const SubgroupId h = lat.id_of(generate(g, {g.mul(b, b)}));
  const auto pi_supp = is_pi_supplemented(lat, h);
  const bool c_supp = check_classical(lat, h, PropertyId::c_supplemented).holds;
  ordered_json params;
  params["H"] = subgroup_json(lat, h);
  params["claim"] = "pi-supplemented and not c-supplemented";
  ordered_json witness = witness_json(lat, pi_supp.witness);
  out.records.push_back(make_record(entry.name, std::move(params), true, pi_supp.holds && !c_supp, std::move(witness)));
}

inline GroupOutcome run_on_group(SuiteId suite, const CatalogEntry& entry, const HarnessConfig& cfg) {
  GroupOutcome out;
  try {
    if (suite == SuiteId::example_intro && entry.name != "F20") return out;
    const SubgroupLattice lat(entry.group, cfg.lattice);
    switch (suite) {
      case SuiteId::thm_a: theorem_a_family(entry.name, lat, TheoremId::A, cfg, out); break;
      case SuiteId::cor_1_3: theorem_a_family(entry.name, lat, TheoremId::Cor13, cfg, out); break;
      case SuiteId::cor_1_4: theorem_a_family(entry.name, lat, TheoremId::Cor14, cfg, out); break;
      case SuiteId::thm_b: theorem_b(entry.name, lat, out); break;
      case SuiteId::thm_c: theorem_c(entry.name, lat, out); break;
      case SuiteId::prop_4_1: prop_4_1(entry.name, lat, out); break;
      case SuiteId::prop_4_2: prop_4_2(entry.name, lat, cfg, out); break;
      case SuiteId::lemma_2_1: lemma_2_1(entry.name, lat, cfg, out); break;
      case SuiteId::lemma_2_13: lemma_2_13(entry.name, lat, out); break;
      case SuiteId::lemma_2_15: lemma_2_15(entry.name, lat, out); break;
      case SuiteId::example_intro: example_intro(entry, lat, out); break;
    }
  } catch (const CapExceeded& e) {
    ordered_json err;
    err["group"] = entry.name;
    err["error"] = "CapExceeded";
    err["message"] = e.what();
    out.errors.push_back(std::move(err));
  }
  return out;
}

// Runs task(i) for i in [0, n) on up to `jobs` threads.
inline void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline ordered_json config_json(SuiteId suite, const HarnessConfig& cfg) {
  ordered_json c;
  c["max_lattice_order"] = cfg.lattice.max_order;
  c["max_ccp_order"] = cfg.embedding.max_ccp_order;
  const std::size_t bound = std::min(cfg.max_order, suite_order_bound(suite));
  if (bound == std::numeric_limits<std::size_t>::max()) {
    c["max_order"] = nullptr;
  } else {
    c["max_order"] = bound;
  }
  if (suite == SuiteId::thm_a || suite == SuiteId::cor_1_3 || suite == SuiteId::cor_1_4) {
    ordered_json fs = ordered_json::array();
    for (FormationId f : detail::formations_for(cfg)) fs.push_back(to_string(f));
    c["formations"] = std::move(fs);
  }
  c["catalog_version"] = cfg.catalog_version;
  return c;
}

// Evaluates one suite over the catalog.  Groups are processed concurrently up
// to cfg.jobs; records are merged in catalog order.
inline SuiteReport run_suite(SuiteId suite, const std::vector<CatalogEntry>& catalog, const HarnessConfig& cfg) {
  const std::size_t bound = std::min(cfg.max_order, suite_order_bound(suite));
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : catalog) {
    if (e.group.order() <= bound) selected.push_back(&e);
  }
  std::vector<GroupOutcome> outcomes(selected.size());
  detail::parallel_for(selected.size(), cfg.jobs,
                       [&](std::size_t i) { outcomes[i] = detail::run_on_group(suite, *selected[i], cfg); });

  SuiteReport report;
  report.suite = std::string(to_string(suite));
  report.config = config_json(suite, cfg);
  for (auto& o : outcomes) {
    for (auto& r : o.records) {
      switch (r.status) {
        case Status::confirmed: ++report.tallies.confirmed; break;
        case Status::vacuous: ++report.tallies.vacuous; break;
        case Status::violation: ++report.tallies.violation; break;
      }
      report.records.push_back(std::move(r));
    }
    report.tallies.skipped += o.skipped;
    for (auto& e : o.errors) report.errors.push_back(std::move(e));
    for (auto& n : o.notes) report.notes.push_back(std::move(n));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Property separation.

struct Separation {
  std::string group;
  ordered_json subgroup;
};

struct SeparationResult {
  std::vector<Separation> found;
  std::vector<std::string> skipped_groups;
};

// All (G, H) in catalog order with property a holding and b failing.
inline SeparationResult distinguish(PropertyId a, PropertyId b, const std::vector<CatalogEntry>& catalog,
                                    const HarnessConfig& cfg) {
  std::vector<std::optional<std::vector<Separation>>> per_group(catalog.size());
  detail::parallel_for(catalog.size(), cfg.jobs, [&](std::size_t i) {
    const auto& entry = catalog[i];
    if (entry.group.order() > cfg.max_order) return;
    try {
      const SubgroupLattice lat(entry.group, cfg.lattice);
      std::vector<Separation> hits;
      for (SubgroupId h = 0; h < lat.size(); ++h) {
        if (holds(lat, h, a, cfg.embedding) && !holds(lat, h, b, cfg.embedding)) {
          hits.push_back({entry.name, subgroup_json(lat, h)});
        }
      }
      per_group[i] = std::move(hits);
    } catch (const CapExceeded&) {
    }
  });
  SeparationResult result;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].group.order() > cfg.max_order) continue;
    if (!per_group[i]) {
      result.skipped_groups.push_back(catalog[i].name);
      continue;
    }
    for (auto& s : *per_group[i]) result.found.push_back(std::move(s));
  }
  return result;
}

}  // namespace grouplab
