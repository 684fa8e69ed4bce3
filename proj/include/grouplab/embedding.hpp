#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/structure.hpp"

namespace grouplab {

enum class PropertyId {
  pi_property,
  pi_supplemented,
  has_supplement_in,
  complemented,
  c_supplemented,
  cap,
  cas,
  u_hypercentrally_embedded,
  u_supplemented,
  s_quasinormal,
  s_semipermutable,
  s_qn_embedded,
  s_conditionally_permutable,
  completely_c_permutable,
  weakly_s_supplemented,
  weakly_sbar_supplemented,
  weakly_s_supp_embedded,
  weakly_c_permutable,
};

inline constexpr std::array<std::pair<PropertyId, std::string_view>, 18> kPropertyNames{{
    {PropertyId::pi_property, "pi-property"},
    {PropertyId::pi_supplemented, "pi-supplemented"},
    {PropertyId::has_supplement_in, "has-supplement-in"},
    {PropertyId::complemented, "complemented"},
    {PropertyId::c_supplemented, "c-supplemented"},
    {PropertyId::cap, "cap"},
    {PropertyId::cas, "cas"},
    {PropertyId::u_hypercentrally_embedded, "u-hypercentrally-embedded"},
    {PropertyId::u_supplemented, "u-supplemented"},
    {PropertyId::s_quasinormal, "s-quasinormal"},
    {PropertyId::s_semipermutable, "s-semipermutable"},
    {PropertyId::s_qn_embedded, "s-qn-embedded"},
    {PropertyId::s_conditionally_permutable, "s-conditionally-permutable"},
    {PropertyId::completely_c_permutable, "completely-c-permutable"},
    {PropertyId::weakly_s_supplemented, "weakly-s-supplemented"},
    {PropertyId::weakly_sbar_supplemented, "weakly-sbar-supplemented"},
    {PropertyId::weakly_s_supp_embedded, "weakly-s-supp-embedded"},
    {PropertyId::weakly_c_permutable, "weakly-c-permutable"},
}};

inline std::string_view to_string(PropertyId id) {
  for (const auto& [p, name] : kPropertyNames) {
    if (p == id) return name;
  }
  return "?";
}

inline std::optional<PropertyId> parse_property(std::string_view name) {
  for (const auto& [p, n] : kPropertyNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

// Certifying or refuting objects attached to a verdict.  Which fields are set
// depends on the property.
struct Witness {
  std::optional<SubgroupId> supplement;    // T
  std::optional<SubgroupId> intermediate;  // I, or an embedded subgroup inside H
  std::optional<SubgroupId> other;         // a Sylow subgroup, a subgroup T that cannot be permuted, ...
  std::optional<ChiefFactor> chief_factor;
  std::optional<Elem> element;
};

struct PropertyVerdict {
  PropertyId property = PropertyId::pi_property;
  bool holds = false;
  Witness witness;
};

struct EmbeddingLimits {
  std::size_t max_ccp_order = 100;
};

namespace detail {

enum : std::uint64_t {
  kTagPiProperty = kTagFirstFree,
  kTagSQuasinormal,
  kTagSSemipermutable,
  kTagSQnEmbedded,
  kTagCap,
  kTagCcp,
};

}  // namespace detail

// Supplements T of h (|H||T|/|H n T| = |G|), largest first, then by id.
inline std::vector<SubgroupId> supplements(const SubgroupLattice& lat, SubgroupId h) {
  const std::size_t g = lat.order(lat.whole());
  std::vector<SubgroupId> out;
  for (SubgroupId t = 0; t < lat.size(); ++t) {
    if (lat.order(h) * lat.order(t) == g * lat.order(lat.meet(h, t))) out.push_back(t);
  }
  std::stable_sort(out.begin(), out.end(), [&](SubgroupId a, SubgroupId b) { return lat.order(a) > lat.order(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Pi-property: for each chief factor L/K, the index in G/K of the normalizer
// of HK/K n L/K is a pi(HK/K n L/K)-number.  Computed on preimages in G:
// with B = HK n L that index is |G : N_G(B)| and the factor is B/K.

inline std::optional<ChiefFactor> pi_property_violation(const SubgroupLattice& lat, SubgroupId h,
                                                        const std::vector<ChiefFactor>& factors) {
  const std::size_t g = lat.order(lat.whole());
  for (const auto& cf : factors) {
    const SubgroupId b = lat.meet(lat.join(h, cf.lower), cf.upper);
    const std::size_t index = g / lat.order(lat.normalizer(b));
    if (!is_pi_number(index, PrimeSet::of(lat.order(b) / lat.order(cf.lower)))) return cf;
  }
  return std::nullopt;
}

inline bool pi_property_holds(const SubgroupLattice& lat, SubgroupId h) {
  return lat.cached_flag(detail::memo_key(detail::kTagPiProperty, 0, h),
                         [&] { return !pi_property_violation(lat, h, chief_factor_pairs(lat)).has_value(); });
}

inline PropertyVerdict satisfies_pi_property(const SubgroupLattice& lat, SubgroupId h) {
  PropertyVerdict v{PropertyId::pi_property, true, {}};
  if (auto bad = pi_property_violation(lat, h, chief_factor_pairs(lat))) {
    v.holds = false;
    v.witness.chief_factor = bad;
  }
  return v;
}

// Same test restricted to the factors of one chief series.
inline bool pi_property_on_series(const SubgroupLattice& lat, SubgroupId h, const std::vector<SubgroupId>& series) {
  std::vector<ChiefFactor> factors;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) factors.push_back(make_chief_factor(lat, series[i], series[i + 1]));
  return !pi_property_violation(lat, h, factors).has_value();
}

// Exists T with G = HT, and I with H n T <= I <= H satisfying the pi-property.
// T is searched largest first, I smallest first.
inline PropertyVerdict is_pi_supplemented(const SubgroupLattice& lat, SubgroupId h) {
  const auto inside_h = lat.subgroups_of(h);  // increasing order
  for (SubgroupId t : supplements(lat, h)) {
    const SubgroupId d = lat.meet(h, t);
    for (SubgroupId i : inside_h) {
      if (lat.contains(i, d) && pi_property_holds(lat, i)) {
        return {PropertyId::pi_supplemented, true, Witness{t, i, {}, {}, {}}};
      }
    }
  }
  return {PropertyId::pi_supplemented, false, {}};
}

inline bool pi_supplemented_holds(const SubgroupLattice& lat, SubgroupId h) {
  return is_pi_supplemented(lat, h).holds;
}

inline PropertyVerdict has_supplement_in_class(const SubgroupLattice& lat, SubgroupId h, const ClassSpec& c) {
  for (SubgroupId t : supplements(lat, h)) {
    if (class_predicate(lat, t, c)) return {PropertyId::has_supplement_in, true, Witness{t, {}, {}, {}, {}}};
  }
  return {PropertyId::has_supplement_in, false, {}};
}

// ---------------------------------------------------------------------------
// Permutability with Sylow subgroups.

inline std::optional<SubgroupId> sylow_not_permuting(const SubgroupLattice& lat, SubgroupId h, bool coprime_only) {
  for (auto p : PrimeSet::of(lat.order(lat.whole()))) {
    if (coprime_only && lat.order(h) % p == 0) continue;
    for (SubgroupId s : sylow_subgroups(lat, p)) {
      if (!lat.permutes(h, s)) return s;
    }
  }
  return std::nullopt;
}

inline bool s_quasinormal_holds(const SubgroupLattice& lat, SubgroupId h) {
  return lat.cached_flag(detail::memo_key(detail::kTagSQuasinormal, 0, h),
                         [&] { return lat.is_normal(h) || !sylow_not_permuting(lat, h, false); });
}

inline bool s_semipermutable_holds(const SubgroupLattice& lat, SubgroupId h) {
  return lat.cached_flag(detail::memo_key(detail::kTagSSemipermutable, 0, h),
                         [&] { return !sylow_not_permuting(lat, h, true); });
}

// Every Sylow subgroup P of H is a Sylow subgroup of some S-quasinormal X.
// Returns the first P without such an X.
inline std::optional<SubgroupId> s_qn_embedding_failure(const SubgroupLattice& lat, SubgroupId h) {
  for (auto p : PrimeSet::of(lat.order(h))) {
    for (SubgroupId s : sylow_subgroups(lat, p, h)) {
      bool embedded = false;
      for (SubgroupId x = 0; x < lat.size() && !embedded; ++x) {
        embedded = lat.contains(x, s) && p_part(lat.order(x), p) == lat.order(s) && s_quasinormal_holds(lat, x);
      }
      if (!embedded) return s;
    }
  }
  return std::nullopt;
}

inline bool s_qn_embedded_holds(const SubgroupLattice& lat, SubgroupId h) {
  return lat.cached_flag(detail::memo_key(detail::kTagSQnEmbedded, 0, h),
                         [&] { return !s_qn_embedding_failure(lat, h).has_value(); });
}

// Prime p with no Sylow p-subgroup permuting with h.
inline std::optional<std::uint64_t> s_conditional_failure(const SubgroupLattice& lat, SubgroupId h) {
  for (auto p : PrimeSet::of(lat.order(lat.whole()))) {
    const auto sylows = sylow_subgroups(lat, p);
    if (std::none_of(sylows.begin(), sylows.end(), [&](SubgroupId s) { return lat.permutes(h, s); })) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chief-factor covering, hypercentral embedding.

inline std::optional<ChiefFactor> cap_failure(const SubgroupLattice& lat, SubgroupId h) {
  for (const auto& cf : chief_factor_pairs(lat)) {
    const bool covers = lat.contains(lat.join(h, cf.lower), cf.upper);
    const bool avoids = lat.contains(cf.lower, lat.meet(h, cf.upper));
    if (!covers && !avoids) return cf;
  }
  return std::nullopt;
}

inline bool cap_holds(const SubgroupLattice& lat, SubgroupId h) {
  return lat.cached_flag(detail::memo_key(detail::kTagCap, 0, h), [&] { return !cap_failure(lat, h).has_value(); });
}

inline void require_ccp_cap(const SubgroupLattice& lat, const EmbeddingLimits& limits) {
  if (lat.order(lat.whole()) > limits.max_ccp_order) {
    throw CapExceeded("completely c-permutable check needs |G| <= " + std::to_string(limits.max_ccp_order));
  }
}

// First T such that no x in <H, T> makes H T^x = T^x H.
inline std::optional<SubgroupId> ccp_failure(const SubgroupLattice& lat, SubgroupId h, const EmbeddingLimits& limits) {
  require_ccp_cap(lat, limits);
  for (SubgroupId t = 0; t < lat.size(); ++t) {
    if (lat.permutes(h, t)) continue;
    bool found = false;
    lat[lat.join(h, t)].members().for_each([&](Elem x) {
      if (!found && lat.permutes(h, lat.conjugate(t, x))) found = true;
    });
    if (!found) return t;
  }
  return std::nullopt;
}

inline bool ccp_holds(const SubgroupLattice& lat, SubgroupId h, const EmbeddingLimits& limits) {
  require_ccp_cap(lat, limits);
  return lat.cached_flag(detail::memo_key(detail::kTagCcp, 0, h),
                         [&] { return !ccp_failure(lat, h, limits).has_value(); });
}

// Join of all subgroups of h with the given property.
template <class Pred>
SubgroupId join_of_subgroups_with(const SubgroupLattice& lat, SubgroupId h, Pred pred) {
  SubgroupId j = lat.trivial();
  for (SubgroupId s : lat.subgroups_of(h)) {
    if (pred(s)) j = lat.join(j, s);
  }
  return j;
}

// Exists a supplement T of h with pred(H n T).
template <class Pred>
PropertyVerdict supplement_search(const SubgroupLattice& lat, SubgroupId h, PropertyId id, Pred pred) {
  for (SubgroupId t : supplements(lat, h)) {
    if (pred(lat.meet(h, t))) return {id, true, Witness{t, {}, {}, {}, {}}};
  }
  return {id, false, {}};
}

// One of the fourteen classical embedding properties (plus the two pi
// predicates, dispatched for convenience).  has-supplement-in needs a class
// and goes through has_supplement_in_class instead.
inline PropertyVerdict check_classical(const SubgroupLattice& lat, SubgroupId h, PropertyId id,
                                       const EmbeddingLimits& limits = {}) {
  PropertyVerdict v{id, true, {}};
  switch (id) {
    case PropertyId::pi_property: return satisfies_pi_property(lat, h);
    case PropertyId::pi_supplemented: return is_pi_supplemented(lat, h);
    case PropertyId::has_supplement_in:
      throw Error("has-supplement-in needs a class; use has_supplement_in_class");

    case PropertyId::complemented:
      return supplement_search(lat, h, id, [&](SubgroupId d) { return d == lat.trivial(); });

    case PropertyId::c_supplemented: {
      const SubgroupId core = core_of(lat, h);
      return supplement_search(lat, h, id, [&](SubgroupId d) { return lat.contains(core, d); });
    }

    case PropertyId::cap:
      if (auto bad = cap_failure(lat, h)) {
        v.holds = false;
        v.witness.chief_factor = bad;
      }
      return v;

    case PropertyId::cas:
      return supplement_search(lat, h, id, [&](SubgroupId d) { return cap_holds(lat, d); });

    case PropertyId::u_hypercentrally_embedded: {
      const SubgroupId z = hypercentre(lat, FormationId::U, core_of(lat, h));
      v.holds = lat.contains(z, normal_closure_of(lat, h));
      v.witness.other = z;
      return v;
    }

    case PropertyId::u_supplemented: {
      // (H n T)H_G <= Z iff H n T <= Z, since H_G <= Z
      const SubgroupId z = hypercentre(lat, FormationId::U, core_of(lat, h));
      return supplement_search(lat, h, id, [&](SubgroupId d) { return lat.contains(z, d); });
    }

    case PropertyId::s_quasinormal:
      if (lat.is_normal(h)) return v;
      if (auto bad = sylow_not_permuting(lat, h, false)) {
        v.holds = false;
        v.witness.other = bad;
      }
      return v;

    case PropertyId::s_semipermutable:
      if (auto bad = sylow_not_permuting(lat, h, true)) {
        v.holds = false;
        v.witness.other = bad;
      }
      return v;

    case PropertyId::s_qn_embedded:
      if (auto bad = s_qn_embedding_failure(lat, h)) {
        v.holds = false;
        v.witness.other = bad;
      }
      return v;

    case PropertyId::s_conditionally_permutable:
      v.holds = !s_conditional_failure(lat, h).has_value();
      return v;

    case PropertyId::completely_c_permutable:
      if (auto bad = ccp_failure(lat, h, limits)) {
        v.holds = false;
        v.witness.other = bad;
      }
      return v;

    case PropertyId::weakly_s_supplemented: {
      const SubgroupId hs = join_of_subgroups_with(lat, h, [&](SubgroupId s) { return s_quasinormal_holds(lat, s); });
      auto r = supplement_search(lat, h, id, [&](SubgroupId d) { return lat.contains(hs, d); });
      r.witness.intermediate = hs;
      return r;
    }

    case PropertyId::weakly_sbar_supplemented: {
      const SubgroupId hs =
          join_of_subgroups_with(lat, h, [&](SubgroupId s) { return s_semipermutable_holds(lat, s); });
      auto r = supplement_search(lat, h, id, [&](SubgroupId d) { return lat.contains(hs, d); });
      r.witness.intermediate = hs;
      return r;
    }

    case PropertyId::weakly_s_supp_embedded: {
      const auto inside_h = lat.subgroups_of(h);
      for (SubgroupId t : supplements(lat, h)) {
        const SubgroupId d = lat.meet(h, t);
        for (SubgroupId x : inside_h) {
          if (lat.contains(x, d) && s_qn_embedded_holds(lat, x)) return {id, true, Witness{t, x, {}, {}, {}}};
        }
      }
      return {id, false, {}};
    }

    case PropertyId::weakly_c_permutable:
      require_ccp_cap(lat, limits);
      return supplement_search(lat, h, id, [&](SubgroupId d) { return ccp_holds(lat, d, limits); });
  }
  return v;
}

// Boolean form of any property id (has-supplement-in excluded).
inline bool holds(const SubgroupLattice& lat, SubgroupId h, PropertyId id, const EmbeddingLimits& limits = {}) {
  switch (id) {
    case PropertyId::pi_property: return pi_property_holds(lat, h);
    case PropertyId::s_quasinormal: return s_quasinormal_holds(lat, h);
    case PropertyId::s_semipermutable: return s_semipermutable_holds(lat, h);
    case PropertyId::s_qn_embedded: return s_qn_embedded_holds(lat, h);
    case PropertyId::cap: return cap_holds(lat, h);
    case PropertyId::completely_c_permutable: return ccp_holds(lat, h, limits);
    default: return check_classical(lat, h, id, limits).holds;
  }
}

}  // namespace grouplab
