#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/lattice.hpp"

namespace grouplab {

// The two formations available as parameters: supersoluble (U) and soluble (S).
enum class FormationId { U, S };

inline std::string_view to_string(FormationId f) { return f == FormationId::U ? "U" : "S"; }

inline PrimeSet pi_of(const Subgroup& h) { return PrimeSet::of(h.order()); }

enum class GroupClass {
  abelian,
  cyclic,
  nilpotent,
  soluble,
  supersoluble,
  p_supersoluble,
  p_nilpotent,
  pi_closed,
};

struct ClassSpec {
  GroupClass kind = GroupClass::soluble;
  std::uint64_t p = 0;  // p_supersoluble, p_nilpotent
  PrimeSet pi;          // pi_closed

  static ClassSpec of(GroupClass k) { return ClassSpec{k, 0, {}}; }
  static ClassSpec p_supersoluble(std::uint64_t p) { return ClassSpec{GroupClass::p_supersoluble, p, {}}; }
  static ClassSpec p_nilpotent(std::uint64_t p) { return ClassSpec{GroupClass::p_nilpotent, p, {}}; }
  static ClassSpec pi_closed(PrimeSet pi) { return ClassSpec{GroupClass::pi_closed, 0, std::move(pi)}; }

  std::string to_string() const {
    switch (kind) {
      case GroupClass::abelian: return "abelian";
      case GroupClass::cyclic: return "cyclic";
      case GroupClass::nilpotent: return "nilpotent";
      case GroupClass::soluble: return "soluble";
      case GroupClass::supersoluble: return "supersoluble";
      case GroupClass::p_supersoluble: return std::to_string(p) + "-supersoluble";
      case GroupClass::p_nilpotent: return std::to_string(p) + "-nilpotent";
      case GroupClass::pi_closed: return pi.to_string() + "-closed";
    }
    return "?";
  }
};

// Inverse of ClassSpec::to_string: "soluble", "2-supersoluble", "{2,3}-closed", ...
inline ClassSpec parse_class_spec(std::string_view text) {
  auto prime_at = [&](std::string_view digits) {
    std::uint64_t v = 0;
    if (digits.empty() || digits.size() > 9) throw ParseError("bad prime in class '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad prime in class '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (!is_prime(v)) throw ParseError(std::to_string(v) + " is not prime");
    return v;
  };
  for (auto k : {GroupClass::abelian, GroupClass::cyclic, GroupClass::nilpotent, GroupClass::soluble,
                 GroupClass::supersoluble}) {
    if (text == ClassSpec::of(k).to_string()) return ClassSpec::of(k);
  }
  if (text.starts_with("{") && text.ends_with("}-closed")) {
    const auto body = text.substr(1, text.size() - std::string_view("{}-closed").size());
    std::vector<std::uint64_t> ps;
    std::size_t start = 0;
    for (;;) {
      const auto comma = body.find(',', start);
      ps.push_back(prime_at(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return ClassSpec::pi_closed(PrimeSet(std::move(ps)));
  }
  const auto dash = text.find('-');
  if (dash != std::string_view::npos) {
    const auto rest = text.substr(dash + 1);
    if (rest == "supersoluble") return ClassSpec::p_supersoluble(prime_at(text.substr(0, dash)));
    if (rest == "nilpotent") return ClassSpec::p_nilpotent(prime_at(text.substr(0, dash)));
  }
  throw ParseError("unknown group class '" + std::string(text) + "'");
}

namespace detail {

// memo key layout: tag (8 bits) | parameter (24 bits) | subgroup id (32 bits)
inline std::uint64_t memo_key(std::uint64_t tag, std::uint64_t param, SubgroupId id) {
  return (tag << 56) | ((param & 0xffffff) << 32) | id;
}

enum : std::uint64_t {
  kTagAbelian = 1,
  kTagCyclic,
  kTagNilpotent,
  kTagSoluble,
  kTagSupersoluble,
  kTagPSupersoluble,
  kTagPNilpotent,
  kTagQuasinilpotent,
  kTagQuaternionFree,
  kTagFirstFree = 32,  // higher layers allocate tags from here
};

inline bool compute_class(const SubgroupLattice& lat, SubgroupId t, const ClassSpec& c) {
  const FiniteGroup& g = lat.group();
  const std::size_t n = lat.order(t);
  switch (c.kind) {
    case GroupClass::abelian: {
      const auto gens = lat[t].generators();
      for (Elem a : gens) {
        for (Elem b : gens) {
          if (g.mul(a, b) != g.mul(b, a)) return false;
        }
      }
      return true;
    }
    case GroupClass::cyclic: {
      bool found = false;
      lat[t].members().for_each([&](Elem x) { found = found || g.element_order(x) == n; });
      return found;
    }
    case GroupClass::nilpotent:
      for (auto p : PrimeSet::of(n)) {
        if (sylow_subgroups(lat, p, t).size() != 1) return false;
      }
      return true;
    case GroupClass::soluble:
      for (const auto& cf : chief_factors(lat, t, lat.trivial())) {
        if (!cf.abelian) return false;
      }
      return true;
    case GroupClass::supersoluble:
      for (const auto& cf : chief_factors(lat, t, lat.trivial())) {
        if (!is_prime(cf.order)) return false;
      }
      return true;
    case GroupClass::p_supersoluble:
      for (const auto& cf : chief_factors(lat, t, lat.trivial())) {
        if (cf.order % c.p == 0 && cf.order != c.p) return false;
      }
      return true;
    case GroupClass::p_nilpotent: {
      const std::size_t target = n / p_part(n, c.p);
      for (SubgroupId s : normal_subgroups_of(lat, t)) {
        if (lat.order(s) == target) return true;
      }
      return false;
    }
    case GroupClass::pi_closed: {
      const std::size_t target = pi_part(n, c.pi);
      for (SubgroupId s : normal_subgroups_of(lat, t)) {
        if (lat.order(s) == target) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace detail

// Class membership of the subgroup t, viewed as a group.
inline bool class_predicate(const SubgroupLattice& lat, SubgroupId t, const ClassSpec& c) {
  if (c.kind == GroupClass::pi_closed) return detail::compute_class(lat, t, c);
  std::uint64_t tag = 0;
  switch (c.kind) {
    case GroupClass::abelian: tag = detail::kTagAbelian; break;
    case GroupClass::cyclic: tag = detail::kTagCyclic; break;
    case GroupClass::nilpotent: tag = detail::kTagNilpotent; break;
    case GroupClass::soluble: tag = detail::kTagSoluble; break;
    case GroupClass::supersoluble: tag = detail::kTagSupersoluble; break;
    case GroupClass::p_supersoluble: tag = detail::kTagPSupersoluble; break;
    case GroupClass::p_nilpotent: tag = detail::kTagPNilpotent; break;
    case GroupClass::pi_closed: break;
  }
  return lat.cached_flag(detail::memo_key(tag, c.p, t), [&] { return detail::compute_class(lat, t, c); });
}

inline bool is_abelian(const SubgroupLattice& lat, SubgroupId t) {
  return class_predicate(lat, t, ClassSpec::of(GroupClass::abelian));
}
inline bool is_cyclic(const SubgroupLattice& lat, SubgroupId t) {
  return class_predicate(lat, t, ClassSpec::of(GroupClass::cyclic));
}
inline bool is_nilpotent(const SubgroupLattice& lat, SubgroupId t) {
  return class_predicate(lat, t, ClassSpec::of(GroupClass::nilpotent));
}
inline bool is_soluble(const SubgroupLattice& lat, SubgroupId t) {
  return class_predicate(lat, t, ClassSpec::of(GroupClass::soluble));
}
inline bool is_supersoluble(const SubgroupLattice& lat, SubgroupId t) {
  return class_predicate(lat, t, ClassSpec::of(GroupClass::supersoluble));
}
inline bool is_p_supersoluble(const SubgroupLattice& lat, SubgroupId t, std::uint64_t p) {
  return class_predicate(lat, t, ClassSpec::p_supersoluble(p));
}
inline bool is_p_nilpotent(const SubgroupLattice& lat, SubgroupId t, std::uint64_t p) {
  return class_predicate(lat, t, ClassSpec::p_nilpotent(p));
}
inline bool is_pi_closed(const SubgroupLattice& lat, SubgroupId t, const PrimeSet& pi) {
  return class_predicate(lat, t, ClassSpec::pi_closed(pi));
}

// Every element of t induces an inner automorphism on every chief factor of t.
// The elements doing so form a subgroup, so generators of t suffice, and an
// automorphism of L/K is fixed by its action on generators of L.
inline bool is_quasinilpotent(const SubgroupLattice& lat, SubgroupId t) {
  return lat.cached_flag(detail::memo_key(detail::kTagQuasinilpotent, 0, t), [&] {
    const FiniteGroup& g = lat.group();
    for (const auto& cf : chief_factors(lat, t, lat.trivial())) {
      const Subgroup& k = lat[cf.lower];
      const Subgroup& l = lat[cf.upper];
      const auto lgens = l.generators();
      const auto ls = l.elements();
      for (Elem x : lat[t].generators()) {
        bool inner = false;
        for (Elem y : ls) {
          bool same = true;
          for (Elem a : lgens) {
            const Elem by_x = g.conj(a, x);
            const Elem by_y = g.conj(a, y);
            if (!k.contains(g.mul(g.inv(by_y), by_x))) {
              same = false;
              break;
            }
          }
          if (same) {
            inner = true;
            break;
          }
        }
        if (!inner) return false;
      }
    }
    return true;
  });
}

namespace detail {

// Largest member of a family of normal subgroups that must contain all others.
template <class Pred>
SubgroupId unique_maximum(const SubgroupLattice& lat, const std::vector<SubgroupId>& candidates, Pred pred,
                          const char* what) {
  std::vector<SubgroupId> hits;
  for (SubgroupId s : candidates) {
    if (pred(s)) hits.push_back(s);
  }
  if (hits.empty()) throw RadicalNotUnique(std::string(what) + ": no candidate");
  SubgroupId best = hits.front();
  for (SubgroupId s : hits) {
    if (lat.order(s) > lat.order(best)) best = s;
  }
  for (SubgroupId s : hits) {
    if (!lat.contains(best, s)) throw RadicalNotUnique(std::string(what) + ": maximum is not unique");
  }
  return best;
}

}  // namespace detail

inline SubgroupId fitting(const SubgroupLattice& lat) {
  return detail::unique_maximum(lat, lat.normals(), [&](SubgroupId s) { return is_nilpotent(lat, s); },
                                "Fitting subgroup");
}

// Largest normal quasinilpotent subgroup.
inline SubgroupId generalized_fitting(const SubgroupLattice& lat, SubgroupId t) {
  return detail::unique_maximum(lat, normal_subgroups_of(lat, t),
                                [&](SubgroupId s) { return is_quasinilpotent(lat, s); },
                                "generalized Fitting subgroup");
}

inline SubgroupId generalized_fitting(const SubgroupLattice& lat) { return generalized_fitting(lat, lat.whole()); }

// No section S/N of the 2-group P is isomorphic to Q8.  A group of order 8
// is Q8 exactly when it is non-abelian with a single involution.
inline bool is_quaternion_free(const SubgroupLattice& lat, SubgroupId p_group) {
  const std::size_t n = lat.order(p_group);
  if (n != 1 && !is_power_of(n, 2)) throw NotPGroup("quaternion-freeness needs a 2-group");
  return lat.cached_flag(detail::memo_key(detail::kTagQuaternionFree, 0, p_group), [&] {
    const FiniteGroup& g = lat.group();
    for (SubgroupId s : lat.subgroups_of(p_group)) {
      if (lat.order(s) < 8) continue;
      for (SubgroupId k : lat.subgroups_of(s)) {
        if (lat.order(s) != 8 * lat.order(k) || !lat.normalized_by(k, s)) continue;
        if (factor_is_abelian(lat, k, s)) continue;
        std::size_t involutions = 0;
        lat[s].members().for_each([&](Elem x) {
          if (!lat[k].contains(x) && lat[k].contains(g.mul(x, x))) ++involutions;
        });
        if (involutions / lat.order(k) == 1) return false;
      }
    }
    return true;
  });
}

// Omega(P) convention: Omega_1 for odd p or quaternion-free P, Omega_2 otherwise.
inline SubgroupId omega_convention(const SubgroupLattice& lat, SubgroupId p_group) {
  const auto p = p_group_prime(lat, p_group);
  if (!p) {
    if (lat.order(p_group) == 1) return p_group;
    throw NotPGroup("omega of a subgroup that is not a p-group");
  }
  if (*p != 2 || is_quaternion_free(lat, p_group)) return omega(lat, p_group, 1);
  return omega(lat, p_group, 2);
}

// C_G(L/K) = { g : [g, l] in K for all l in L }.
inline SubgroupId chief_centralizer(const SubgroupLattice& lat, const ChiefFactor& cf) {
  const FiniteGroup& g = lat.group();
  const Subgroup& k = lat[cf.lower];
  const auto lgens = lat[cf.upper].generators();
  ElementSet m(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem l : lgens) {
      if (!k.contains(g.commutator(x, l))) {
        central = false;
        break;
      }
    }
    if (central) m.set(x);
  }
  return *lat.find(m);
}

// G/base lies in F: every chief factor of G above base is of prime order (U)
// or abelian (S).
inline bool quotient_in_formation(const SubgroupLattice& lat, SubgroupId base, FormationId f) {
  for (const auto& cf : chief_factors(lat, lat.whole(), base)) {
    if (f == FormationId::U ? !is_prime(cf.order) : !cf.abelian) return false;
  }
  return true;
}

inline bool in_formation(const SubgroupLattice& lat, SubgroupId t, FormationId f) {
  return f == FormationId::U ? is_supersoluble(lat, t) : is_soluble(lat, t);
}

// (L/K) x| (G/C_G(L/K)) in F.  For U this is |L/K| prime: the automizer of a
// prime-order factor embeds in the cyclic group of order p-1, and a factor of
// any other order already keeps the semidirect product out of U.  For S it is
// an abelian factor with soluble automizer.
inline bool f_central(const SubgroupLattice& lat, const ChiefFactor& cf, FormationId f) {
  if (f == FormationId::U) return is_prime(cf.order);
  if (!cf.abelian) return false;
  return quotient_in_formation(lat, chief_centralizer(lat, cf), FormationId::S);
}

// Z_F(G/base) as a subgroup of G: the largest normal Z >= base all of whose
// G-chief factors between base and Z are F-central.
inline SubgroupId hypercentre(const SubgroupLattice& lat, FormationId f, SubgroupId base) {
  const auto factors = chief_factors(lat, lat.whole(), base);
  std::vector<bool> central(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) central[i] = f_central(lat, factors[i], f);
  std::vector<SubgroupId> above;
  for (SubgroupId n : lat.normals()) {
    if (lat.contains(n, base)) above.push_back(n);
  }
  return detail::unique_maximum(
      lat, above,
      [&](SubgroupId z) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (lat.contains(z, factors[i].upper) && !central[i]) return false;
        }
        return true;
      },
      "hypercentre");
}

inline SubgroupId hypercentre(const SubgroupLattice& lat, FormationId f) {
  return hypercentre(lat, f, lat.trivial());
}

// Z_U(G/base) by repeatedly absorbing prime-order minimal normal subgroups
// of G/Z.  Used to cross-check the definitional computation.
inline SubgroupId hypercentre_greedy(const SubgroupLattice& lat, SubgroupId base) {
  SubgroupId z = base;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& cf : chief_factors(lat, lat.whole(), z)) {
      if (cf.lower == z && is_prime(cf.order)) {
        z = cf.upper;
        grew = true;
        break;
      }
    }
  }
  return z;
}

inline SubgroupId hypercentre_greedy(const SubgroupLattice& lat) { return hypercentre_greedy(lat, lat.trivial()); }

// G/base is p-nilpotent: it has a normal subgroup of order |G/base|_{p'}.
inline bool quotient_is_p_nilpotent(const SubgroupLattice& lat, SubgroupId base, std::uint64_t p) {
  const std::size_t q = lat.order(lat.whole()) / lat.order(base);
  const std::size_t target = q / p_part(q, p);
  for (SubgroupId n : lat.normals()) {
    if (lat.contains(n, base) && lat.order(n) / lat.order(base) == target) return true;
  }
  return false;
}

// Largest normal subgroup of G inside h.
inline SubgroupId core_of(const SubgroupLattice& lat, SubgroupId h) {
  SubgroupId best = lat.trivial();
  for (SubgroupId n : lat.normals()) {
    if (lat.contains(h, n) && lat.order(n) > lat.order(best)) best = n;
  }
  return best;
}

// Smallest normal subgroup of G containing h.
inline SubgroupId normal_closure_of(const SubgroupLattice& lat, SubgroupId h) {
  SubgroupId best = lat.whole();
  for (SubgroupId n : lat.normals()) {
    if (lat.contains(n, h) && lat.order(n) < lat.order(best)) best = n;
  }
  return best;
}

}  // namespace grouplab
