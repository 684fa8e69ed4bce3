#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplab/arith.hpp"
#include "grouplab/group.hpp"

namespace grouplab {

using SubgroupId = std::uint32_t;

struct LatticeLimits {
  std::size_t max_order = 400;
};

// Every subgroup of a group, sorted by (order, canonical member list):
// id 0 is the trivial subgroup and the last id is the whole group.
//
// The lattice is immutable once built.  Joins, conjugates and derived flags
// are memoized lazily behind locks, so a lattice may be shared by threads.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const FiniteGroup& g, LatticeLimits limits = {}) : group_(g) {
    if (g.order() > limits.max_order) {
      throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds lattice cap " +
                        std::to_string(limits.max_order));
    }
    enumerate();
    index_structure();
  }

  SubgroupLattice(const SubgroupLattice&) = delete;
  SubgroupLattice& operator=(const SubgroupLattice&) = delete;

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subs_[id]; }
  const std::vector<Subgroup>& all() const { return subs_; }
  std::size_t order(SubgroupId id) const { return subs_[id].order(); }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subs_.size() - 1); }

  std::optional<SubgroupId> find(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SubgroupId id_of(const Subgroup& s) const {
    auto id = find(s.members());
    if (!id) throw Error("subgroup not present in lattice");
    return *id;
  }

  // small <= big
  bool contains(SubgroupId big, SubgroupId small) const { return subs_[small].is_subgroup_of(subs_[big]); }

  const std::vector<SubgroupId>& normals() const { return normals_; }
  bool is_normal(SubgroupId id) const { return normalizer_[id] == whole(); }
  SubgroupId normalizer(SubgroupId id) const { return normalizer_[id]; }
  // T normalizes S
  bool normalized_by(SubgroupId s, SubgroupId t) const { return contains(normalizer_[s], t); }

  const std::vector<std::vector<SubgroupId>>& conjugacy_classes() const { return classes_; }
  std::uint32_t class_of(SubgroupId id) const { return class_of_[id]; }

  // id of S^g
  SubgroupId conjugate(SubgroupId id, Elem g) const {
    std::call_once(conj_once_[id], [&] {
      std::vector<SubgroupId> row(group_.order());
      for (Elem x = 0; x < group_.order(); ++x) row[x] = *find(grouplab::conjugate(subs_[id], x).members());
      conj_rows_[id] = std::move(row);
    });
    return conj_rows_[id][g];
  }

  SubgroupId meet(SubgroupId a, SubgroupId b) const {
    if (contains(b, a)) return a;
    if (contains(a, b)) return b;
    return *find(subs_[a].members() & subs_[b].members());
  }

  SubgroupId join(SubgroupId a, SubgroupId b) const {
    if (contains(a, b)) return a;
    if (contains(b, a)) return b;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    {
      std::lock_guard lock(memo_mutex_);
      auto it = joins_.find(key);
      if (it != joins_.end()) return it->second;
    }
    const SubgroupId j = *find(grouplab::join(subs_[a], subs_[b]).members());
    std::lock_guard lock(memo_mutex_);
    joins_.emplace(key, j);
    return j;
  }

  // AB = BA, i.e. the product set is a subgroup: |<A,B>| |A n B| = |A| |B|.
  bool permutes(SubgroupId a, SubgroupId b) const {
    return order(join(a, b)) * order(meet(a, b)) == order(a) * order(b);
  }

  // Members of the lattice contained in t, in id order.
  std::vector<SubgroupId> subgroups_of(SubgroupId t) const {
    std::vector<SubgroupId> out;
    for (SubgroupId s = 0; s < size(); ++s) {
      if (contains(t, s)) out.push_back(s);
    }
    return out;
  }

  // Memo for derived yes/no facts.  compute runs unlocked, so it may recurse
  // into other memoized queries; concurrent fills store the same value.
  template <class F>
  bool cached_flag(std::uint64_t key, F&& compute) const {
    {
      std::lock_guard lock(memo_mutex_);
      auto it = flags_.find(key);
      if (it != flags_.end()) return it->second;
    }
    const bool v = compute();
    std::lock_guard lock(memo_mutex_);
    flags_.emplace(key, v);
    return v;
  }

 private:
  void enumerate() {
    const FiniteGroup& g = group_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) {
      if (seen.contains(s.members())) return;
      seen.emplace(s.members(), found.size());
      found.push_back(std::move(s));
    };

    // one generator per cyclic subgroup
    std::vector<Elem> cyclic_gens;
    const Subgroup triv = trivial_subgroup(g);
    add(triv);
    for (Elem e = 1; e < g.order(); ++e) {
      Subgroup c = extend(triv, e);
      if (!seen.contains(c.members())) cyclic_gens.push_back(e);
      add(std::move(c));
    }
    // close under joins with cyclic subgroups
    for (std::size_t i = 1; i < found.size(); ++i) {
      for (Elem c : cyclic_gens) {
        if (found[i].contains(c)) continue;
        Subgroup j = extend(found[i], c);
        add(std::move(j));
      }
    }

    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.members() < b.members();
    });
    subs_ = std::move(found);
    for (SubgroupId i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i].members(), i);
  }

  void index_structure() {
    const std::size_t n = subs_.size();
    normalizer_.resize(n);
    for (SubgroupId i = 0; i < n; ++i) {
      normalizer_[i] = *find(grouplab::normalizer(subs_[i]).members());
      if (normalizer_[i] == whole()) normals_.push_back(i);
    }
    // conjugacy classes: orbits under conjugation by the generators
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    class_of_.assign(n, kUnset);
    for (SubgroupId i = 0; i < n; ++i) {
      if (class_of_[i] != kUnset) continue;
      const auto cls = static_cast<std::uint32_t>(classes_.size());
      std::vector<SubgroupId> orbit{i};
      class_of_[i] = cls;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (Elem x : group_.generator_indices()) {
          const SubgroupId c = *find(grouplab::conjugate(subs_[orbit[k]], x).members());
          if (class_of_[c] == kUnset) {
            class_of_[c] = cls;
            orbit.push_back(c);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes_.push_back(std::move(orbit));
    }
    conj_once_ = std::make_unique<std::once_flag[]>(n);
    conj_rows_.resize(n);
  }

  FiniteGroup group_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  std::vector<SubgroupId> normalizer_;
  std::vector<SubgroupId> normals_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<SubgroupId>> classes_;

  mutable std::unique_ptr<std::once_flag[]> conj_once_;
  mutable std::vector<std::vector<SubgroupId>> conj_rows_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, SubgroupId> joins_;
  mutable std::unordered_map<std::uint64_t, bool> flags_;
};

inline std::unique_ptr<SubgroupLattice> all_subgroups(const FiniteGroup& g, LatticeLimits limits = {}) {
  return std::make_unique<SubgroupLattice>(g, limits);
}

// ---------------------------------------------------------------------------
// Normal structure.  Functions taking a subgroup t treat t as a group in its
// own right; its subgroups are the lattice members inside it.

struct ChiefFactor {
  SubgroupId lower = 0;  // K
  SubgroupId upper = 0;  // L
  std::size_t order = 1;  // |L/K|
  bool abelian = false;
  std::optional<std::uint64_t> prime;  // when |L/K| is a prime power

  friend bool operator==(const ChiefFactor& a, const ChiefFactor& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

// Subgroups of t normal in t.
inline std::vector<SubgroupId> normal_subgroups_of(const SubgroupLattice& lat, SubgroupId t) {
  if (t == lat.whole()) return lat.normals();
  std::vector<SubgroupId> out;
  for (SubgroupId s = 0; s < lat.size(); ++s) {
    if (lat.contains(t, s) && lat.normalized_by(s, t)) out.push_back(s);
  }
  return out;
}

// L/K abelian: commutators of generators of L fall in K.
inline bool factor_is_abelian(const SubgroupLattice& lat, SubgroupId lower, SubgroupId upper) {
  const Subgroup& l = lat[upper];
  const Subgroup& k = lat[lower];
  const FiniteGroup& g = lat.group();
  for (Elem a : l.generators()) {
    for (Elem b : l.generators()) {
      if (!k.contains(g.commutator(a, b))) return false;
    }
  }
  return true;
}

inline ChiefFactor make_chief_factor(const SubgroupLattice& lat, SubgroupId lower, SubgroupId upper) {
  ChiefFactor cf;
  cf.lower = lower;
  cf.upper = upper;
  cf.order = lat.order(upper) / lat.order(lower);
  cf.abelian = factor_is_abelian(lat, lower, upper);
  cf.prime = prime_power_base(cf.order);
  return cf;
}

// Covering pairs (K, L) of the normal lattice of t with base <= K.  base
// must itself be normal in t; the result then lists the chief factors of t/base.
inline std::vector<ChiefFactor> chief_factors(const SubgroupLattice& lat, SubgroupId t, SubgroupId base) {
  std::vector<SubgroupId> ns;
  for (SubgroupId s : normal_subgroups_of(lat, t)) {
    if (lat.contains(s, base)) ns.push_back(s);
  }
  std::vector<ChiefFactor> out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = 0; j < ns.size(); ++j) {
      const SubgroupId k = ns[i];
      const SubgroupId l = ns[j];
      if (k == l || !lat.contains(l, k)) continue;
      bool covering = true;
      for (SubgroupId m : ns) {
        if (m != k && m != l && lat.contains(l, m) && lat.contains(m, k)) {
          covering = false;
          break;
        }
      }
      if (covering) out.push_back(make_chief_factor(lat, k, l));
    }
  }
  std::sort(out.begin(), out.end(), [](const ChiefFactor& a, const ChiefFactor& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return out;
}

// Every chief factor of G: all covering pairs of the normal lattice.
inline std::vector<ChiefFactor> chief_factor_pairs(const SubgroupLattice& lat) {
  return chief_factors(lat, lat.whole(), lat.trivial());
}

// One maximal chain 1 = N0 < ... < Nk = G of normal subgroups, taking the
// covering normal subgroup of smallest id at each step.
inline std::vector<SubgroupId> chief_series(const SubgroupLattice& lat) {
  const auto pairs = chief_factor_pairs(lat);
  std::vector<SubgroupId> series{lat.trivial()};
  while (series.back() != lat.whole()) {
    for (const auto& cf : pairs) {
      if (cf.lower == series.back()) {
        series.push_back(cf.upper);
        break;
      }
    }
  }
  return series;
}

inline std::vector<SubgroupId> minimal_normal_subgroups(const SubgroupLattice& lat) {
  std::vector<SubgroupId> out;
  for (const auto& cf : chief_factor_pairs(lat)) {
    if (cf.lower == lat.trivial()) out.push_back(cf.upper);
  }
  return out;
}

// Maximal subgroups of t (co-atoms of its subgroup lattice).
inline std::vector<SubgroupId> maximal_subgroups(const SubgroupLattice& lat, SubgroupId t) {
  const auto subs = lat.subgroups_of(t);
  std::vector<SubgroupId> out;
  for (SubgroupId s : subs) {
    if (s == t) continue;
    bool maximal = true;
    for (SubgroupId m : subs) {
      if (m != s && m != t && lat.contains(m, s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline std::vector<SubgroupId> maximal_subgroups(const SubgroupLattice& lat) {
  return maximal_subgroups(lat, lat.whole());
}

// Intersection of the maximal subgroups of t; t itself when there are none.
inline SubgroupId frattini(const SubgroupLattice& lat, SubgroupId t) {
  SubgroupId f = t;
  for (SubgroupId m : maximal_subgroups(lat, t)) f = lat.meet(f, m);
  return f;
}

inline SubgroupId frattini(const SubgroupLattice& lat) { return frattini(lat, lat.whole()); }

inline std::vector<SubgroupId> hall_subgroups(const SubgroupLattice& lat, const PrimeSet& pi, SubgroupId t) {
  const std::uint64_t target = pi_part(lat.order(t), pi);
  std::vector<SubgroupId> out;
  for (SubgroupId s : lat.subgroups_of(t)) {
    if (lat.order(s) == target) out.push_back(s);
  }
  return out;
}

inline std::vector<SubgroupId> hall_subgroups(const SubgroupLattice& lat, const PrimeSet& pi) {
  return hall_subgroups(lat, pi, lat.whole());
}

inline std::vector<SubgroupId> sylow_subgroups(const SubgroupLattice& lat, std::uint64_t p, SubgroupId t) {
  return hall_subgroups(lat, PrimeSet{p}, t);
}

inline std::vector<SubgroupId> sylow_subgroups(const SubgroupLattice& lat, std::uint64_t p) {
  return sylow_subgroups(lat, p, lat.whole());
}

// Hall pi-subgroups exist and form a single conjugacy class.
inline bool is_c_pi(const SubgroupLattice& lat, const PrimeSet& pi) {
  const auto halls = hall_subgroups(lat, pi);
  if (halls.empty()) return false;
  const auto cls = lat.class_of(halls.front());
  return std::all_of(halls.begin(), halls.end(), [&](SubgroupId h) { return lat.class_of(h) == cls; });
}

// p when t is a nontrivial p-group.
inline std::optional<std::uint64_t> p_group_prime(const SubgroupLattice& lat, SubgroupId t) {
  return prime_power_base(lat.order(t));
}

// Omega_k(P): generated by the elements x of P with x^(p^k) = 1.
inline SubgroupId omega(const SubgroupLattice& lat, SubgroupId p_group, unsigned k) {
  const std::size_t n = lat.order(p_group);
  if (n == 1) return p_group;
  const auto p = prime_power_base(n);
  if (!p) throw NotPGroup("omega of a subgroup that is not a p-group");
  std::uint64_t bound = 1;
  for (unsigned i = 0; i < k; ++i) bound *= *p;
  std::vector<Elem> gens;
  lat[p_group].members().for_each([&](Elem x) {
    if (bound % lat.group().element_order(x) == 0) gens.push_back(x);
  });
  return lat.id_of(generate(lat.group(), gens));
}

}  // namespace grouplab
