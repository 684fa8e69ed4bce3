#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplab/element_set.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab {

struct GroupLimits {
  std::size_t max_elements = 100000;
};

namespace detail {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = p.degree();
    for (Point x : p.images()) h = h * 1000003u ^ x;
    return h;
  }
};

// Groups up to this order carry a full multiplication table.
inline constexpr std::size_t kTableLimit = 1024;

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Elem> generator_index;
  std::vector<Permutation> elements;  // sorted; elements[0] is the identity
  std::unordered_map<Permutation, Elem, PermutationHash> lookup;
  std::vector<Elem> inverse;
  std::vector<std::uint32_t> element_order;
  std::vector<Elem> table;  // row-major n*n, empty above kTableLimit
};

}  // namespace detail

// A permutation group with its complete, canonically sorted element list.
// Cheap to copy; all copies share the same immutable data.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  std::span<const Elem> generator_indices() const { return data_->generator_index; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& element(Elem e) const { return data_->elements[e]; }

  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *data_;
    if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.elements.size() + b];
    return d.lookup.at(d.elements[a] * d.elements[b]);
  }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  // g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::uint64_t k) const {
    Elem r = identity();
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  std::uint32_t element_order(Elem a) const { return data_->element_order[a]; }

  std::optional<Elem> index_of(const Permutation& p) const {
    auto it = data_->lookup.find(p);
    if (it == data_->lookup.end()) return std::nullopt;
    return it->second;
  }

  bool is_abelian() const {
    const auto gens = generator_indices();
    for (Elem a : gens) {
      for (Elem b : gens) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  bool valid() const { return data_ != nullptr; }
  bool same_as(const FiniteGroup& o) const { return data_ == o.data_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ ||
           (a.degree() == b.degree() && a.data_->elements == b.data_->elements);
  }

  friend FiniteGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                           GroupLimits limits);

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> data_;
};

// Breadth-first closure of the generators.  The result's element list is
// sorted lexicographically on image arrays (identity first).
inline FiniteGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                         GroupLimits limits = {}) {
  if (degree == 0) throw BadPermutation("degree must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw BadPermutation("generator " + g.to_string() + " does not have degree " + std::to_string(degree));
    }
  }
  // closure, remembering for each element its BFS parent and the generator used
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  std::unordered_map<Permutation, std::size_t, detail::PermutationHash> seen{{found[0], 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Permutation next = found[i] * gens[g];
      if (seen.contains(next)) continue;
      if (found.size() >= limits.max_elements) {
        throw CapExceeded("group closure exceeds element cap " + std::to_string(limits.max_elements));
      }
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
      parent.push_back(i);
      via.push_back(g);
    }
  }

  const std::size_t n = found.size();
  std::vector<std::size_t> order_by(n);
  for (std::size_t i = 0; i < n; ++i) order_by[i] = i;
  std::sort(order_by.begin(), order_by.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<Elem> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order_by[r]] = static_cast<Elem>(r);

  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->generators = gens;
  d->elements.reserve(n);
  for (std::size_t r = 0; r < n; ++r) d->elements.push_back(found[order_by[r]]);
  d->lookup.reserve(n);
  for (std::size_t r = 0; r < n; ++r) d->lookup.emplace(d->elements[r], static_cast<Elem>(r));
  for (const auto& g : gens) d->generator_index.push_back(d->lookup.at(g));

  if (n <= detail::kTableLimit) {
    // right multiplication by generators, then extend along BFS words:
    // x * w = (x * parent(w)) * gen(w)
    const std::size_t k = gens.size();
    std::vector<Elem> right(n * k);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < k; ++g) right[x * k + g] = d->lookup.at(d->elements[x] * gens[g]);
    }
    d->table.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      Elem* row = &d->table[x * n];
      for (std::size_t i = 0; i < n; ++i) {
        const Elem w = rank[i];
        row[w] = (i == 0) ? static_cast<Elem>(x) : right[row[rank[parent[i]]] * k + via[i]];
      }
    }
  }

  d->inverse.resize(n);
  d->element_order.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    d->inverse[r] = d->lookup.at(d->elements[r].inverse());
    d->element_order[r] = static_cast<std::uint32_t>(d->elements[r].order());
  }
  return FiniteGroup(std::move(d));
}

// G1 x G2 acting on the disjoint union of the point sets.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, GroupLimits limits = {}) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(img));
  }
  return group_from_generators(da + db, gens, limits);
}

// A subgroup of a FiniteGroup: its member set plus some generating set.
// Equality compares member sets only.
class Subgroup {
 public:
  Subgroup() = default;

  // Trusted constructor: members must be a subgroup generated by gens.
  Subgroup(FiniteGroup g, ElementSet members, std::vector<Elem> gens)
      : group_(std::move(g)), members_(std::move(members)), gens_(std::move(gens)), order_(members_.count()) {}

  const FiniteGroup& group() const { return group_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Elem e) const { return members_.test(e); }
  std::span<const Elem> generators() const { return gens_; }
  std::vector<Elem> elements() const { return members_.to_vector(); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == group_.order(); }
  bool is_subgroup_of(const Subgroup& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  FiniteGroup group_;
  ElementSet members_;
  std::vector<Elem> gens_;
  std::size_t order_ = 0;
};

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!(a.group() == b.group())) throw ParentMismatch("subgroups belong to different groups");
}

// <H, g>
inline Subgroup extend(const Subgroup& h, Elem g) {
  if (h.contains(g)) return h;
  const FiniteGroup& grp = h.group();
  std::vector<Elem> gens(h.generators().begin(), h.generators().end());
  gens.push_back(g);
  ElementSet members = h.members();
  std::vector<Elem> list = h.elements();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = grp.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
  return Subgroup(grp, std::move(members), std::move(gens));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet m(g.order());
  m.set(FiniteGroup::identity());
  return Subgroup(g, std::move(m), {});
}

inline Subgroup whole_group(const FiniteGroup& g) {
  ElementSet m(g.order());
  for (Elem e = 0; e < g.order(); ++e) m.set(e);
  auto gi = g.generator_indices();
  return Subgroup(g, std::move(m), std::vector<Elem>(gi.begin(), gi.end()));
}

inline Subgroup generate(const FiniteGroup& g, std::span<const Elem> gens) {
  Subgroup s = trivial_subgroup(g);
  for (Elem x : gens) {
    if (x != FiniteGroup::identity()) s = extend(s, x);
  }
  return s;
}

inline Subgroup generate(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  return generate(g, std::span<const Elem>(gens.begin(), gens.size()));
}

// Subgroup generated by explicit permutations, which must lie in g.
inline Subgroup generate_by_permutations(const FiniteGroup& g, const std::vector<Permutation>& perms) {
  std::vector<Elem> idx;
  for (const auto& p : perms) {
    auto e = g.index_of(p);
    if (!e) throw BadPermutation(p.to_string() + " is not an element of the group");
    idx.push_back(*e);
  }
  return generate(g, idx);
}

// Build the subgroup with the given member set, choosing generators greedily
// in canonical order.  Throws if the set is not a subgroup.
inline Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (!members.test(FiniteGroup::identity())) throw Error("element set does not contain the identity");
  Subgroup s = trivial_subgroup(g);
  bool ok = true;
  members.for_each([&](Elem e) {
    if (!ok || s.contains(e)) return;
    s = extend(s, e);
    if (!s.members().is_subset_of(members)) ok = false;
  });
  if (!ok || !(s.members() == members)) throw Error("element set is not closed under the group operation");
  return s;
}

// Greedy generating set in canonical element order; deterministic for a
// given member set.
inline std::vector<Elem> canonical_generators(const Subgroup& h) {
  const Subgroup s = make_subgroup(h.group(), h.members());
  return {s.generators().begin(), s.generators().end()};
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  Subgroup s = a;
  for (Elem x : b.generators()) s = extend(s, x);
  return s;
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  return make_subgroup(a.group(), a.members() & b.members());
}

// H^g = g^-1 H g
inline Subgroup conjugate(const Subgroup& h, Elem g) {
  const FiniteGroup& grp = h.group();
  ElementSet m(grp.order());
  h.members().for_each([&](Elem x) { m.set(grp.conj(x, g)); });
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(grp.conj(x, g));
  return Subgroup(grp, std::move(m), std::move(gens));
}

// Elements of g commuting with every element of s.
inline Subgroup centralizer(const FiniteGroup& g, const ElementSet& s) {
  const std::vector<Elem> xs = s.to_vector();
  ElementSet m(g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    bool commutes = true;
    for (Elem x : xs) {
      if (g.mul(c, x) != g.mul(x, c)) {
        commutes = false;
        break;
      }
    }
    if (commutes) m.set(c);
  }
  return make_subgroup(g, m);
}

// Centralizer of a subgroup; checking its generators suffices.
inline Subgroup centralizer(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  ElementSet gens(g.order());
  for (Elem x : h.generators()) gens.set(x);
  return centralizer(g, gens);
}

inline bool normalizes(const Subgroup& h, Elem g) {
  const FiniteGroup& grp = h.group();
  for (Elem x : h.generators()) {
    if (!h.contains(grp.conj(x, g))) return false;
  }
  return true;
}

inline Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  ElementSet m(g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    if (normalizes(h, c)) m.set(c);
  }
  return make_subgroup(g, m);
}

inline bool is_normal(const Subgroup& h) {
  for (Elem g : h.group().generator_indices()) {
    if (!normalizes(h, g)) return false;
  }
  return true;
}

// Largest normal subgroup of the parent inside h: the intersection of all conjugates.
inline Subgroup core(const Subgroup& h) {
  if (is_normal(h)) return h;
  const FiniteGroup& g = h.group();
  ElementSet m = h.members();
  for (Elem c = 0; c < g.order(); ++c) {
    ElementSet conj(g.order());
    h.members().for_each([&](Elem x) { conj.set(g.conj(x, c)); });
    m &= conj;
  }
  return make_subgroup(g, m);
}

// Smallest normal subgroup containing h: close under conjugation by the
// parent's generators.
inline Subgroup normal_closure(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  Subgroup s = h;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> gens(s.generators().begin(), s.generators().end());
    for (Elem x : gens) {
      for (Elem c : g.generator_indices()) {
        const Elem y = g.conj(x, c);
        if (!s.contains(y)) {
          s = extend(s, y);
          grew = true;
        }
      }
    }
  }
  return s;
}

struct ProductSet {
  ElementSet elements;  // { hk : h in H, k in K }
  bool permutes = false;  // HK == KH
};

inline ProductSet subgroup_product(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const FiniteGroup& g = h.group();
  ElementSet hk(g.order());
  ElementSet kh(g.order());
  const auto hs = h.elements();
  const auto ks = k.elements();
  for (Elem x : hs) {
    for (Elem y : ks) {
      hk.set(g.mul(x, y));
      kh.set(g.mul(y, x));
    }
  }
  const bool same = hk == kh;
  return ProductSet{std::move(hk), same};
}

}  // namespace grouplab
