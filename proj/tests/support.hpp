#pragma once

// Conversions between library objects and the brute-force oracle.

#include <string>

#include "grouplab/grouplab.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Perm to_oracle(const grouplab::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline oracle::Set to_oracle(const grouplab::Subgroup& h) {
  oracle::Set s;
  for (auto e : h.elements()) s.insert(to_oracle(h.group().element(e)));
  return s;
}

inline oracle::Set to_oracle(const grouplab::FiniteGroup& g) {
  oracle::Set s;
  for (const auto& p : g.elements()) s.insert(to_oracle(p));
  return s;
}

inline const grouplab::CatalogEntry& builtin(const std::string& name) {
  static const auto catalog = grouplab::builtin_catalog();
  const auto* e = grouplab::find_entry(catalog, name);
  if (!e) throw std::runtime_error("no builtin group " + name);
  return *e;
}

inline const grouplab::FiniteGroup& group(const std::string& name) { return builtin(name).group; }

inline const std::vector<grouplab::CatalogEntry>& catalog() {
  static const auto c = grouplab::builtin_catalog();
  return c;
}

inline grouplab::Elem elem(const grouplab::FiniteGroup& g, std::vector<grouplab::Point> images) {
  return g.index_of(grouplab::Permutation(std::move(images))).value();
}

inline grouplab::SubgroupId id_of(const grouplab::SubgroupLattice& lat,
                                  std::initializer_list<std::vector<grouplab::Point>> gens) {
  std::vector<grouplab::Permutation> perms;
  for (const auto& g : gens) perms.emplace_back(g);
  return lat.id_of(grouplab::generate_by_permutations(lat.group(), perms));
}

}  // namespace support
