#pragma once

#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

// G/N realized as the permutation action of G on the right cosets of N.
struct QuotientMap {
  FiniteGroup source;
  Subgroup kernel;
  FiniteGroup image;
  std::vector<Elem> projection;  // source element index -> image element index

  Elem project(Elem g) const { return projection[g]; }

  // Image of a subgroup H of the source, i.e. HN/N.
  Subgroup project(const Subgroup& h) const {
    ElementSet m(image.order());
    h.members().for_each([&](Elem x) { m.set(projection[x]); });
    std::vector<Elem> gens;
    for (Elem x : h.generators()) gens.push_back(projection[x]);
    return Subgroup(image, std::move(m), std::move(gens));
  }

  // Full preimage of a subgroup of the image; always contains the kernel.
  Subgroup preimage(const Subgroup& s) const {
    ElementSet m(source.order());
    for (Elem g = 0; g < source.order(); ++g) {
      if (s.contains(projection[g])) m.set(g);
    }
    return make_subgroup(source, m);
  }
};

inline QuotientMap quotient(const Subgroup& n, GroupLimits limits = {}) {
  if (!is_normal(n)) throw NotNormal("quotient by a subgroup that is not normal");
  const FiniteGroup& g = n.group();
  const std::size_t order = g.order();

  // label right cosets Nx in order of their smallest element
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(order, kUnset);
  std::vector<Elem> reps;
  const auto kernel_elems = n.elements();
  for (Elem x = 0; x < order; ++x) {
    if (label[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem k : kernel_elems) label[g.mul(k, x)] = id;
  }
  const std::size_t cosets = reps.size();

  auto action = [&](Elem x) {
    std::vector<Point> img(cosets);
    for (std::size_t c = 0; c < cosets; ++c) img[c] = label[g.mul(reps[c], x)];
    return Permutation(std::move(img));
  };

  std::vector<Permutation> gens;
  for (Elem x : g.generator_indices()) gens.push_back(action(x));
  FiniteGroup image = group_from_generators(cosets, gens, limits);

  // cosets are ordered by representative, so coset_of(x) determines the image
  std::vector<Elem> coset_image(cosets);
  for (std::size_t c = 0; c < cosets; ++c) coset_image[c] = *image.index_of(action(reps[c]));
  std::vector<Elem> projection(order);
  for (Elem x = 0; x < order; ++x) projection[x] = coset_image[label[x]];

  return QuotientMap{g, n, std::move(image), std::move(projection)};
}

}  // namespace grouplab
