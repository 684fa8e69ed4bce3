#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "grouplab/group.hpp"

namespace grouplab {

// One group definition as stored in a catalog file.
struct GroupSpec {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::vector<Point>> generators;
  std::optional<std::size_t> expected_order;
};

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::optional<std::size_t> expected_order;
};

inline constexpr const char* kBuiltinCatalogVersion = "builtin-1";

inline nlohmann::ordered_json to_json(const GroupSpec& spec) {
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  j["degree"] = spec.degree;
  j["generators"] = spec.generators;
  if (spec.expected_order) j["expected_order"] = *spec.expected_order;
  return j;
}

inline GroupSpec spec_of(const CatalogEntry& e) {
  GroupSpec s{e.name, e.group.degree(), {}, e.expected_order};
  for (const auto& g : e.group.generators()) s.generators.emplace_back(g.images().begin(), g.images().end());
  return s;
}

inline GroupSpec parse_group_spec(const nlohmann::json& j) {
  try {
    GroupSpec s;
    s.name = j.at("name").get<std::string>();
    const auto degree = j.at("degree").get<long long>();
    if (degree < 1) throw ParseError("group '" + s.name + "': degree must be >= 1");
    s.degree = static_cast<std::size_t>(degree);
    for (const auto& row : j.at("generators")) {
      std::vector<Point> images;
      for (const auto& v : row) {
        const auto x = v.get<long long>();
        if (x < 0) throw ParseError("group '" + s.name + "': negative point label");
        images.push_back(static_cast<Point>(x));
      }
      if (images.size() != s.degree) {
        throw ParseError("group '" + s.name + "': generator length " + std::to_string(images.size()) +
                         " differs from degree " + std::to_string(s.degree));
      }
      try {
        Permutation check(images);
      } catch (const BadPermutation& e) {
        throw ParseError("group '" + s.name + "': " + e.what());
      }
      s.generators.push_back(std::move(images));
    }
    if (j.contains("expected_order")) s.expected_order = j.at("expected_order").get<std::size_t>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group definition: ") + e.what());
  }
}

// Closes the generators and checks expected_order when present.
inline CatalogEntry build_entry(const GroupSpec& spec, GroupLimits limits = {}) {
  std::vector<Permutation> gens;
  for (const auto& row : spec.generators) gens.emplace_back(row);
  CatalogEntry e{spec.name, group_from_generators(spec.degree, gens, limits), spec.expected_order};
  if (spec.expected_order && *spec.expected_order != e.group.order()) {
    throw OrderMismatch("group '" + spec.name + "' has order " + std::to_string(e.group.order()) + ", expected " +
                        std::to_string(*spec.expected_order));
  }
  return e;
}

namespace detail {

inline std::vector<Point> cycle_images(std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>((i + 1) % n);
  return v;
}

inline std::vector<Point> affine_images(std::size_t n, std::size_t mult, std::size_t add) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>((i * mult + add) % n);
  return v;
}

// Generators of A x B on the disjoint union of the point sets.
inline GroupSpec direct_sum(std::string name, const GroupSpec& a, const GroupSpec& b, std::size_t order) {
  GroupSpec s{std::move(name), a.degree + b.degree, {}, order};
  for (const auto& g : a.generators) {
    auto img = g;
    for (std::size_t i = 0; i < b.degree; ++i) img.push_back(static_cast<Point>(a.degree + i));
    s.generators.push_back(std::move(img));
  }
  for (const auto& g : b.generators) {
    std::vector<Point> img(a.degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = static_cast<Point>(i);
    for (Point x : g) img.push_back(static_cast<Point>(a.degree + x));
    s.generators.push_back(std::move(img));
  }
  return s;
}

// Right action v -> vM of a 2x2 matrix over the field with 3 elements on the
// eight nonzero row vectors (x, y), indexed 3x + y - 1.
inline std::vector<Point> f3_matrix_action(int a, int b, int c, int d) {
  std::vector<Point> img(8);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      const int nx = (x * a + y * c) % 3;
      const int ny = (x * b + y * d) % 3;
      img[static_cast<std::size_t>(3 * x + y - 1)] = static_cast<Point>(3 * nx + ny - 1);
    }
  }
  return img;
}

}  // namespace detail

inline std::vector<GroupSpec> builtin_specs() {
  using detail::affine_images;
  using detail::cycle_images;
  std::vector<GroupSpec> out;
  auto cyclic = [](std::size_t n) { return GroupSpec{"C" + std::to_string(n), n, {cycle_images(n)}, n}; };
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(cyclic(n));

  const GroupSpec c2 = cyclic(2), c3 = cyclic(3), c4 = cyclic(4);
  out.push_back({"V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4});
  const GroupSpec s3{"S3", 3, {{1, 2, 0}, {1, 0, 2}}, 6};
  out.push_back(s3);
  out.push_back({"D8", 4, {cycle_images(4), {0, 3, 2, 1}}, 8});
  // right regular representation on 1,-1,i,-i,j,-j,k,-k
  out.push_back({"Q8", 8, {{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}, 8});
  out.push_back({"D10", 5, {cycle_images(5), {0, 4, 3, 2, 1}}, 10});
  out.push_back({"D12", 6, {cycle_images(6), {0, 5, 4, 3, 2, 1}}, 12});
  const GroupSpec a4{"A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 12};
  out.push_back(a4);
  out.push_back({"S4", 4, {cycle_images(4), {1, 0, 2, 3}}, 24});
  out.push_back({"A5", 5, {cycle_images(5), {1, 2, 0, 3, 4}}, 60});
  out.push_back({"S5", 5, {cycle_images(5), {1, 0, 2, 3, 4}}, 120});
  // a: x -> x+1, b: x -> 3x on Z/5
  out.push_back({"F20", 5, {cycle_images(5), affine_images(5, 3, 0)}, 20});
  out.push_back({"C7:C3", 7, {cycle_images(7), affine_images(7, 2, 0)}, 21});
  out.push_back({"SL(2,3)", 8, {detail::f3_matrix_action(1, 1, 0, 1), detail::f3_matrix_action(1, 0, 1, 1)}, 24});
  out.push_back(detail::direct_sum("A4xC2", a4, c2, 24));
  out.push_back(detail::direct_sum("S3xC3", s3, c3, 18));
  // extra small groups with non-cyclic Sylow subgroups
  out.push_back(detail::direct_sum("C2xC2xC2", detail::direct_sum("", c2, c2, 4), c2, 8));
  out.push_back(detail::direct_sum("C4xC2", c4, c2, 8));
  out.push_back(detail::direct_sum("C3xC3", c3, c3, 9));
  out.push_back(detail::direct_sum("S3xS3", s3, s3, 36));
  // C3 x| C4: x -> x+1 on Z/3 and an order-4 element inverting it
  out.push_back({"C3:C4", 7, {{1, 2, 0, 3, 4, 5, 6}, {0, 2, 1, 4, 5, 6, 3}}, 12});
  return out;
}

inline std::vector<CatalogEntry> builtin_catalog(GroupLimits limits = {}) {
  std::vector<CatalogEntry> out;
  for (const auto& s : builtin_specs()) out.push_back(build_entry(s, limits));
  return out;
}

// A catalog document is an array of group definitions or an object with a
// "groups" array.
inline std::vector<GroupSpec> parse_catalog(const nlohmann::json& doc) {
  const nlohmann::json* groups = &doc;
  if (doc.is_object()) {
    if (!doc.contains("groups")) throw ParseError("catalog object lacks a \"groups\" array");
    groups = &doc.at("groups");
  }
  if (!groups->is_array()) throw ParseError("catalog must be an array of group definitions");
  std::vector<GroupSpec> out;
  for (const auto& g : *groups) out.push_back(parse_group_spec(g));
  return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::vector<CatalogEntry> load_catalog_file(const std::string& path, GroupLimits limits = {}) {
  std::vector<CatalogEntry> out;
  for (const auto& s : parse_catalog(read_json_file(path))) out.push_back(build_entry(s, limits));
  return out;
}

// Resolution order: explicit path, then $GROUPLAB_CATALOG, then the built-in list.
// Returns the entries and a version tag for report headers.
inline std::pair<std::vector<CatalogEntry>, std::string> load_catalog(const std::optional<std::string>& path,
                                                                      GroupLimits limits = {}) {
  std::optional<std::string> chosen = path;
  if (!chosen) {
    if (const char* env = std::getenv("GROUPLAB_CATALOG"); env && *env) chosen = env;
  }
  if (chosen) return {load_catalog_file(*chosen, limits), "file:" + *chosen};
  return {builtin_catalog(limits), kBuiltinCatalogVersion};
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace grouplab
