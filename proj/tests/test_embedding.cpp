#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace grouplab;
using support::to_oracle;

namespace {

SubgroupId b_squared(const SubgroupLattice& f20) {
  const FiniteGroup& g = f20.group();
  const Elem b = g.generator_indices()[1];
  return f20.id_of(generate(g, {g.mul(b, b)}));
}

// Groups small enough for the quadratic oracle searches.
bool oracle_sized(const CatalogEntry& e) { return e.group.order() <= 36; }

}  // namespace

TEST_CASE("property names round-trip") {
  for (const auto& [id, name] : kPropertyNames) {
    CHECK(parse_property(name) == id);
    CHECK(to_string(id) == name);
  }
  CHECK_FALSE(parse_property("normal").has_value());
}

TEST_CASE("the F20 example") {
  const SubgroupLattice f20(support::group("F20"));
  const SubgroupId h = b_squared(f20);
  REQUIRE(f20.order(h) == 2);
  CHECK(pi_property_holds(f20, h));
  const auto v = is_pi_supplemented(f20, h);
  CHECK(v.holds);
  CHECK(v.witness.supplement == f20.whole());
  CHECK(v.witness.intermediate == h);
  CHECK_FALSE(check_classical(f20, h, PropertyId::c_supplemented).holds);
}

TEST_CASE("pi-property examples") {
  for (const auto& e : support::catalog()) {
    const SubgroupLattice lat(e.group);
    CHECK(pi_property_holds(lat, lat.trivial()));
    CHECK(pi_property_holds(lat, lat.whole()));
    CHECK(pi_supplemented_holds(lat, lat.whole()));
  }
  const SubgroupLattice a4(support::group("A4"));
  const SubgroupId h = support::id_of(a4, {{1, 0, 3, 2}});
  const auto v = satisfies_pi_property(a4, h);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.chief_factor.has_value());
  CHECK(v.witness.chief_factor->lower == a4.trivial());
  CHECK(a4.order(v.witness.chief_factor->upper) == 4);
  CHECK_FALSE(pi_supplemented_holds(a4, h));
}

TEST_CASE("supplements in a class") {
  const SubgroupLattice a4(support::group("A4"));
  const SubgroupId h = support::id_of(a4, {{1, 0, 3, 2}});
  CHECK_FALSE(has_supplement_in_class(a4, h, ClassSpec::p_supersoluble(2)).holds);
  CHECK(has_supplement_in_class(a4, h, ClassSpec::of(GroupClass::soluble)).holds);

  // D8 in S4 is supplemented by S3 (and by C3), both 2-supersoluble
  const SubgroupLattice s4(support::group("S4"));
  const SubgroupId d8 = sylow_subgroups(s4, 2).front();
  const auto v = has_supplement_in_class(s4, d8, ClassSpec::p_supersoluble(2));
  CHECK(v.holds);
  REQUIRE(v.witness.supplement.has_value());
  CHECK(s4.order(*v.witness.supplement) == 6);
  CHECK(has_supplement_in_class(s4, d8, ClassSpec::of(GroupClass::abelian)).holds);  // a C3
  CHECK_THROWS_AS(check_classical(s4, d8, PropertyId::has_supplement_in), Error);
}

TEST_CASE("classical property examples") {
  const SubgroupLattice s3(support::group("S3"));
  CHECK_FALSE(check_classical(s3, support::id_of(s3, {{1, 0, 2}}), PropertyId::s_quasinormal).holds);
  for (const auto& e : support::catalog()) {
    const SubgroupLattice lat(e.group);
    for (SubgroupId n : lat.normals()) CHECK(check_classical(lat, n, PropertyId::s_quasinormal).holds);
  }
  const SubgroupLattice c4(support::group("C4"));
  const SubgroupId c2 = 1;
  REQUIRE(c4.order(c2) == 2);
  CHECK_FALSE(check_classical(c4, c2, PropertyId::complemented).holds);
  CHECK(check_classical(c4, c2, PropertyId::c_supplemented).holds);
}

TEST_CASE("pi-property agrees with the literal quotient computation") {
  for (const auto& e : support::catalog()) {
    if (e.group.order() > 60) continue;
    INFO(e.name);
    const SubgroupLattice lat(e.group);
    const oracle::Set og = to_oracle(e.group);
    const auto factors = oracle::chief_factors(og);
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      CHECK(pi_property_holds(lat, h) == oracle::pi_property(og, to_oracle(lat[h]), factors));
    }
  }
}

TEST_CASE("supplement-based properties agree with brute force") {
  for (const auto& e : support::catalog()) {
    if (!oracle_sized(e)) continue;
    INFO(e.name);
    const SubgroupLattice lat(e.group);
    const oracle::Set og = to_oracle(e.group);
    const auto subs = oracle::all_subgroups(og);
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      const oracle::Set oh = to_oracle(lat[h]);
      CHECK(pi_supplemented_holds(lat, h) == oracle::pi_supplemented(og, oh, subs));
      CHECK(check_classical(lat, h, PropertyId::c_supplemented).holds == oracle::c_supplemented(og, oh, subs));
      CHECK(check_classical(lat, h, PropertyId::complemented).holds == oracle::complemented(og, oh, subs));
      CHECK(s_quasinormal_holds(lat, h) == oracle::s_quasinormal(og, oh, subs));
      CHECK(s_semipermutable_holds(lat, h) == oracle::s_semipermutable(og, oh, subs));
      CHECK(check_classical(lat, h, PropertyId::s_conditionally_permutable).holds ==
            oracle::s_conditionally_permutable(og, oh, subs));
      CHECK(cap_holds(lat, h) == oracle::cap(og, oh));
    }
  }
}

TEST_CASE("positive verdicts carry witnesses that re-validate independently") {
  for (const auto& e : support::catalog()) {
    if (e.group.order() > 60) continue;
    INFO(e.name);
    const SubgroupLattice lat(e.group);
    const oracle::Set og = to_oracle(e.group);
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      const oracle::Set oh = to_oracle(lat[h]);
      const auto v = is_pi_supplemented(lat, h);
      if (v.holds) {
        REQUIRE(v.witness.supplement.has_value());
        REQUIRE(v.witness.intermediate.has_value());
        CHECK(oracle::pi_supplemented_witness(og, oh, to_oracle(lat[*v.witness.supplement]),
                                              to_oracle(lat[*v.witness.intermediate])));
      }
      for (auto id : {PropertyId::complemented, PropertyId::c_supplemented, PropertyId::cas,
                      PropertyId::u_supplemented, PropertyId::weakly_s_supplemented}) {
        const auto c = check_classical(lat, h, id);
        if (c.holds && c.witness.supplement) {
          CHECK(oracle::is_supplement(og, oh, to_oracle(lat[*c.witness.supplement])));
        }
      }
      const auto neg = satisfies_pi_property(lat, h);
      if (!neg.holds) {
        REQUIRE(neg.witness.chief_factor.has_value());
        const oracle::Factor f{to_oracle(lat[neg.witness.chief_factor->lower]),
                               to_oracle(lat[neg.witness.chief_factor->upper])};
        CHECK_FALSE(oracle::pi_condition_on_factor(og, oh, f));
      }
    }
  }
}

TEST_CASE("verdicts are invariant under conjugation") {
  for (const char* name : {"S4", "F20", "SL(2,3)", "A4xC2", "S3xS3", "D12"}) {
    INFO(name);
    const SubgroupLattice lat(support::group(name));
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      for (Elem g = 0; g < lat.group().order(); g += 3) {
        const SubgroupId k = lat.conjugate(h, g);
        if (k == h) continue;
        for (const auto& [id, pname] : kPropertyNames) {
          if (id == PropertyId::has_supplement_in) continue;
          INFO(pname);
          CHECK(holds(lat, h, id) == holds(lat, k, id));
        }
      }
    }
  }
}

TEST_CASE("implications between properties") {
  for (const auto& e : support::catalog()) {
    INFO(e.name);
    const SubgroupLattice lat(e.group);
    const EmbeddingLimits limits;
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      const bool sqn = s_quasinormal_holds(lat, h);
      if (sqn) {
        CHECK(s_semipermutable_holds(lat, h));
        CHECK(s_qn_embedded_holds(lat, h));
        CHECK(check_classical(lat, h, PropertyId::s_conditionally_permutable).holds);
      }
      if (check_classical(lat, h, PropertyId::c_supplemented).holds) CHECK(pi_supplemented_holds(lat, h));
      if (check_classical(lat, h, PropertyId::complemented).holds) {
        CHECK(check_classical(lat, h, PropertyId::c_supplemented).holds);
      }
      if (lat.is_normal(h)) {
        CHECK(cap_holds(lat, h));
        CHECK(pi_property_holds(lat, h));
      }
      if (pi_property_holds(lat, h)) CHECK(pi_supplemented_holds(lat, h));
      if (e.group.order() <= limits.max_ccp_order && check_classical(lat, h, PropertyId::completely_c_permutable).holds) {
        CHECK(check_classical(lat, h, PropertyId::weakly_c_permutable).holds);
      }
    }
  }
}

TEST_CASE("completely c-permutable is capped") {
  const SubgroupLattice s5(support::group("S5"));
  CHECK_THROWS_AS(check_classical(s5, 1, PropertyId::completely_c_permutable), CapExceeded);
  CHECK_THROWS_AS(check_classical(s5, 1, PropertyId::weakly_c_permutable), CapExceeded);
  CHECK_NOTHROW(check_classical(s5, 1, PropertyId::completely_c_permutable, EmbeddingLimits{120}));
}

TEST_CASE("fixed chief series and all covering pairs") {
  // The all-pairs check is at least as strong as the one-series check.
  for (const auto& e : support::catalog()) {
    INFO(e.name);
    const SubgroupLattice lat(e.group);
    const auto series = chief_series(lat);
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      if (pi_property_holds(lat, h)) CHECK(pi_property_on_series(lat, h, series));
    }
  }
}
