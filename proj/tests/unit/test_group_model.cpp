#include <gtest/gtest.h>

#include "chevchow/group_model.hpp"
#include "../support/fixtures.hpp"

using namespace chevchow;
using testing_support::fixture;

namespace {

bool failed(const ValidationReport& r, const std::string& clause) {
  for (const auto& c : r.checks)
    if (c.clause == clause) return !c.passed;
  return false;
}

}  // namespace

TEST(ValidateGroup, AllFixturesPass) {
  for (const auto& name : testing_support::all_fixtures()) {
    DescriptorDocument doc = fixture(name);
    ValidationReport r = validate_group(doc.group);
    EXPECT_TRUE(r.ok()) << name << ": " << r.first_failure();
    for (const auto& [sub, hd] : doc.subgroups) {
      ValidationReport s = validate_subgroup(doc.group, hd);
      EXPECT_TRUE(s.ok()) << name << "/" << sub << ": " << s.first_failure();
    }
  }
}

TEST(ValidateGroup, VNotSurjective) {
  GroupDescriptor gd = fixture("semiabelian").group;
  gd.gluing.v = IntMatrix{{2}};
  EXPECT_TRUE(failed(validate_group(gd), "v-surjectivity"));
}

TEST(ValidateGroup, RootNotCentral) {
  GroupDescriptor gd = fixture("sl2_torus").group;
  gd.gluing.v = IntMatrix{{1, 1}};
  EXPECT_TRUE(failed(validate_group(gd), "centrality of D"));
}

TEST(ValidateGroup, PointChecksAndCharacteristic) {
  GroupDescriptor gd = fixture("semiabelian").group;
  gd.av.g = 0;
  gd.av.ns = FGAbelianGroup::trivial();
  EXPECT_TRUE(failed(validate_group(gd), "anti-affine part over a point"));
  GroupDescriptor p = fixture("pgl3").group;
  p.gluing.characteristic = 4;
  EXPECT_TRUE(failed(validate_group(p), "characteristic"));
  p.gluing.characteristic = 3;
  EXPECT_TRUE(validate_group(p).ok());
  GroupDescriptor shapes = fixture("semiabelian").group;
  shapes.gluing.v = IntMatrix{{1, 0}};
  EXPECT_TRUE(failed(validate_group(shapes), "gluing shapes"));
}

TEST(ValidateGroup, TorsionBeyondTwoGWarns) {
  GroupDescriptor gd = fixture("pgl2_mu2").group;
  EXPECT_TRUE(validate_group(gd).warnings.empty());
  gd.gluing.xd = Presentation{3, IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  gd.gluing.v = IntMatrix{{0, 1}, {0, 1}, {0, 1}};
  ValidationReport r = validate_group(gd);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(ValidateSubgroup, CorootDescentFailure) {
  DescriptorDocument doc = fixture("sl2_torus");
  SubgroupDescriptor hd;
  hd.q = IntMatrix{{1, 1}};
  hd.roots = {{2, 0}, {-2, 0}};
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "coroot descent"));
}

TEST(ValidateSubgroup, ExNltSubgroupIsValid) {
  DescriptorDocument doc = fixture("ex_nlt");
  const SubgroupDescriptor* hd = doc.find_subgroup("H");
  ASSERT_NE(hd, nullptr);
  EXPECT_TRUE(validate_subgroup(doc.group, *hd).ok());
  EXPECT_TRUE(hd->has_translations());
}

TEST(ValidateSubgroup, StructuralFailures) {
  DescriptorDocument doc = fixture("product_sl2");
  SubgroupDescriptor hd = torus_subgroup(doc.group);
  hd.q = IntMatrix{{2}};
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "q surjectivity"));
  hd = torus_subgroup(doc.group);
  hd.roots = {{4}};
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "root membership"));
  hd = torus_subgroup(doc.group);
  hd.component_group = {{IntMatrix{{2}}, false}};
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "component group finiteness"));
  hd = torus_subgroup(doc.group);
  hd.contains_G_ant = true;
  hd.ant_contains_gantaff = false;
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "anti-affine flags"));
  GroupDescriptor point = fixture("pgl3").group;
  SubgroupDescriptor moving = torus_subgroup(point);
  moving.component_group = {{IntMatrix{{0, 1}, {1, 0}}, true}};
  EXPECT_TRUE(failed(validate_subgroup(point, moving), "translation flags"));
}

TEST(ValidateSubgroup, ComponentGroupMustFixCharactersOfGaff) {
  DescriptorDocument doc = fixture("semiabelian");
  SubgroupDescriptor hd = torus_subgroup(doc.group);
  hd.component_group = {{IntMatrix{{-1}}, false}};
  EXPECT_TRUE(failed(validate_subgroup(doc.group, hd), "component group fixes characters of G_aff"));
}

TEST(Attributes, Dimensions) {
  GroupAttributes a = derived_attributes(fixture("sl2_torus").group);
  EXPECT_EQ(a.dim_g_aff, 4u);
  EXPECT_EQ(a.dim_g_ant, 2u);
  EXPECT_EQ(a.dim_d, 1u);
  EXPECT_EQ(a.dim_g, 5u);
  EXPECT_TRUE(a.d_smooth_connected);
  EXPECT_TRUE(a.u_surjective);
  GroupAttributes s = derived_attributes(fixture("semiabelian").group);
  EXPECT_EQ(s.dim_g, 2u);
  EXPECT_EQ(s.ker_gamma.rows(), 0u);
  EXPECT_EQ(s.rank_im_gamma, 1u);
  GroupAttributes t = derived_attributes(fixture("pgl2_gm2").group);
  EXPECT_FALSE(t.d_smooth_connected);
  EXPECT_EQ(t.xd.to_string(), "Z + Z/2");
  GroupAttributes gl = derived_attributes(fixture("gl2").group);
  EXPECT_FALSE(gl.u_surjective);
}

TEST(Attributes, KernelOfGammaTwoWays) {
  for (const auto& name : testing_support::all_fixtures()) {
    GroupDescriptor gd = fixture(name).group;
    EXPECT_EQ(ker_gamma_by_intersection(gd), ker_gamma_by_composite(gd)) << name;
  }
}

TEST(SubgroupTorus, ReflectionsOnDescendedLattice) {
  DescriptorDocument doc = fixture("sl2_torus");
  const SubgroupDescriptor* sl2 = doc.find_subgroup("SL2");
  ASSERT_NE(sl2, nullptr);
  SubgroupTorusData d = subgroup_torus_data(doc.group, *sl2);
  ASSERT_EQ(d.reflections.size(), 1u);
  EXPECT_EQ(d.reflections[0], (IntMatrix{{-1}}));
  EXPECT_EQ(d.restricted_roots[0], (IntVector{2}));
}

TEST(BuiltinSubgroups, Shapes) {
  GroupDescriptor gd = fixture("a2").group;
  EXPECT_EQ(trivial_subgroup(gd).q.rows(), 0u);
  EXPECT_TRUE(torus_subgroup(gd).q_is_identity());
  EXPECT_EQ(borel_subgroup(gd).roots.size(), 3u);
  EXPECT_EQ(gaff_subgroup(gd).roots.size(), 6u);
  for (const auto& hd : {trivial_subgroup(gd), torus_subgroup(gd), borel_subgroup(gd), gaff_subgroup(gd)})
    EXPECT_TRUE(validate_subgroup(gd, hd).ok());
}
