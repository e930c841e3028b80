#pragma once

#include <string>
#include <vector>

#include "chevchow/io.hpp"

#ifndef CHEVCHOW_FIXTURE_DIR
#error "CHEVCHOW_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(CHEVCHOW_FIXTURE_DIR) + "/" + name + ".json";
}

inline chevchow::DescriptorDocument fixture(const std::string& name) {
  return chevchow::load_descriptor(fixture_path(name));
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{
      "product_sl2", "product_pgl2", "semiabelian", "pgl2_gm2", "pgl2_mu2",        "sl2_torus", "gl2",
      "pgl3",        "sp4",          "a2",          "a3",       "g2",              "sl3_semiabelian",
      "ex_nlt"};
  return names;
}

/// Root datum with X(T) spanned by fundamental weights for the given Cartan
/// matrix rows (simply connected form).
inline chevchow::RootDatum simply_connected(const std::vector<std::vector<long long>>& cartan) {
  chevchow::RootDatum rd;
  rd.rank = cartan.size();
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    chevchow::IntVector root, coroot(cartan.size(), 0);
    for (long long x : cartan[i]) root.push_back(x);
    coroot[i] = 1;
    rd.simple_roots.push_back(root);
    rd.simple_coroots.push_back(coroot);
  }
  return rd;
}

inline chevchow::GroupDescriptor affine_group(const chevchow::RootDatum& rd, const std::string& name = "") {
  chevchow::GroupDescriptor gd;
  gd.name = name;
  gd.rd = rd;
  gd.gluing.xd = chevchow::Presentation::free(0);
  gd.gluing.v = chevchow::IntMatrix(0, rd.rank);
  gd.gluing.sigma_kernel = chevchow::IntMatrix(0, 0);
  return gd;
}

}  // namespace testing_support
