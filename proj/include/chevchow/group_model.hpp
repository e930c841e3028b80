#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevchow/int_matrix.hpp"
#include "chevchow/lattice.hpp"
#include "chevchow/limits.hpp"
#include "chevchow/root_datum.hpp"

namespace chevchow {

/// A = Alb(G): its dimension and Neron-Severi group. Pic^0(A) is never
/// represented beyond g.
struct AbelianVarietyData {
  std::size_t g = 0;
  FGAbelianGroup ns;
  bool operator==(const AbelianVarietyData&) const = default;
};

/// D = G_aff cap G_ant and the maps v: X(T) -> X(D), sigma_A: X(D) -> Pic^0(A)
/// (given by generators of its kernel).
struct AntiAffineGluing {
  Presentation xd;                 // X(D)
  IntMatrix v;                     // xd.ambient_rank x rank X(T)
  IntMatrix sigma_kernel;          // rows in X(D) ambient coordinates
  std::size_t unipotent_dim = 0;
  unsigned long characteristic = 0;

  bool operator==(const AntiAffineGluing& o) const {
    return xd.ambient_rank == o.xd.ambient_rank && xd.relations == o.xd.relations && v == o.v &&
           sigma_kernel == o.sigma_kernel && unipotent_dim == o.unipotent_dim &&
           characteristic == o.characteristic;
  }
};

struct GroupDescriptor {
  std::string name;
  RootDatum rd;
  AbelianVarietyData av;
  AntiAffineGluing gluing;

  bool operator==(const GroupDescriptor&) const = default;
};

/// Generator of Gamma = H / H^0 acting on X(T_H); `translation` records that
/// it moves A by a translation.
struct ComponentGenerator {
  IntMatrix action;
  bool translation = false;
  bool operator==(const ComponentGenerator&) const = default;
};

struct SubgroupDescriptor {
  IntMatrix q;                   // X(T) ->> X(T_H), rank X(T_H) x rank X(T)
  std::vector<IntVector> roots;  // roots of H^0, as vectors of X(T)
  std::size_t extra_unipotent_dim = 0;
  std::vector<ComponentGenerator> component_group;
  bool contains_G_ant = false;
  bool ant_contains_gantaff = false;

  std::size_t torus_rank() const { return q.rows(); }
  bool q_is_identity() const { return q.rows() == q.cols() && q.is_identity(); }
  bool has_translations() const;
  std::vector<IntMatrix> component_actions() const;
  bool operator==(const SubgroupDescriptor&) const = default;
};

/// The trivial subgroup, the maximal torus, the Borel subgroup and G_aff
/// itself, for a valid group descriptor.
SubgroupDescriptor trivial_subgroup(const GroupDescriptor& gd);
SubgroupDescriptor torus_subgroup(const GroupDescriptor& gd);
SubgroupDescriptor borel_subgroup(const GroupDescriptor& gd);
SubgroupDescriptor gaff_subgroup(const GroupDescriptor& gd);

struct ValidationCheck {
  std::string clause;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<std::string> warnings;

  bool ok() const;
  /// "clause: detail" of the first failed check, empty when ok.
  std::string first_failure() const;
  void add(std::string clause, bool passed, std::string detail = {});
};

ValidationReport validate_group(const GroupDescriptor& gd, const Limits& limits = {});
ValidationReport validate_subgroup(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                   const Limits& limits = {});

struct GroupAttributes {
  std::size_t dim_g_aff = 0;
  std::size_t dim_g = 0;
  std::size_t dim_d = 0;
  std::size_t dim_g_ant = 0;
  std::size_t dim_aff = 0;  // dim Aff(G) = dim G / G_ant
  IntMatrix characters;     // X(G_aff), rows in X(T)
  IntMatrix ker_gamma;      // ker gamma_A = X(G), rows in X(T)
  FGAbelianGroup im_gamma;  // X(G_aff) / ker gamma_A
  std::size_t rank_im_gamma = 0;
  FGAbelianGroup xd;
  FGAbelianGroup xd_mod_sigma;  // X(D) / ker sigma_A
  FGAbelianGroup pic_gaff;
  bool d_smooth_connected = true;
  std::string d_verdict;
  bool u_surjective = false;  // u = v restricted to X(G_aff) onto X(D)
};

/// ker gamma_A as X(G_aff) cap v^-1(ker sigma_A); see also
/// ker_gamma_by_composite.
IntMatrix ker_gamma_by_intersection(const GroupDescriptor& gd);
/// ker gamma_A as the kernel of X(G_aff) -> X(D) / ker sigma_A.
IntMatrix ker_gamma_by_composite(const GroupDescriptor& gd);

GroupAttributes derived_attributes(const GroupDescriptor& gd);

/// Data of H^0 needed downstream: restricted roots, descended coroots and
/// the reflections they define on X(T_H).
struct SubgroupTorusData {
  std::vector<IntVector> symmetric_roots;  // alpha in roots_H with -alpha in roots_H
  std::vector<IntVector> restricted_roots; // q(alpha) for each symmetric root
  std::vector<IntVector> descended_coroots;
  std::vector<IntMatrix> reflections;      // on X(T_H)
};

/// Throws InvalidArgument if a symmetric coroot does not descend.
SubgroupTorusData subgroup_torus_data(const GroupDescriptor& gd, const SubgroupDescriptor& hd);

}  // namespace chevchow
