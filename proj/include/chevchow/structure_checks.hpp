#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevchow/group_model.hpp"
#include "chevchow/limits.hpp"

namespace chevchow {

enum class Answer { yes, no, unknown };

std::string to_string(Answer a);

struct Verdict {
  Answer answer = Answer::unknown;
  std::string criterion;
  std::vector<std::pair<std::string, std::string>> witness;
  std::vector<std::string> notes;

  bool is_yes() const { return answer == Answer::yes; }
};

/// G = A x G_aff iff D is trivial.
Verdict albanese_split_test(const GroupDescriptor& gd);

struct AffinizationVerdicts {
  Verdict locally_trivial;
  Verdict trivial;
};

AffinizationVerdicts affinization_test(const GroupDescriptor& gd);

/// Isogenous cover with factorial G_aff, smooth connected D and trivial
/// affinization torsor. Returns the input unchanged when it already has
/// these properties.
GroupDescriptor construct_cover(const GroupDescriptor& gd);

struct FibrationReport {
  std::size_t torsor_free_rank = 0;      // torus part of G_aff H cap G_ant
  std::size_t torsor_unipotent_dim = 0;
  std::size_t torsor_dim = 0;
  FGAbelianGroup xd_torsion;             // D / (G_ant)_aff, dually
  BigInt translation_order = 1;          // image of H / H^0 in A
  BigInt finite_part_order = 1;
  bool finite_part_trivial = true;
  std::size_t dim_aut_ant = 0;           // dim G_ant
  bool faithful_model = true;
  std::vector<std::string> notes;
};

FibrationReport fibration_report(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                 const Limits& limits = {});

Verdict phi_local_triviality_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd);

Verdict completeness_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                          const Limits& limits = {});

struct AffineVerdicts {
  Verdict affine;
  Verdict quasi_affine;
};

AffineVerdicts affine_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd);

}  // namespace chevchow
