#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevchow/flag_chow.hpp"
#include "chevchow/group_model.hpp"
#include "chevchow/invariant_rings.hpp"
#include "chevchow/lattice.hpp"

namespace chevchow {

/// Pic^0(A_g) modulo a finitely generated subgroup; only the subgroup is
/// known.
struct FormalPicardZero {
  std::size_t g = 0;
  FGAbelianGroup quotient_by;

  bool is_zero() const { return g == 0; }
  /// "Pic0(A_1) / <Z>", "Pic0(A_2)", "0"
  std::string to_string() const;
  bool operator==(const FormalPicardZero&) const = default;
};

struct PicardReport {
  FGAbelianGroup ns;
  FormalPicardZero pic0;
  // Five-term data: X(G) -> X(G_aff) -> Pic(A) -> Pic(G) -> Pic(G_aff).
  IntMatrix x_g;        // rows in X(T)
  IntMatrix x_gaff;     // rows in X(T)
  IntMatrix gamma;      // X(G_aff) basis -> X(D) ambient, taken modulo ker sigma_A
  FGAbelianGroup ns_a;
  FGAbelianGroup pic_gaff;
};

PicardReport picard_group(const GroupDescriptor& gd);

/// Degree-one ideal generator (c_A(chi), c_B(chi)) for a basis character chi
/// of X(T). The formal part is v(chi) in X(D) / ker sigma_A.
struct IdealGenerator {
  IntVector character;
  IntVector formal_class;  // X(D) ambient coordinates
  bool formal_zero = true;
  SchubertExpansion concrete;
  IntVector concrete_restricted;  // homogeneous mode: r(chi) in X(T_H)
};

struct GradedPresentation {
  bool rational = false;
  std::size_t g = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> concrete_dims;          // per degree
  std::vector<FGAbelianGroup> concrete_groups;     // integral mode, per degree
  std::vector<std::size_t> schubert_dims;          // classes per codegree of the flag variety
  std::vector<IdealGenerator> ideal_degree1;
  std::vector<IntVector> j_generators;             // formal classes generating J
  std::size_t j_rank = 0;
  std::optional<std::size_t> degree_bound;         // rational mode: g
  FGAbelianGroup degree1_concrete;                 // integral: Pic(G_aff) from the Chevalley matrix
  FGAbelianGroup degree1_formal_quotient;          // c_A(ker c_B), should match im gamma_A
  bool degree1_consistent = true;
  std::vector<std::string> notes;

  /// "A*(A_g)" / "A*(A_g)_Q / J" style symbol for the abelian factor.
  std::string abelian_factor() const;
};

/// Integral presentation A*(A) (x) A*(B) / I through max_degree (default
/// |Phi+| + g + 2).
GradedPresentation chow_presentation(const GroupDescriptor& gd,
                                     std::optional<std::size_t> max_degree = std::nullopt,
                                     const Limits& limits = {});

/// A*(G)_Q = A*(A)_Q / J.
GradedPresentation rational_chow(const GroupDescriptor& gd,
                                 std::optional<std::size_t> max_degree = std::nullopt,
                                 const Limits& limits = {});

/// (A*(A)_Q (x) S_{H^0,Q})^Gamma / I, concrete factor computed.
GradedPresentation homogeneous_rational_chow(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                             std::optional<std::size_t> max_degree = std::nullopt,
                                             const Limits& limits = {});

/// Restriction data of H.
struct RestrictionData {
  IntMatrix x_h0;      // X(H^0) inside X(T_H), rows
  IntMatrix x_h;       // X(H^0)^Gamma, rows in X(T_H)
  IntMatrix ker_r;     // ker r_H inside X(G_aff), rows in X(T)
  std::size_t rank_r = 0;
};

RestrictionData restriction_data(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                 const Limits& limits = {});

struct HomogeneousPicardReport {
  bool integral = false;
  std::size_t ns_rank = 0;              // rank NS(A) + rank X(H) - rank r_H
  std::size_t x_h_rank = 0;
  std::size_t rank_r = 0;
  FGAbelianGroup ns_image;              // integral: NS(A) + X(H) / r_H(X(G_aff))
  FGAbelianGroup x_part;                // integral: X(H) / r_H(X(G_aff)); rational: free of the same rank
  FormalPicardZero pic0;                // Pic^0(G)_Q, isomorphic to Pic^0(G/H)_Q
  FormalPicardZero pic0_sequence;       // Pic^0(A) / gamma_A(ker r_H) read off the sequence
  IntMatrix kernel;                     // X(G/H) = ker gamma_A cap ker r_H, rows in X(T)
  FGAbelianGroup tail;                  // Pic(G_aff)
  std::vector<std::string> notes;
};

/// Rational by default; integral requires H inside G_aff (no translation
/// flags, G_ant not contained in H) and throws ModeUnsupported otherwise.
HomogeneousPicardReport homogeneous_picard(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                           bool integral = false, const Limits& limits = {});

struct HomogeneousNS {
  std::size_t rational_rank = 0;
  std::optional<FGAbelianGroup> integral;
  std::string integral_note;
  FormalPicardZero pic0;  // Pic^0(G/H)_Q = Pic^0(G)_Q
};

HomogeneousNS homogeneous_ns(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                             const Limits& limits = {});

/// Quotient of the row lattice `super` by the row lattice spanned by `sub`,
/// which must lie inside it.
FGAbelianGroup lattice_quotient(const IntMatrix& super, const IntMatrix& sub);

}  // namespace chevchow
