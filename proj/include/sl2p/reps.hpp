#pragma once

#include <map>
#include <optional>
#include <string>

#include "sl2p/chars.hpp"
#include "sl2p/groups.hpp"
#include "sl2p/mat.hpp"

namespace sl2p {

/// Symbolic name of an irreducible of GL2(F_q).  Character data is stored as
/// exponents against the canonical generators of F_q* (chi) and F_{q^2}*
/// (theta).  Labels are normalized: Princ sorted, Cusp theta vs theta^q
/// canonicalized to the smaller exponent.
struct IrrepLabel {
  enum class Kind { Char, StTwist, Princ, Cusp, Cusp0Twist };
  Kind kind;
  uint32_t q = 0;
  uint32_t chi1 = 0, chi2 = 0;  // exponents mod q-1
  uint32_t theta = 0;           // exponent mod q^2-1

  static IrrepLabel make_char(uint32_t q, uint32_t chi);
  static IrrepLabel make_st_twist(uint32_t q, uint32_t chi);
  static IrrepLabel make_princ(uint32_t q, uint32_t c1, uint32_t c2);
  static IrrepLabel make_cusp(uint32_t q, uint32_t theta);
  static IrrepLabel make_cusp0_twist(uint32_t q, uint32_t chi);

  uint32_t dim() const;
  bool operator==(const IrrepLabel& o) const = default;
  bool operator<(const IrrepLabel& o) const;
  std::string describe() const;

  /// Twist by the character (chi o det).
  IrrepLabel twisted(uint32_t chi) const;
};

/// The labels valid over an algebraically closed field of characteristic
/// char_r (0 allowed), in canonical order.  Count is q^2-1 when char_r = 0.
std::vector<IrrepLabel> valid_labels(uint32_t q, uint32_t char_r);
bool label_valid(const IrrepLabel& l, uint32_t char_r);

/// Shared finite-group data for one q: the fields k = F_q, k2 = F_{q^2},
/// both matrix groups, the embedding k -> k2 and the non-split torus
/// generator (multiplication by the canonical generator of k2*).
class GLContext {
 public:
  explicit GLContext(uint32_t q);
  static const GLContext& get(uint32_t q);  // cached

  uint32_t q, p, deg;
  FieldPtr k, k2;
  GroupPtr gl2, sl2;
  std::vector<Field::elt> embed_k_in_k2;  // packed k-element -> k2 element
  GElt torus_gen;                         // order q^2-1 in GL2(F_q)

  /// The canonical splitting coefficient field for char_r (0 = emulated
  /// characteristic zero via the smallest prime l' with l' = 1 mod exp(G)).
  FieldPtr coefficient_field(uint32_t char_r) const;
  uint32_t exponent() const;  // exp(GL2(F_q))
};

/// Explicit matrix representation: one matrix per group element, indexed by
/// the group's canonical enumeration.
class MatRep {
 public:
  MatRep() = default;
  MatRep(GroupPtr g, FieldPtr f, size_t dim) : group_(std::move(g)), field_(std::move(f)), dim_(dim) {}

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  size_t dim() const { return dim_; }
  std::optional<IrrepLabel> label;

  const Mat& at(size_t element_index) const { return mats_[element_index]; }
  const Mat& at(const GElt& g) const { return mats_[group_->index_of(g)]; }
  std::vector<Mat>& matrices() { return mats_; }
  const std::vector<Mat>& matrices() const { return mats_; }

  /// Images of GroupSpec::generators(), in order.
  std::vector<Mat> generator_matrices() const;

  MatRep twisted_by_det(const MultCharacter& chi) const;
  /// Spot-check multiplicativity on `samples` random triples.
  bool check_multiplicative(size_t samples, uint64_t seed) const;

 private:
  GroupPtr group_;
  FieldPtr field_;
  size_t dim_ = 0;
  std::vector<Mat> mats_;
};

/// Rebuild a full element table from images of GroupSpec::generators().
MatRep rep_from_generator_matrices(const GroupPtr& G, FieldPtr F, const std::vector<Mat>& gen_images);

/// ind_B^G(chi1 x chi2) on functions on B\G, dimension q+1.
MatRep principal_series(const GLContext& ctx, FieldPtr F, uint32_t chi1, uint32_t chi2);

/// ind_U^G(psi), dimension |G|/q, psi the canonical nontrivial character.
MatRep gelfand_graev(const GLContext& ctx, FieldPtr F);

/// Explicit model of the labelled irreducible over F.
MatRep construct(const GLContext& ctx, FieldPtr F, const IrrepLabel& label);

/// Same space, group data restricted to SL2(F_q).
MatRep restrict_to_sl2(const GLContext& ctx, const MatRep& rep);

/// dim of the H-fixed subspace (kernel path over the generators).
size_t fixed_vectors(const MatRep& rep, const SubgroupHandle& H);
/// Same, but also runs the trace-average path and asserts agreement
/// (requires |H| invertible in the coefficient field).
size_t fixed_vectors_checked(const MatRep& rep, const SubgroupHandle& H);
/// Fixed space of an explicit list of elements (their generated subgroup).
size_t fixed_vectors_of(const MatRep& rep, const std::vector<GElt>& gens);

/// Label a cuspidal constituent of the Gelfand-Graev module by matching its
/// central character and elliptic trace fingerprint.  Returns a Cusp label
/// (theta regular) or a Cusp0Twist label (theta factoring through the norm).
IrrepLabel identify_cuspidal(const GLContext& ctx, uint32_t char_r, const MatRep& constituent);

/// Semisimplified reduction mod ell of a characteristic-zero label, as the
/// list of constituent labels; where the natural lattice singles out a
/// subrepresentation (Steinberg at ell | q+1) the sub is listed first.
std::vector<IrrepLabel> reduce_label_mod_ell(const IrrepLabel& label, uint32_t ell);

}  // namespace sl2p
