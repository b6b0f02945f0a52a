#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2p/reps.hpp"

namespace sl2p {

/// Moy-Prasad subgroup families of SL2(Q_p) (and their GL2 parents):
///   K(j)     = K'_{1+j} = 1 + p^j M2(P)
///   Kd(j)    = d K'_{1+j} d^{-1},  d = diag(1, p)
///   I(j)     = I'_j        (Iwahori congruence filtration)
///   Ihalf(j) = I'_{1/2+j}  (pro-p Iwahori filtration)
enum class MPFamily { K, Kd, I, Ihalf };

std::string family_name(MPFamily f);

/// Valuation-floor description of a congruence subgroup of SL2(O) or
/// GL2(O): diag = 0 means unit diagonal, a >= 1 means diagonal entries
/// congruent to 1 mod p^a; upper/lower are valuation floors on the
/// off-diagonal entries.
struct MPPattern {
  uint32_t diag = 0, upper = 0, lower = 0;
  uint32_t min_level() const { return std::max(std::max(diag, upper), std::max(lower, 1u)); }
};

/// The pattern of the family member with index j.
MPPattern family_pattern(MPFamily f, uint32_t j);

struct CensusResult {
  uint64_t count_sl2 = 0;
  uint64_t count_gl2 = 0;
  uint64_t formula = 0;  // (q+1) q^j or 2 q^j
  uint32_t level = 0;    // finite quotient used
  bool bijective() const { return count_sl2 == count_gl2; }
};

/// |B'\G'/H'| and |B\G/H| for the family member with index j, by explicit
/// enumeration of the coset space of the finite quotient and orbit closure
/// under generators of the subgroup image.  `level` = 0 picks the minimal
/// faithful quotient; any level at least that deep gives the same counts.
CensusResult coset_census(uint32_t p, MPFamily family, uint32_t j, uint32_t level = 0);

/// SL2-side census equals GL2-side census (the inclusion G' in G induces a
/// bijection on these double-coset spaces).
bool bijection_check(uint32_t p, MPFamily family, uint32_t j);

/// One Cartan cell of a Mackey sum: the double-coset count at depth i and
/// the local fixed-space dimension there.
struct MackeyCell {
  uint32_t i = 0;
  uint64_t coset_count = 0;
  uint64_t local_dim = 0;
};

struct MackeySum {
  std::vector<MackeyCell> cells;
  uint64_t total = 0;
};

/// Inducing data for the invariant-dimension engines.
struct DepthZeroDatum {
  uint32_t q = 0;            // residue field size (prime)
  IrrepLabel sigma;          // cuspidal label of GL2(F_q), the ZK0 datum
  /// Which constituent of sigma|_{SL2}: -1 = the whole of sigma (the
  /// ZK0-induced Pi+ / Pi- computation), otherwise an index into the
  /// restriction's constituent list.
  int constituent = -1;
  /// vertex 1 = inductions from K'_0; vertex 2 = from d K'_0 d^{-1}.
  int vertex = 1;
};

/// dim of the H-invariants of the compactly induced representation, as an
/// explicit Mackey sum over Cartan cells.  Every cell's local dimension is
/// computed by reducing the conjugated subgroup to SL2(F_q) or GL2(F_q) and
/// running an explicit fixed-space computation on the inducing module.
///   family K  with datum.constituent = -1: dim (Pi^+/Pi^-)^{K'_j}
///     (vertex 1 = Pi^+, vertex 2 = Pi^-);
///   family I / Ihalf: dim tau^{I'_j} for the packet member tau.
MackeySum invariant_dim(const DepthZeroDatum& datum, MPFamily family, uint32_t j);

/// The two (or one) cuspidal constituents of sigma|_{SL2(F_q)}, cached.
const std::vector<MatRep>& sl2_cuspidal_constituents(uint32_t q, const IrrepLabel& sigma);

/// The canonical size-4 depth-zero packet datum at odd q: the cuspidal
/// sigma with theta(b) of order 2.
IrrepLabel size4_sigma_label(uint32_t q);

struct GermCheckReport {
  std::vector<uint32_t> js;
  std::vector<int64_t> diffs;  // D(j)
  bool stabilized = false;
  int64_t constant = 0;
  uint32_t threshold = 0;  // first j from which D is constant
};

enum class GermTarget {
  IndB1,          // ind_{B'}^{G'} 1 against the full size-4 packet
  MemberPair,     // one packet member against another (same packet)
  DropOneMember,  // negative control: ind_{B'}^{G'} 1 against only 3 members
};

/// D(j) = dim(target)^{H'_j} - sum of packet-member invariant dimensions,
/// over j in [j_lo, j_hi]; reports whether D stabilizes.
GermCheckReport germ_identity_check(uint32_t q, MPFamily family, uint32_t j_lo, uint32_t j_hi,
                                    GermTarget target);

}  // namespace sl2p
