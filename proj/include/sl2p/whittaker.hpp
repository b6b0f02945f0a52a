#pragma once

#include <cstdint>
#include <vector>

#include "sl2p/intmat.hpp"

namespace sl2p {
namespace wh {

/// Points of F_2^d are bitmasks 0 .. 2^d - 1.

/// 1 + 2^d: the trivial orbit plus one maximal orbit per class in V_H.
uint64_t nilpotent_orbit_count(uint32_t d);

/// All linear subspaces of F_2^d of dimension k, each given by a canonical
/// (RREF) basis of bitmask rows.
std::vector<std::vector<uint32_t>> linear_subspaces(uint32_t d, uint32_t k);

/// Points of the subspace spanned by basis rows.
std::vector<uint32_t> span_points(const std::vector<uint32_t>& basis);

struct AffinePartition {
  std::vector<uint32_t> direction;             // basis of the direction subspace
  std::vector<std::vector<uint32_t>> cosets;   // 2^c cosets, each a point list
};

/// All partitions of F_2^d into parallel affine subspaces of codimension
/// c in {0, 1, 2}: one partition per direction subspace.
std::vector<AffinePartition> whittaker_partitions(uint32_t d, uint32_t codim);

/// The lattice I_r spanned by characteristic vectors of all r-dimensional
/// affine subspaces of F_2^d, as a matrix with one column per subspace.
IntMat affine_lattice_generators(uint32_t d, uint32_t r);

/// Exponent of I_0/I_r (largest invariant-factor quotient); equals 2^r.
/// Pre: 0 <= r < d <= 5.
uint64_t lattice_exponent(uint32_t d, uint32_t r);

/// 2 * chi_A lies in I_r for every (r-1)-dimensional affine subspace A.
bool doubling_inclusion_check(uint32_t d, uint32_t r);

}  // namespace wh
}  // namespace sl2p
