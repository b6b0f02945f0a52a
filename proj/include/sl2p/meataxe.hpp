#pragma once

#include "sl2p/reps.hpp"

namespace sl2p {

/// Result of a full composition-series computation.
struct DecompositionReport {
  std::vector<std::pair<MatRep, uint32_t>> constituents;  // pairwise non-isomorphic
  uint32_t length = 0;                                    // with multiplicity
  bool semisimple = false;
  /// Composition series, bottom-up: series[0] is (isomorphic to) an
  /// irreducible submodule of the input.
  std::vector<MatRep> series;
};

/// Brute-force decomposition oracle (Norton-style irreducibility testing
/// with seeded random splitting elements).  Deterministic given seed.
DecompositionReport decompose(const MatRep& rep, uint64_t seed);

/// Composition factors of a module given by generator matrices (one per
/// GroupSpec::generators() entry), bottom-up series order.
std::vector<std::vector<Mat>> composition_series_gens(const std::vector<Mat>& gens, uint64_t seed);

/// dim Hom_G(a, b) via the simultaneous intertwiner space.
size_t hom_dim(const MatRep& a, const MatRep& b);

/// Closed-form length of the restriction to SL2 of the labelled
/// GL2(F_q)-irreducible over a coefficient field of characteristic char_r
/// (0 = characteristic zero).
uint32_t restriction_length(const IrrepLabel& label, uint32_t char_r);

static constexpr size_t kDecomposeDimCap = 512;

}  // namespace sl2p
