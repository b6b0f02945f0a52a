#pragma once

#include <utility>
#include <vector>

#include "sl2p/mat.hpp"

namespace sl2p {

/// Basis of the simultaneous intertwiner space {X : A_i X = X B_i for all i},
/// computed as the kernel of the stacked linear system.  Possibly empty.
std::vector<Mat> solve_sylvester(const std::vector<std::pair<Mat, Mat>>& pairs);

}  // namespace sl2p
