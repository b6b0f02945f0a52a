#pragma once

#include <random>
#include <vector>

#include "sl2p/field.hpp"

namespace sl2p {
namespace polyf {

/// Univariate polynomial over a Field, coefficients low-to-high.
using Poly = std::vector<Field::elt>;

Poly trim(Poly f);
size_t degree(const Poly& f);  // degree of the zero polynomial is 0 here
Poly make_monic(const Field& F, Poly f);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, Poly a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& F, Poly a, const Poly& b);
Poly gcd(const Field& F, Poly a, Poly b);
Poly powmod(const Field& F, Poly base, uint64_t e, const Poly& m);
Poly derivative(const Field& F, const Poly& f);

/// Irreducible monic factors with multiplicities (squarefree + distinct
/// degree + Cantor-Zassenhaus equal degree; deterministic given the rng
/// state).
std::vector<std::pair<Poly, uint32_t>> factor(const Field& F, Poly f, std::mt19937_64& rng);

}  // namespace polyf
}  // namespace sl2p
