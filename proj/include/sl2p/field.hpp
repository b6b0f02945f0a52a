#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "sl2p/error.hpp"

namespace sl2p {

/// A finite field F_{l^k}, l prime.  Elements are packed indices
/// sum c_i * l^i for the coefficient vector (c_0,...,c_{k-1}) against the
/// modulus polynomial.  Multiplication runs over discrete-log tables built
/// at construction (fields here stay well below 2^16 elements).
///
/// The modulus is the monic irreducible polynomial of degree k whose packed
/// coefficient integer is smallest; this makes field construction
/// reproducible without external polynomial tables.
class Field {
 public:
  using elt = uint32_t;

  Field(uint32_t characteristic, uint32_t degree);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint32_t size() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  elt zero() const { return 0; }
  elt one() const { return 1; }
  /// Canonical primitive element (smallest packed index generating F*).
  elt generator() const { return gen_; }

  elt add(elt a, elt b) const;
  elt sub(elt a, elt b) const;
  elt neg(elt a) const;
  elt mul(elt a, elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  elt inv(elt a) const {
    require(a != 0, errc::invalid_input, "inverse of zero");
    return exp_[qm1_ - log_[a]];
  }
  elt div(elt a, elt b) const { return mul(a, inv(b)); }
  elt pow(elt a, int64_t e) const;

  /// Discrete log base the canonical generator; a != 0.
  uint32_t dlog(elt a) const {
    require(a != 0, errc::invalid_input, "dlog of zero");
    return log_[a];
  }
  /// Root of unity of exact order n (requires n | q-1).
  elt root_of_unity(uint32_t n) const;
  /// Multiplicative order of a != 0.
  uint32_t order(elt a) const;

  /// Image of the prime subfield element c (an integer mod p).
  elt from_int(uint32_t c) const { return c % p_; }
  /// Frobenius x -> x^p.
  elt frobenius(elt a) const { return pow(a, p_); }
  /// Absolute trace to F_p, returned as an integer in [0, p).
  uint32_t abs_trace(elt a) const;

  /// Evaluate a polynomial (coefficients low-to-high, over this field).
  elt eval_poly(const std::vector<elt>& coeffs, elt x) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  uint32_t p_, k_, q_, qm1_;
  std::vector<uint32_t> modulus_;  // monic, degree k, low-to-high, length k+1
  elt gen_ = 0;
  std::vector<elt> exp_;       // size 2*(q-1): exp_[i] = gen^i
  std::vector<uint32_t> log_;  // size q: log of nonzero elements
  void build_tables();
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(uint32_t characteristic, uint32_t degree);

/// Smallest-degree field of the given characteristic whose multiplicative
/// group order is divisible by lcm(required_orders).
FieldPtr field_with_roots(uint32_t characteristic, const std::set<uint32_t>& required_orders);

bool is_prime(uint64_t n);

/// The subfield embedding F_{l^k} -> F_{l^m} (k | m) sending the small
/// field's generator-polynomial root to the smallest root of the small
/// modulus in the big field.
std::vector<Field::elt> subfield_embedding(const Field& small, const Field& big);

}  // namespace sl2p
