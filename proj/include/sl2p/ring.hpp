#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2p/field.hpp"

namespace sl2p {

/// The three coefficient rings the matrix groups live over: F_p, F_{p^k}
/// (through a Field), and Z/p^n.  Elements are uint32 codes: residues for
/// Z/p^n, packed field elements otherwise.
class Ring {
 public:
  enum class Kind { PrimeField, ExtField, IntMod };

  static Ring prime_field(uint32_t p);
  static Ring ext_field(FieldPtr f);
  static Ring int_mod(uint32_t p, uint32_t n);

  Kind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }  // 1 for fields
  uint32_t size() const { return size_; }
  const FieldPtr& field() const { return field_; }
  bool is_field() const { return kind_ != Kind::IntMod || n_ == 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  bool is_unit(uint32_t a) const;
  uint32_t inv(uint32_t a) const;
  uint32_t one() const { return 1 % size_; }

  /// Generators of the unit group (1 or 2 elements).
  std::vector<uint32_t> unit_group_generators() const;
  uint32_t unit_group_order() const;

  std::string describe() const;
  bool operator==(const Ring& o) const;

 private:
  Kind kind_;
  uint32_t p_ = 0, n_ = 1, size_ = 0;
  FieldPtr field_;
};

}  // namespace sl2p
