#pragma once

#include <cstdint>
#include <numeric>

#include "sl2p/field.hpp"

namespace sl2p {

/// Character of the cyclic group F_q* with values in `values`.
/// Parametrized by the exponent j against the canonical generator w of the
/// domain: chi(w) is the canonical (q-1)-st root of unity raised to j.
/// Exponents live mod q-1; over a coefficient field of characteristic l the
/// valid characters are those of l-regular order.
class MultCharacter {
 public:
  MultCharacter(FieldPtr domain, FieldPtr values, uint32_t exponent)
      : dom_(std::move(domain)), val_(std::move(values)), m_(dom_->size() - 1), j_(exponent % std::max(1u, m_)) {
    if (m_ == 0) j_ = 0;
    uint32_t o = order();
    require(o == 1 || (val_->size() - 1) % o == 0, errc::invalid_field,
            "value field lacks roots of unity for this character");
  }

  uint32_t exponent() const { return j_; }
  uint32_t modulus() const { return m_; }
  uint32_t order() const { return m_ == 0 ? 1 : m_ / std::gcd(j_, m_); }
  const FieldPtr& domain() const { return dom_; }
  const FieldPtr& values() const { return val_; }

  Field::elt operator()(Field::elt x) const {
    require(x != 0, errc::invalid_input, "character at zero");
    if (m_ == 0 || j_ == 0) return val_->one();
    uint32_t o = order();
    uint32_t step = j_ / (m_ / o);  // chi(w) = zeta_o^step
    uint64_t e = uint64_t(step) * dom_->dlog(x) % o;
    return val_->pow(val_->root_of_unity(o), int64_t(e));
  }

  MultCharacter times(const MultCharacter& o) const { return {dom_, val_, (j_ + o.j_) % std::max(1u, m_)}; }

 private:
  FieldPtr dom_, val_;
  uint32_t m_, j_;
};

/// The fixed additive character psi(x) = zeta_p^(Tr(x)) of F_q, with zeta_p
/// the canonical p-th root of unity of the value field.
class AdditiveCharacter {
 public:
  AdditiveCharacter(FieldPtr domain, FieldPtr values) : dom_(std::move(domain)), val_(std::move(values)) {
    require((val_->size() - 1) % dom_->characteristic() == 0, errc::invalid_field,
            "value field lacks p-th roots of unity");
    zeta_ = val_->root_of_unity(dom_->characteristic());
  }

  Field::elt operator()(Field::elt x) const { return val_->pow(zeta_, dom_->abs_trace(x)); }
  const FieldPtr& domain() const { return dom_; }
  const FieldPtr& values() const { return val_; }

 private:
  FieldPtr dom_, val_;
  Field::elt zeta_;
};

/// l-regular part of n (n with all factors of l removed); l = 0 returns n.
inline uint32_t regular_part(uint32_t n, uint32_t l) {
  if (l == 0) return n;
  while (n % l == 0) n /= l;
  return n;
}

/// Order of the character with exponent j against a cyclic group of order m.
inline uint32_t char_order(uint32_t j, uint32_t m) { return m == 0 ? 1 : m / std::gcd(j % m, m); }

/// Is exponent j a valid R-character exponent when char_R = l (0 = char 0)?
inline bool char_valid(uint32_t j, uint32_t m, uint32_t l) {
  return l == 0 || regular_part(char_order(j, m), l) == char_order(j, m);
}

/// Exponent of the reduction mod l: the unique l-regular character with the
/// same prime-to-l component (strips the l-power part of the order).
uint32_t reduce_char_exponent(uint32_t j, uint32_t m, uint32_t l);

}  // namespace sl2p
