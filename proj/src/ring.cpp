#include "sl2p/ring.hpp"

namespace sl2p {

Ring Ring::prime_field(uint32_t p) {
  require(is_prime(p), errc::invalid_input, "p must be prime");
  Ring r;
  r.kind_ = Kind::PrimeField;
  r.p_ = p;
  r.size_ = p;
  return r;
}

Ring Ring::ext_field(FieldPtr f) {
  Ring r;
  r.kind_ = f->degree() == 1 ? Kind::PrimeField : Kind::ExtField;
  r.p_ = f->characteristic();
  r.size_ = f->size();
  r.field_ = std::move(f);
  return r;
}

Ring Ring::int_mod(uint32_t p, uint32_t n) {
  require(is_prime(p) && n >= 1, errc::invalid_input, "need p prime, n >= 1");
  Ring r;
  r.kind_ = Kind::IntMod;
  r.p_ = p;
  r.n_ = n;
  uint64_t s = 1;
  for (uint32_t i = 0; i < n; ++i) s *= p;
  require(s <= (1u << 20), errc::resource_limit, "ring too large");
  r.size_ = uint32_t(s);
  return r;
}

uint32_t Ring::add(uint32_t a, uint32_t b) const {
  if (kind_ == Kind::ExtField) return field_->add(a, b);
  return uint32_t((uint64_t(a) + b) % size_);
}

uint32_t Ring::sub(uint32_t a, uint32_t b) const {
  if (kind_ == Kind::ExtField) return field_->sub(a, b);
  return uint32_t((uint64_t(a) + size_ - b) % size_);
}

uint32_t Ring::neg(uint32_t a) const {
  if (kind_ == Kind::ExtField) return field_->neg(a);
  return (size_ - a) % size_;
}

uint32_t Ring::mul(uint32_t a, uint32_t b) const {
  if (kind_ == Kind::ExtField) return field_->mul(a, b);
  return uint32_t(uint64_t(a) * b % size_);
}

bool Ring::is_unit(uint32_t a) const {
  if (kind_ == Kind::IntMod) return a % p_ != 0;
  return a != 0;
}

uint32_t Ring::inv(uint32_t a) const {
  require(is_unit(a), errc::invalid_input, "not a unit");
  if (kind_ == Kind::ExtField) return field_->inv(a);
  // a^(phi-1); phi = p^(n-1)(p-1) for IntMod, p-1 for prime field
  uint64_t e = (kind_ == Kind::PrimeField) ? p_ - 2 : unit_group_order() - 1;
  uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = r * base % size_;
    base = base * base % size_;
    e >>= 1;
  }
  return uint32_t(r);
}

uint32_t Ring::unit_group_order() const {
  if (kind_ == Kind::IntMod) return size_ / p_ * (p_ - 1);
  return size_ - 1;
}

std::vector<uint32_t> Ring::unit_group_generators() const {
  if (kind_ == Kind::ExtField) return {field_->generator()};
  if (kind_ == Kind::PrimeField) {
    // smallest primitive root mod p
    for (uint32_t g = 1; g < p_; ++g) {
      uint32_t ord = 1;
      uint64_t x = g;
      while (x != 1) {
        x = x * g % p_;
        ++ord;
      }
      if (ord == p_ - 1) return {g};
    }
    return {1};  // p = 2
  }
  // Z/p^n, n >= 2
  if (p_ == 2) {
    if (n_ == 1) return {1};
    if (n_ == 2) return {3};
    return {size_ - 1, 5};  // (Z/2^n)* = <-1> x <5>
  }
  // odd p: cyclic; a primitive root mod p that stays primitive mod p^2 works mod p^n
  Ring fp = Ring::prime_field(p_);
  uint32_t g = fp.unit_group_generators()[0];
  auto ord_mod = [&](uint64_t a, uint64_t m) {
    uint64_t x = a % m, o = 1;
    while (x != 1) {
      x = x * (a % m) % m;
      ++o;
    }
    return o;
  };
  if (ord_mod(g, uint64_t(p_) * p_) != uint64_t(p_) * (p_ - 1)) g += p_;
  return {g};
}

std::string Ring::describe() const {
  switch (kind_) {
    case Kind::PrimeField:
      return "F_" + std::to_string(p_);
    case Kind::ExtField:
      return "F_" + std::to_string(size_);
    default:
      return "Z/" + std::to_string(size_);
  }
}

bool Ring::operator==(const Ring& o) const {
  return kind_ == o.kind_ && p_ == o.p_ && n_ == o.n_ && size_ == o.size_;
}

}  // namespace sl2p
