#include "sl2p/chars.hpp"

namespace sl2p {

uint32_t reduce_char_exponent(uint32_t j, uint32_t m, uint32_t l) {
  if (m == 0) return 0;
  j %= m;
  if (l == 0 || j == 0) return j;
  uint32_t o = char_order(j, m);
  uint32_t la = 1;
  while (o % l == 0) {
    o /= l;
    la *= l;
  }
  if (la == 1) return j;
  // chi has order la*o; chi-bar = chi^(la*t) with la*t == 1 mod o
  if (o == 1) return 0;
  uint64_t t = 1;
  while ((la * t) % o != 1) ++t;
  return uint32_t(uint64_t(j) * la % m * t % m);
}

}  // namespace sl2p
