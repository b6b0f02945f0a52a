#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "sl2p/error.hpp"

namespace sl2p {

/// Rational mod 1: the exponent of an abstract root of unity e(num/den).
struct QZ {
  int64_t num = 0;
  uint64_t den = 1;
  static QZ make(int64_t n, uint64_t d);
  QZ operator+(const QZ& o) const;
  QZ operator-(const QZ& o) const;
  QZ scaled(int64_t k) const;
  bool operator==(const QZ& o) const = default;
  bool is_zero() const { return num == 0; }
  uint64_t order() const { return den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Finite-level model of a quadratic extension E/Q_p: the ring O_E/P_E^n
/// with Galois action, norm, valuation, and a deterministic basis of the
/// unit group.  Unramified for any p; ramified kinds for odd p only.
class QuadExt {
 public:
  static std::shared_ptr<const QuadExt> unramified(uint32_t p, uint32_t level = 4);
  /// E = Q_p(sqrt(u p)); unit_class false -> u = 1, true -> u = canonical
  /// non-residue.  p odd.
  static std::shared_ptr<const QuadExt> ramified(uint32_t p, bool nonresidue_unit, uint32_t level = 4);

  struct Elt {
    uint64_t a = 0, b = 0;  // a + b*omega (unramified) or a + b*varpi (ramified)
    bool operator==(const Elt&) const = default;
  };

  uint32_t p() const { return p_; }
  bool ramified() const { return ramified_; }
  bool nonresidue_unit() const { return nonres_; }
  uint32_t level() const { return level_; }
  uint32_t residue_q() const { return p_; }  // residue field of F = Q_p

  Elt zero() const { return {0, 0}; }
  Elt one() const { return {1, 0}; }
  Elt from_pair(uint64_t a, uint64_t b) const { return {a % ma_, b % mb_}; }
  uint64_t code(const Elt& x) const { return x.a * mb_ + x.b; }
  Elt decode(uint64_t c) const { return {c / mb_, c % mb_}; }

  Elt add(const Elt& x, const Elt& y) const;
  Elt neg(const Elt& x) const;
  Elt mul(const Elt& x, const Elt& y) const;
  Elt pow(const Elt& x, uint64_t e) const;
  bool is_unit(const Elt& x) const;
  Elt unit_inverse(const Elt& x) const;
  /// Galois conjugate (Frobenius lift / varpi -> -varpi).
  Elt tau(const Elt& x) const;
  /// Norm to F: an element of Z/p^(F-precision) (the `a` part of x*tau(x)).
  uint64_t norm(const Elt& x) const;
  /// F-side precision of the model: p^level (unramified), p^ceil(level/2) (ramified).
  uint64_t f_modulus() const { return f_mod_; }

  const std::vector<Elt>& units() const { return units_; }
  struct UnitBasis {
    std::vector<Elt> gens;
    std::vector<uint32_t> orders;  // prime-power orders, one per generator
  };
  const UnitBasis& unit_basis() const { return basis_; }
  /// Coordinates of a unit against the basis.
  const std::vector<uint32_t>& unit_dlog(const Elt& u) const;
  /// Elements of 1 + P_E (within the unit list).
  std::vector<Elt> one_plus_p() const;
  /// The canonical element of exact multiplicative order n (smallest code).
  Elt unit_of_order(uint32_t n) const;

  std::string describe() const;

 private:
  uint32_t p_, level_;
  bool ramified_ = false, nonres_ = false;
  uint64_t ma_, mb_;  // moduli of the two coordinates
  uint64_t f_mod_;
  uint32_t modc1_ = 0, modc0_ = 0;  // unramified: omega^2 = -c1*omega - c0
  uint64_t ram_u_ = 1;              // ramified: varpi^2 = p * ram_u
  std::vector<Elt> units_;
  UnitBasis basis_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> dlog_;
  QuadExt(uint32_t p, bool ram, bool nonres, uint32_t level);
  void build_units();
};

using QuadExtPtr = std::shared_ptr<const QuadExt>;

/// Finite-order smooth character of E*: a value on the uniformizer plus
/// values on the canonical unit-group basis, all as abstract roots of unity.
class LocalCharacter {
 public:
  LocalCharacter(QuadExtPtr ext, QZ unif_value, std::vector<QZ> gen_values);

  const QuadExtPtr& ext() const { return ext_; }
  const QZ& unif_value() const { return unif_; }
  const std::vector<QZ>& gen_values() const { return gen_; }

  QZ value_on_unit(const QuadExt::Elt& u) const;
  /// Value at varpi^v * u.
  QZ value(int64_t v, const QuadExt::Elt& u) const { return unif_.scaled(v) + value_on_unit(u); }

  LocalCharacter galois_conjugate() const;
  LocalCharacter ratio(const LocalCharacter& o) const;  // this * o^-1
  LocalCharacter times(const LocalCharacter& o) const;
  uint32_t order() const;
  bool is_trivial() const;
  uint32_t order_on_one_plus_p() const;
  bool operator==(const LocalCharacter& o) const;

 private:
  QuadExtPtr ext_;
  QZ unif_;
  std::vector<QZ> gen_;
};

/// Characters of F* = Q_p* at the finite level of the given modulus p^a:
/// value on p plus values on the (Z/p^a)* basis.
struct FCharacter {
  uint32_t p = 0, a = 0;
  QZ p_value;
  std::vector<QZ> gen_values;
};

/// Structured answer of the packet oracles.
struct PacketReport {
  uint32_t size = 0;                // 1, 2 or 4
  std::string component_group;      // "1", "Z/2", "Z/2 x Z/2"
  std::string e_pi;                 // norm-group descriptor of E_Pi
  std::string level_class;          // "level-0" | "positive"
  std::string cuspidal_class;       // "supercuspidal" | "cuspidal-not-supercuspidal" | "non-cuspidal"
};

struct XSigmaReport {
  uint32_t size = 0;  // 2 or 4
  std::vector<std::string> characters;
  std::string biquadratic;  // nonempty when size = 4
};

/// |X_{sigma(E,xi)}| and the character set (Clifford data of the induced
/// Weil representation).  Requires xi regular (xi != xi^tau); char_R != 2.
XSigmaReport x_sigma(const LocalCharacter& xi);

/// Length (1 or 2) of the mod-l reduction of the supercuspidal of SL2(F)
/// attached to xi-tilde.
uint32_t mod_ell_sc_length(const LocalCharacter& xi, uint32_t ell);

struct NormGroupReport {
  // classes of F*/(F*)^2 lying in N(E*), in the order {1, u, p, up} (p odd)
  bool cls[4] = {false, false, false, false};
  uint32_t index = 0;  // always 2
  std::string describe;
};

NormGroupReport norm_group_index(const QuadExt& E);

/// All quadratic (order <= 2) characters of F* at level a, nontrivial ones.
std::vector<FCharacter> quadratic_f_characters(uint32_t p, uint32_t a);

/// eta o N_{E/F} as a character of E*.
LocalCharacter compose_with_norm(const QuadExtPtr& E, const FCharacter& eta);

}  // namespace sl2p
