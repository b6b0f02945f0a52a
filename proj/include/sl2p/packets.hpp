#pragma once

#include <optional>
#include <string>

#include "sl2p/localfield.hpp"
#include "sl2p/reps.hpp"

namespace sl2p {

/// Classes of the principal-series parameter eta = chi1/chi2 of F* that the
/// reducibility and reduction theorems distinguish.  `Modulus` is the
/// symbolic q^(+-val) (never a root of unity in characteristic 0);
/// `Quadratic` carries which quadratic extension cuts it out;
/// `EllPower` / `QuadTimesEllPower` describe integral parameters whose
/// finite part degenerates mod ell.
struct EtaParam {
  enum class Kind { Trivial, Generic, Quadratic, Modulus, EllPower, QuadTimesEllPower };
  Kind kind = Kind::Generic;
  int modulus_sign = 0;      // for Kind::Modulus: +1 or -1
  bool quad_ramified = false;  // for Quadratic / QuadTimesEllPower
  bool quad_nonres = false;    // which ramified extension
};

/// Descriptor grammar for the irreducible smooth R-representations of
/// GL2(F), F = Q_p (residue field of size q = p), following the
/// non-supercuspidal classification plus the two supercuspidal families.
struct GL2ReplDescriptor {
  enum class Variant {
    FiniteDimChar,
    PrincipalSeries,
    SteinbergTwist,
    Cusp0Twist,
    DepthZeroSC,
    PositiveLevelSC,
  };
  Variant variant = Variant::FiniteDimChar;
  uint32_t q = 0;       // residue field size
  uint32_t char_r = 0;  // coefficient characteristic, 0 or a prime != p
  EtaParam eta;                         // PrincipalSeries
  std::optional<IrrepLabel> sigma;      // DepthZeroSC: a Cusp label over char_r
  bool ext_ramified = false;            // PositiveLevelSC: E/F kind
  bool ext_nonres = false;
  std::optional<LocalCharacter> xi;     // PositiveLevelSC with p = 2
  int twice_depth = 2;                  // PositiveLevelSC: 2*delta_Pi (minimal depth)
};

/// Packet size, component group, E_Pi, level and cuspidal class.
PacketReport packet_report(const GL2ReplDescriptor& pi);

struct PSLengthReport {
  uint32_t length = 1;
  bool semisimple = true;
  std::vector<std::string> constituents;
};

/// Length and shape of i_{B'}^{G'}(eta) over a coefficient field of
/// characteristic char_r.
PSLengthReport principal_series_length_sl2(const EtaParam& eta, uint32_t q, uint32_t char_r);

/// Non-cuspidal representations of SL2(F) for the mod-ell reduction table.
struct NonCuspidalDescriptor {
  enum class Variant { TrivialChar, Steinberg, PSComponent, PrincipalSeries };
  Variant variant = Variant::PrincipalSeries;
  EtaParam eta;                 // PrincipalSeries (integral parameter over Q_ell)
  bool component_ramified = false;  // PSComponent: which E in i(eta_E)
  bool integral = true;
};

/// lg r_ell(pi-tilde) for integral non-cuspidal pi-tilde.
uint32_t mod_ell_lengths_noncuspidal(const NonCuspidalDescriptor& pi, uint32_t ell, uint32_t q);

struct GermConstant {
  int64_t a_pi = 0;
  // per-packet constant a_pi / |L(Pi)| as an exact fraction
  int64_t num = 0;
  uint64_t den = 1;
  bool half_integer = false;  // true exactly for p odd, size-4 packets
};

/// The constant term a_Pi of the identity-germ comparison, and the
/// per-packet constant a_Pi/|L(Pi)|.
GermConstant germ_constant(const GL2ReplDescriptor& pi);

/// Does the restriction of Pi to the index-2 subgroup H = Z K_0 G' split?
/// True exactly for the depth-zero cuspidals (induced from Z K_0) and, when
/// char_R != 2, for principal series whose parameter is the unramified
/// quadratic character (-1)^val.
bool h_restriction_reducible(const GL2ReplDescriptor& pi);

}  // namespace sl2p
