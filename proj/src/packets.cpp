#include "sl2p/packets.hpp"

#include "sl2p/meataxe.hpp"

namespace sl2p {

namespace {

std::string group_label(uint32_t size, uint32_t char_r) {
  if (char_r == 2) return "1";
  switch (size) {
    case 1: return "1";
    case 2: return "Z/2";
    case 4: return "Z/2 x Z/2";
  }
  return "?";
}

std::string quad_descr(bool ramified, bool nonres) {
  if (!ramified) return "unramified quadratic (norms: units x p^(2Z))";
  return nonres ? "ramified quadratic sqrt(u*p)" : "ramified quadratic sqrt(p)";
}

}  // namespace

PacketReport packet_report(const GL2ReplDescriptor& pi) {
  PacketReport rep;
  const uint32_t q = pi.q;
  const uint32_t c = pi.char_r;
  require(q >= 2, errc::invalid_input, "descriptor needs q >= 2");
  require(c == 0 || (is_prime(c) && q % c != 0), errc::invalid_input, "char_R must be 0 or a prime != p");
  rep.level_class = "level-0";
  rep.cuspidal_class = "non-cuspidal";
  rep.e_pi = "F* (trivial: singleton packet)";
  switch (pi.variant) {
    case GL2ReplDescriptor::Variant::FiniteDimChar:
      rep.size = 1;
      break;
    case GL2ReplDescriptor::Variant::PrincipalSeries: {
      // equality against q^(+-val) uses the symbolic flag plus the residue
      // of q in R: a trivial parameter with q = 1 in R, and the unramified
      // quadratic with q = -1 in R, are the modulus character
      bool is_modulus = pi.eta.kind == EtaParam::Kind::Modulus;
      if (c != 0 && (q - 1) % c == 0 &&
          (pi.eta.kind == EtaParam::Kind::Trivial || pi.eta.kind == EtaParam::Kind::EllPower))
        is_modulus = true;
      if (c != 0 && (q + 1) % c == 0 && !pi.eta.quad_ramified &&
          (pi.eta.kind == EtaParam::Kind::Quadratic || pi.eta.kind == EtaParam::Kind::QuadTimesEllPower))
        is_modulus = true;
      require(!is_modulus, errc::invalid_input,
              "PrincipalSeries descriptor requires an irreducible parameter (eta != q^(+-val) in R)");
      if (pi.eta.kind == EtaParam::Kind::Quadratic && c != 2) {
        rep.size = 2;
        rep.e_pi = quad_descr(pi.eta.quad_ramified, pi.eta.quad_nonres);
      } else {
        rep.size = 1;
      }
      break;
    }
    case GL2ReplDescriptor::Variant::SteinbergTwist:
      require(c == 0 || (q + 1) % c != 0, errc::invalid_input, "Steinberg exists only when q+1 != 0 in R");
      rep.size = 1;
      break;
    case GL2ReplDescriptor::Variant::Cusp0Twist:
      require(c != 0 && (q + 1) % c == 0, errc::invalid_input, "Cusp0 twist exists only when q+1 = 0 in R");
      rep.cuspidal_class = "cuspidal-not-supercuspidal";
      if (c == 2) {
        rep.size = 4;
        rep.e_pi = "biquadratic (norms: (F*)^2)";
      } else {
        rep.size = 2;
        rep.e_pi = quad_descr(false, false);
      }
      break;
    case GL2ReplDescriptor::Variant::DepthZeroSC: {
      require(pi.sigma.has_value() && pi.sigma->kind == IrrepLabel::Kind::Cusp, errc::invalid_input,
              "DepthZeroSC needs a cuspidal label");
      require(pi.sigma->q == q, errc::invalid_input, "sigma label lives over the residue field");
      rep.cuspidal_class = "supercuspidal";
      rep.size = 2 * restriction_length(*pi.sigma, c);
      rep.e_pi = rep.size == 2 ? quad_descr(false, false) : "biquadratic (norms: (F*)^2)";
      break;
    }
    case GL2ReplDescriptor::Variant::PositiveLevelSC: {
      rep.level_class = "positive";
      rep.cuspidal_class = "supercuspidal";
      if (q != 2) {
        rep.size = 2;
        rep.e_pi = quad_descr(pi.ext_ramified, pi.ext_nonres);
      } else {
        require(!pi.ext_ramified, errc::unsupported, "p = 2 ramified positive level is not modelled");
        require(pi.xi.has_value(), errc::invalid_input, "p = 2 positive level needs the character xi");
        if (c == 2) fail(errc::invalid_input, "char_R = 2 forces p odd");
        XSigmaReport xs = x_sigma(*pi.xi);
        rep.size = xs.size;
        rep.e_pi = xs.size == 2 ? quad_descr(false, false) : xs.biquadratic;
      }
      break;
    }
  }
  rep.component_group = group_label(rep.size, c);
  return rep;
}

PSLengthReport principal_series_length_sl2(const EtaParam& eta, uint32_t q, uint32_t char_r) {
  PSLengthReport rep;
  auto modulus_case = [&]() {
    // lg(ind_{B'}^{G'} 1)
    if (char_r == 2) {
      rep.length = 6;
      rep.semisimple = false;
      rep.constituents = {"1", "1", "four components of Pi_0|_{G'}"};
    } else if (char_r != 0 && (q + 1) % char_r == 0) {
      rep.length = 4;
      rep.semisimple = false;
      rep.constituents = {"1", "1", "two components of Pi_0|_{G'}"};
    } else {
      rep.length = 2;
      rep.semisimple = false;
      rep.constituents = {"1", "st"};
    }
    return rep;
  };
  switch (eta.kind) {
    case EtaParam::Kind::Generic:
      rep.length = 1;
      rep.constituents = {"irreducible principal series"};
      return rep;
    case EtaParam::Kind::Trivial:
    case EtaParam::Kind::EllPower:
      // trivial finite part equals q^(+-val) in R exactly when q = 1 in R
      if (char_r != 0 && (q - 1) % char_r == 0) return modulus_case();
      rep.length = 1;
      rep.constituents = {"irreducible principal series"};
      return rep;
    case EtaParam::Kind::Quadratic:
    case EtaParam::Kind::QuadTimesEllPower:
      require(char_r != 2, errc::invalid_input, "no quadratic characters in characteristic 2");
      // the unramified quadratic equals q^(+-val) in R exactly when q = -1 in R
      if (!eta.quad_ramified && char_r != 0 && (q + 1) % char_r == 0) return modulus_case();
      rep.length = 2;
      rep.semisimple = true;
      rep.constituents = {"pi_E^+", "pi_E^-"};
      return rep;
    case EtaParam::Kind::Modulus:
      return modulus_case();
  }
  return rep;
}

uint32_t mod_ell_lengths_noncuspidal(const NonCuspidalDescriptor& pi, uint32_t ell, uint32_t q) {
  require(is_prime(ell) && q % ell != 0, errc::invalid_input, "ell must be a prime != p");
  require(pi.integral, errc::not_integral, "non-integral principal series has no reduction");
  const bool ell_divides_qp1 = (q + 1) % ell == 0;
  const bool ell_divides_qm1 = (q - 1) % ell == 0;
  switch (pi.variant) {
    case NonCuspidalDescriptor::Variant::TrivialChar:
      return 1;
    case NonCuspidalDescriptor::Variant::Steinberg:
      if (ell == 2) return 5;
      if (ell_divides_qp1) return 3;
      return 1;
    case NonCuspidalDescriptor::Variant::PSComponent: {
      // pi_E^+-: component of i(eta_E) over Q_ell
      if (ell == 2) return 3;
      if (!pi.component_ramified && ell_divides_qp1) return 2;  // eta_E becomes q^val mod ell
      return 1;
    }
    case NonCuspidalDescriptor::Variant::PrincipalSeries: {
      // reduce the parameter and apply the reducibility criterion
      switch (pi.eta.kind) {
        case EtaParam::Kind::Generic:
          return 1;
        case EtaParam::Kind::Trivial:
        case EtaParam::Kind::Modulus:
          fail(errc::invalid_input, "reducible or non-irreducible parameter is not a PS descriptor");
        case EtaParam::Kind::Quadratic:
          // stays quadratic mod odd ell; collapses for ell = 2 (handled as PSComponent upstream)
          require(ell != 2, errc::invalid_input, "an order-2 parameter is not integral-irreducible data at ell = 2");
          if (!pi.eta.quad_ramified && ell_divides_qp1) return 4;  // eta bar = q^val
          return 2;  // wait: i(eta_E) itself is reducible; not an irreducible PS
        case EtaParam::Kind::EllPower: {
          // eta bar = 1: i(1) has length 6 / 4 / 2 / 1 by Prop-v cases
          if (ell == 2) return 6;
          if (ell_divides_qp1) return 4;
          if (ell_divides_qm1) return 2;  // 1 = q^(+-val) mod ell
          return 1;
        }
        case EtaParam::Kind::QuadTimesEllPower: {
          // eta bar = eta_E
          if (ell == 2) return 6;  // quadratic part is itself 2-power: eta bar = 1
          if (!pi.eta.quad_ramified && ell_divides_qp1) return 4;
          return 2;
        }
      }
      return 1;
    }
  }
  return 1;
}

bool h_restriction_reducible(const GL2ReplDescriptor& pi) {
  switch (pi.variant) {
    case GL2ReplDescriptor::Variant::DepthZeroSC:
      return true;  // induced from Z K_0
    case GL2ReplDescriptor::Variant::Cusp0Twist:
      return true;  // Pi_0 is also induced from Z K_0
    case GL2ReplDescriptor::Variant::PrincipalSeries:
      return pi.char_r != 2 && pi.eta.kind == EtaParam::Kind::Quadratic && !pi.eta.quad_ramified;
    default:
      return false;
  }
}

GermConstant germ_constant(const GL2ReplDescriptor& pi) {
  GermConstant g;
  uint32_t q = pi.q;
  int64_t qpow = 1;
  switch (pi.variant) {
    case GL2ReplDescriptor::Variant::FiniteDimChar:
      fail(errc::invalid_input, "germ constant needs an infinite-dimensional representation");
    case GL2ReplDescriptor::Variant::PrincipalSeries:
      g.a_pi = 0;
      break;
    case GL2ReplDescriptor::Variant::SteinbergTwist:
      require(pi.char_r == 0 || (q + 1) % pi.char_r != 0, errc::invalid_input, "Steinberg needs q+1 != 0 in R");
      g.a_pi = -1;
      break;
    case GL2ReplDescriptor::Variant::Cusp0Twist:
    case GL2ReplDescriptor::Variant::DepthZeroSC:
      g.a_pi = -2;  // depth zero
      break;
    case GL2ReplDescriptor::Variant::PositiveLevelSC: {
      int td = pi.twice_depth;
      require(td >= 1, errc::invalid_input, "positive level needs positive depth");
      if (td % 2 == 0) {
        for (int i = 0; i < td / 2; ++i) qpow *= q;
        g.a_pi = -2 * qpow;  // -2 q^delta
      } else {
        for (int i = 0; i < (td - 1) / 2; ++i) qpow *= q;
        g.a_pi = -int64_t(q + 1) * qpow;  // -(q+1) q^(delta - 1/2)
      }
      break;
    }
  }
  uint32_t size = packet_report(pi).size;
  g.num = g.a_pi;
  g.den = size;
  int64_t gg = std::gcd(g.num < 0 ? -g.num : g.num, int64_t(g.den));
  if (gg > 1) {
    g.num /= gg;
    g.den /= uint64_t(gg);
  }
  g.half_integer = (g.den == 2);
  return g;
}

}  // namespace sl2p
