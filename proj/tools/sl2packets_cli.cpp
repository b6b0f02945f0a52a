// Command-line front end: every subcommand that has both a closed form and a
// brute-force path runs both and prints PASS/FAIL; --fast skips the oracle.
//
// Exit codes: 0 = all cross-checks passed, 1 = a cross-check failed,
// 2 = usage error, 3 = resource limit.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl2p/meataxe.hpp"
#include "sl2p/moyprasad.hpp"
#include "sl2p/packets.hpp"
#include "sl2p/whittaker.hpp"

using namespace sl2p;
using json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string format = "text";
  std::string path;
  json j;
  std::ostringstream text;
  std::ostringstream csv;
  bool failed = false;

  void check(bool ok) {
    if (!ok) failed = true;
  }
  int finish() {
    std::string body;
    if (format == "json")
      body = j.dump(2) + "\n";
    else if (format == "csv")
      body = csv.str();
    else
      body = text.str();
    if (path.empty())
      std::cout << body;
    else
      std::ofstream(path) << body;
    return failed ? 1 : 0;
  }
};

uint64_t upow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

IrrepLabel parse_label(uint32_t q, std::string s) {
  auto lp = s.find('('), rp = s.rfind(')');
  require(lp != std::string::npos && rp != std::string::npos && rp > lp, errc::invalid_input,
          "label syntax: Char(j) | St(j) | Princ(a,b) | Cusp(t) | Cusp(theta:b->orderM) | Cusp0(j)");
  std::string head = s.substr(0, lp), args = s.substr(lp + 1, rp - lp - 1);
  if (head == "Char") return IrrepLabel::make_char(q, uint32_t(std::stoul(args)));
  if (head == "St") return IrrepLabel::make_st_twist(q, uint32_t(std::stoul(args)));
  if (head == "Cusp0") return IrrepLabel::make_cusp0_twist(q, uint32_t(std::stoul(args)));
  if (head == "Princ") {
    auto comma = args.find(',');
    require(comma != std::string::npos, errc::invalid_input, "Princ needs two exponents");
    return IrrepLabel::make_princ(q, uint32_t(std::stoul(args.substr(0, comma))),
                                  uint32_t(std::stoul(args.substr(comma + 1))));
  }
  if (head == "Cusp") {
    auto arrow = args.find("b->order");
    if (arrow == std::string::npos) return IrrepLabel::make_cusp(q, uint32_t(std::stoul(args)));
    // smallest theta exponent with theta(b) of the requested order, b of order q+1
    uint32_t want = uint32_t(std::stoul(args.substr(arrow + 8)));
    uint32_t m2 = q * q - 1;
    for (uint32_t t = 1; t < m2; ++t) {
      uint64_t tb = uint64_t(t) * (q - 1) % m2;  // theta(b) exponent against zeta_{q^2-1}
      uint32_t ord = uint32_t(m2 / std::gcd<uint64_t>(tb == 0 ? m2 : tb, m2));
      if (ord != want) continue;
      if (uint32_t(uint64_t(t) * q % m2) == t) continue;
      return IrrepLabel::make_cusp(q, t);
    }
    fail(errc::invalid_input, "no theta with theta(b) of order " + std::to_string(want));
  }
  fail(errc::invalid_input, "unknown label kind " + head);
}

QZ parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return QZ::make(std::stoll(s), 1);
  return QZ::make(std::stoll(s.substr(0, slash)), std::stoull(s.substr(slash + 1)));
}

LocalCharacter parse_character(const json& spec) {
  uint32_t p = spec.at("p").get<uint32_t>();
  bool ram = spec.value("ramified", false);
  uint32_t level = spec.value("level", 4u);
  QuadExtPtr E = ram ? QuadExt::ramified(p, spec.value("unit_class", false), level)
                     : QuadExt::unramified(p, level);
  QZ unif = parse_fraction(spec.value("unif_value", std::string("0")));
  std::vector<QZ> gen_vals;
  for (const auto& v : spec.at("gen_values")) gen_vals.push_back(parse_fraction(v.get<std::string>()));
  return LocalCharacter(E, unif, gen_vals);
}

json character_schema_hint() {
  return json{{"p", 2},
              {"ramified", false},
              {"level", 4},
              {"unif_value", "0/1"},
              {"gen_values", json::array({"1/3", "0/1", "1/2"})}};
}

MPFamily parse_family(const std::string& f) {
  if (f == "K") return MPFamily::K;
  if (f == "Kd") return MPFamily::Kd;
  if (f == "I") return MPFamily::I;
  if (f == "Ihalf") return MPFamily::Ihalf;
  fail(errc::invalid_input, "family must be one of K, Kd, I, Ihalf");
}

json label_json(const IrrepLabel& l) {
  return json{{"label", l.describe()}, {"dim", l.dim()}};
}

GL2ReplDescriptor parse_descriptor(const json& spec) {
  GL2ReplDescriptor d;
  std::string v = spec.at("variant").get<std::string>();
  d.q = spec.at("q").get<uint32_t>();
  d.char_r = spec.value("char_r", 0u);
  if (v == "finite_dim_char")
    d.variant = GL2ReplDescriptor::Variant::FiniteDimChar;
  else if (v == "principal_series")
    d.variant = GL2ReplDescriptor::Variant::PrincipalSeries;
  else if (v == "steinberg_twist")
    d.variant = GL2ReplDescriptor::Variant::SteinbergTwist;
  else if (v == "cusp0_twist")
    d.variant = GL2ReplDescriptor::Variant::Cusp0Twist;
  else if (v == "depth_zero_sc")
    d.variant = GL2ReplDescriptor::Variant::DepthZeroSC;
  else if (v == "positive_level_sc")
    d.variant = GL2ReplDescriptor::Variant::PositiveLevelSC;
  else
    fail(errc::invalid_input, "unknown variant " + v);
  if (spec.contains("eta")) {
    const auto& e = spec["eta"];
    std::string kind = e.value("kind", std::string("generic"));
    if (kind == "trivial") d.eta.kind = EtaParam::Kind::Trivial;
    else if (kind == "generic") d.eta.kind = EtaParam::Kind::Generic;
    else if (kind == "quadratic") d.eta.kind = EtaParam::Kind::Quadratic;
    else if (kind == "modulus") d.eta.kind = EtaParam::Kind::Modulus;
    else if (kind == "ell_power") d.eta.kind = EtaParam::Kind::EllPower;
    else if (kind == "quad_times_ell_power") d.eta.kind = EtaParam::Kind::QuadTimesEllPower;
    else fail(errc::invalid_input, "unknown eta kind " + kind);
    d.eta.modulus_sign = e.value("modulus_sign", 0);
    d.eta.quad_ramified = e.value("quad_ramified", false);
    d.eta.quad_nonres = e.value("quad_nonres", false);
  }
  if (spec.contains("sigma")) d.sigma = parse_label(d.q, spec["sigma"].get<std::string>());
  if (spec.contains("ext")) {
    d.ext_ramified = spec["ext"].value("ramified", false);
    d.ext_nonres = spec["ext"].value("nonres", false);
  }
  if (spec.contains("xi")) d.xi = parse_character(spec["xi"]);
  d.twice_depth = spec.value("twice_depth", d.ext_ramified ? 1 : 2);
  return d;
}

// ---------------------------------------------------------------- commands

int cmd_irreps(Output& out, uint32_t q, uint32_t char_r, bool fast, uint64_t seed) {
  const GLContext& ctx = GLContext::get(q);
  FieldPtr F = ctx.coefficient_field(char_r);
  auto labels = valid_labels(q, char_r);
  out.j = json{{"command", "irreps"}, {"q", q}, {"char_r", char_r}, {"labels", json::array()}};
  out.text << "irreducible R-representations of GL2(F_" << q << "), char_R = " << char_r << "\n";
  out.csv << "label,dim,restriction_length,meataxe_length,status\n";
  uint64_t sumsq = 0;
  for (const auto& l : labels) {
    uint32_t closed = restriction_length(l, char_r);
    uint32_t measured = closed;
    std::string status = "SKIPPED";
    if (!fast) {
      MatRep r = construct(ctx, F, l);
      sumsq += uint64_t(r.dim()) * r.dim();
      measured = decompose(restrict_to_sl2(ctx, r), seed).length;
      status = measured == closed ? "PASS" : "FAIL";
      out.check(measured == closed);
    }
    out.text << "  " << l.describe() << "  dim " << l.dim() << "  lg(restriction) " << closed;
    if (!fast) out.text << "  meataxe " << measured << " " << status;
    out.text << "\n";
    out.csv << l.describe() << "," << l.dim() << "," << closed << "," << measured << "," << status << "\n";
    json lj = label_json(l);
    lj["restriction_length"] = closed;
    lj["meataxe_length"] = measured;
    lj["status"] = status;
    out.j["labels"].push_back(lj);
  }
  out.text << "  count " << labels.size();
  if (char_r == 0) {
    out.text << " (q^2-1: " << q * q - 1 << ")";
    out.check(labels.size() == q * q - 1);
    if (!fast) {
      out.text << ", sum dim^2 = " << sumsq << " (|G|: " << ctx.gl2->order() << ")";
      out.check(sumsq == ctx.gl2->order());
    }
  }
  out.text << "\n";
  out.j["count"] = labels.size();
  return 0;
}

int cmd_restrict(Output& out, uint32_t q, const std::string& label_s, uint32_t char_r, bool fast,
                 uint64_t seed) {
  IrrepLabel l = parse_label(q, label_s);
  uint32_t closed = restriction_length(l, char_r);
  out.text << l.describe() << " restricted to SL2(F_" << q << "): length " << closed;
  out.j = json{{"command", "restrict"}, {"q", q}, {"label", l.describe()}, {"char_r", char_r},
               {"length", closed}};
  if (!fast) {
    const GLContext& ctx = GLContext::get(q);
    MatRep r = construct(ctx, ctx.coefficient_field(char_r), l);
    auto rep = decompose(restrict_to_sl2(ctx, r), seed);
    bool ok = rep.length == closed;
    out.check(ok);
    out.text << "; meataxe: " << rep.length << " " << (ok ? "PASS" : "FAIL");
    out.j["meataxe_length"] = rep.length;
    out.j["status"] = ok ? "PASS" : "FAIL";
    json dims = json::array();
    for (const auto& s : rep.series) dims.push_back(s.dim());
    out.j["constituent_dims"] = dims;
  }
  out.text << "\n";
  return 0;
}

int cmd_mod_ell(Output& out, uint32_t q, const std::string& label_s, uint32_t ell, bool fast,
                uint64_t seed) {
  IrrepLabel l = parse_label(q, label_s);
  auto constituents = reduce_label_mod_ell(l, ell);
  out.text << l.describe() << " mod " << ell << ": length " << constituents.size() << ", constituents";
  out.j = json{{"command", "mod-ell"}, {"q", q}, {"label", l.describe()}, {"ell", ell},
               {"constituents", json::array()}};
  for (const auto& c : constituents) {
    out.text << " " << c.describe();
    out.j["constituents"].push_back(label_json(c));
  }
  if (!fast) {
    // oracle: length of the reduction measured on the reduced label data
    const GLContext& ctx = GLContext::get(q);
    FieldPtr F = ctx.coefficient_field(ell);
    uint32_t dim_total = 0;
    for (const auto& c : constituents) {
      MatRep r = construct(ctx, F, c);
      dim_total += uint32_t(r.dim());
      out.check(decompose(r, seed).length == 1);
    }
    bool ok = dim_total == l.dim();
    out.check(ok);
    out.text << "; dim " << dim_total << "/" << l.dim() << " " << (ok ? "PASS" : "FAIL");
    out.j["status"] = ok ? "PASS" : "FAIL";
  }
  out.text << "\n";
  return 0;
}

int cmd_packet(Output& out, const std::string& spec_s) {
  GL2ReplDescriptor d = parse_descriptor(json::parse(spec_s));
  PacketReport rep = packet_report(d);
  out.text << "packet size " << rep.size << ", component group " << rep.component_group << ", E_Pi: "
           << rep.e_pi << ", " << rep.level_class << ", " << rep.cuspidal_class << "\n";
  out.j = json{{"command", "packet"},         {"size", rep.size},
               {"component_group", rep.component_group}, {"e_pi", rep.e_pi},
               {"level_class", rep.level_class},         {"cuspidal_class", rep.cuspidal_class}};
  return 0;
}

int cmd_x_sigma(Output& out, const std::string& spec_s) {
  LocalCharacter xi = parse_character(json::parse(spec_s));
  XSigmaReport rep = x_sigma(xi);
  out.text << "|X_sigma| = " << rep.size << "; characters:";
  for (const auto& c : rep.characters) out.text << " " << c;
  if (!rep.biquadratic.empty()) out.text << "; " << rep.biquadratic;
  out.text << "\n";
  out.j = json{{"command", "x-sigma"}, {"size", rep.size}, {"characters", rep.characters},
               {"biquadratic", rep.biquadratic}};
  return 0;
}

int cmd_sc_mod_ell(Output& out, const std::string& spec_s, uint32_t ell) {
  LocalCharacter xi = parse_character(json::parse(spec_s));
  uint32_t len = mod_ell_sc_length(xi, ell);
  out.text << "mod-" << ell << " reduction length of the supercuspidal: " << len << "\n";
  out.j = json{{"command", "sc-mod-ell"}, {"ell", ell}, {"length", len}};
  return 0;
}

int cmd_census(Output& out, uint32_t p, const std::string& family_s, uint32_t j, bool fast) {
  MPFamily f = parse_family(family_s);
  CensusResult r = coset_census(p, f, j);
  bool ok = r.count_sl2 == r.formula && (fast || r.bijective());
  out.check(ok);
  const char* fname = (f == MPFamily::K || f == MPFamily::Kd) ? "(q+1)q^j" : "2q^j";
  out.text << r.count_sl2 << " (formula " << fname << ": " << r.formula << ") "
           << (r.count_sl2 == r.formula ? "PASS" : "FAIL");
  if (!fast)
    out.text << "; GL2 side " << r.count_gl2 << " " << (r.bijective() ? "PASS" : "FAIL");
  out.text << "\n";
  out.j = json{{"command", "census"},      {"p", p},
               {"family", family_s},       {"j", j},
               {"count_sl2", r.count_sl2}, {"count_gl2", r.count_gl2},
               {"formula", r.formula},     {"level", r.level},
               {"status", ok ? "PASS" : "FAIL"}};
  out.csv << "p,family,j,count_sl2,count_gl2,formula,level\n"
          << p << "," << family_s << "," << j << "," << r.count_sl2 << "," << r.count_gl2 << ","
          << r.formula << "," << r.level << "\n";
  return 0;
}

int cmd_invariants(Output& out, uint32_t q, const std::string& datum, const std::string& family_s,
                   uint32_t j_lo, uint32_t j_hi) {
  MPFamily f = parse_family(family_s);
  out.j = json{{"command", "invariants"}, {"q", q}, {"datum", datum}, {"family", family_s},
               {"rows", json::array()}};
  out.csv << "q,datum,family,j,dim,formula,status\n";
  for (uint32_t j = j_lo; j <= j_hi; ++j) {
    DepthZeroDatum d;
    uint64_t expect = 0;
    if (datum == "pi-plus" || datum == "pi-minus") {
      d = DepthZeroDatum{q, size4_sigma_label(q), -1, datum == "pi-plus" ? 1 : 2};
      require(f == MPFamily::K, errc::invalid_input, "Pi+/Pi- run on the K family");
      if (datum == "pi-plus")
        expect = upow(q, 2 * ((j - 1) / 2) + 1) - 1;
      else
        expect = j == 1 ? 0 : upow(q, 2 * (j / 2)) - 1;
    } else if (datum == "size2-member") {
      d = DepthZeroDatum{q, IrrepLabel::make_cusp(q, 1), 0, 1};
      require(restriction_length(d.sigma, 0) == 1, errc::invalid_input, "not a size-2 datum at this q");
      expect = (2 * upow(q, j) - 2) / 2;
    } else if (datum == "size4-member") {
      d = DepthZeroDatum{q, size4_sigma_label(q), 0, 1};
      expect = (2 * upow(q, j) - 2) / 4;
    } else {
      fail(errc::invalid_input, "datum must be pi-plus | pi-minus | size2-member | size4-member");
    }
    MackeySum s = invariant_dim(d, f, j);
    bool ok = s.total == expect;
    out.check(ok);
    out.text << "j = " << j << ": dim " << s.total << " (formula: " << expect << ") "
             << (ok ? "PASS" : "FAIL") << "\n";
    out.j["rows"].push_back(json{{"j", j}, {"dim", s.total}, {"formula", expect},
                                 {"status", ok ? "PASS" : "FAIL"}});
    out.csv << q << "," << datum << "," << family_s << "," << j << "," << s.total << "," << expect << ","
            << (ok ? "PASS" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_germ_check(Output& out, uint32_t q, uint32_t j_lo, uint32_t j_hi) {
  auto rep = germ_identity_check(q, MPFamily::I, j_lo, j_hi, GermTarget::IndB1);
  auto neg = germ_identity_check(q, MPFamily::I, j_lo, j_hi, GermTarget::DropOneMember);
  bool ok = rep.stabilized && !neg.stabilized;
  out.check(ok);
  out.text << "D(j) for ind_{B'}^{G'}1 minus the size-4 packet:";
  for (size_t i = 0; i < rep.js.size(); ++i) out.text << " " << rep.diffs[i];
  out.text << "\n";
  if (rep.stabilized)
    out.text << "stabilizes from j = " << rep.threshold << " at a0 = " << rep.constant << "\n";
  else
    out.text << "does not stabilize\n";
  out.text << "negative control (one member dropped) " << (neg.stabilized ? "STABILIZED (FAIL)" : "non-constant (PASS)")
           << "\n";
  out.j = json{{"command", "germ-check"}, {"q", q},
               {"diffs", rep.diffs},      {"stabilized", rep.stabilized},
               {"constant", rep.constant}, {"threshold", rep.threshold},
               {"negative_control_stabilized", neg.stabilized},
               {"status", ok ? "PASS" : "FAIL"}};
  return 0;
}

int cmd_whittaker(Output& out, uint32_t d, uint32_t r) {
  uint64_t e = wh::lattice_exponent(d, r);
  bool ok = e == (uint64_t(1) << r);
  bool dbl = r == 0 || wh::doubling_inclusion_check(d, r);
  out.check(ok && dbl);
  out.text << "exponent " << e << " (2^r: " << (uint64_t(1) << r) << ") " << (ok ? "PASS" : "FAIL");
  if (r > 0) out.text << "; doubling inclusion " << (dbl ? "PASS" : "FAIL");
  out.text << "\n";
  out.j = json{{"command", "whittaker"}, {"d", d}, {"r", r}, {"exponent", e},
               {"doubling", dbl},        {"status", ok && dbl ? "PASS" : "FAIL"}};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable representation theory of SL2 over finite and p-adic fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  bool fast = false;
  uint64_t seed = 1;
  app.add_option("--format", out.format, "text | json | csv")->capture_default_str();
  app.add_option("--out", out.path, "write the report to a file");
  app.add_flag("--fast", fast, "skip the brute-force oracle paths");
  app.add_option("--seed", seed, "meataxe seed")->capture_default_str();

  uint32_t q = 3, p = 3, ell = 2, char_r = 0, j = 1, j_lo = 1, j_hi = 4, d = 3, r = 2;
  std::string label, family = "K", datum = "pi-plus", json_spec;

  auto* irreps = app.add_subcommand("irreps", "classification table with restriction lengths");
  irreps->add_option("q", q)->required();
  irreps->add_option("--char", char_r, "coefficient characteristic (0 = char 0)");

  auto* restr = app.add_subcommand("restrict", "restriction length: closed form vs meataxe");
  restr->add_option("q", q)->required();
  restr->add_option("label", label)->required();
  restr->add_option("--char", char_r);

  auto* modell = app.add_subcommand("mod-ell", "reduction mod ell of a characteristic-zero label");
  modell->add_option("q", q)->required();
  modell->add_option("label", label)->required();
  modell->add_option("ell", ell)->required();

  auto* packet = app.add_subcommand("packet", "packet report from a JSON descriptor");
  packet->add_option("descriptor", json_spec, "JSON GL2 representation descriptor")->required();

  auto* xsig = app.add_subcommand("x-sigma", "|X_sigma| of an induced Weil representation");
  xsig->add_option("character", json_spec, "JSON character of E*")->required();

  auto* scml = app.add_subcommand("sc-mod-ell", "mod-ell length of a supercuspidal of SL2(F)");
  scml->add_option("character", json_spec)->required();
  scml->add_option("ell", ell)->required();

  auto* census = app.add_subcommand("census", "Moy-Prasad double-coset census");
  census->add_option("p", p)->required();
  census->add_option("family", family, "K | Kd | I | Ihalf")->required();
  census->add_option("j", j)->required();

  auto* inv = app.add_subcommand("invariants", "Mackey-sum invariant dimensions");
  inv->add_option("q", q)->required();
  inv->add_option("datum", datum, "pi-plus | pi-minus | size2-member | size4-member")->required();
  inv->add_option("family", family)->required();
  inv->add_option("j_lo", j_lo)->required();
  inv->add_option("j_hi", j_hi)->required();

  auto* germ = app.add_subcommand("germ-check", "germ identity stabilization");
  germ->add_option("q", q)->required();
  germ->add_option("j_lo", j_lo)->required();
  germ->add_option("j_hi", j_hi)->required();

  auto* whit = app.add_subcommand("whittaker", "germ-lattice exponent of I_0/I_r");
  whit->add_option("d", d)->required();
  whit->add_option("r", r)->required();

  auto* schema = app.add_subcommand("schema", "print the JSON input schemas");

  bool ext_ram = false, ext_nonres = false;
  uint32_t ext_level = 4;
  auto* extinfo = app.add_subcommand("ext-info", "unit-group basis of a finite-level quadratic extension");
  extinfo->add_option("p", p)->required();
  extinfo->add_flag("--ramified", ext_ram);
  extinfo->add_flag("--nonres", ext_nonres);
  extinfo->add_option("--level", ext_level);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (irreps->parsed()) cmd_irreps(out, q, char_r, fast, seed);
    else if (restr->parsed()) cmd_restrict(out, q, label, char_r, fast, seed);
    else if (modell->parsed()) cmd_mod_ell(out, q, label, ell, fast, seed);
    else if (packet->parsed()) cmd_packet(out, json_spec);
    else if (xsig->parsed()) cmd_x_sigma(out, json_spec);
    else if (scml->parsed()) cmd_sc_mod_ell(out, json_spec, ell);
    else if (census->parsed()) cmd_census(out, p, family, j, fast);
    else if (inv->parsed()) cmd_invariants(out, q, datum, family, j_lo, j_hi);
    else if (germ->parsed()) cmd_germ_check(out, q, j_lo, j_hi);
    else if (whit->parsed()) cmd_whittaker(out, d, r);
    else if (extinfo->parsed()) {
      QuadExtPtr E = ext_ram ? QuadExt::ramified(p, ext_nonres, ext_level) : QuadExt::unramified(p, ext_level);
      const auto& basis = E->unit_basis();
      out.text << E->describe() << " at level " << ext_level << ": |units| = " << E->units().size()
               << ", basis orders:";
      json orders = json::array();
      for (uint32_t o : basis.orders) {
        out.text << " " << o;
        orders.push_back(o);
      }
      out.text << "\n(a character needs one value k/m per generator, with m dividing its order)\n";
      out.j = json{{"command", "ext-info"}, {"ext", E->describe()}, {"units", E->units().size()},
                   {"basis_orders", orders}};
    }
    else if (schema->parsed()) {
      json s{{"character", character_schema_hint()},
             {"descriptor",
              json{{"variant", "depth_zero_sc"}, {"q", 3}, {"char_r", 0}, {"sigma", "Cusp(2)"}}}};
      out.j = s;
      out.text << s.dump(2) << "\n";
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == errc::resource_limit ? 3 : (e.kind == errc::internal_error ? 1 : 2);
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.finish();
}
