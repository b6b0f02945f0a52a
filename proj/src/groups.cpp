#include "sl2p/groups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sl2p {

GroupPtr GroupSpec::make(Ring ring, Kind kind, uint64_t cap) {
  require(ring.size() <= (1u << 16), errc::resource_limit, "ring too large for group enumeration");
  return GroupPtr(new GroupSpec(std::move(ring), kind, cap));
}

uint64_t GroupSpec::order() const {
  const Ring& R = ring_;
  if (R.kind() == Ring::Kind::IntMod) {
    // |SL2(Z/p^n)| = p^(3n-2)(p^2-1);  |GL2(Z/p^n)| = p^(4(n-1)) |GL2(F_p)|
    uint64_t p = R.p(), n = R.n();
    auto ppow = [&](uint64_t e) {
      uint64_t r = 1;
      while (e--) r *= p;
      return r;
    };
    if (kind_ == Kind::SL2) return ppow(3 * n - 2) * (p * p - 1);
    return ppow(4 * (n - 1)) * (p * p - 1) * (p * p - p);
  }
  uint64_t q = R.size();
  if (kind_ == Kind::SL2) return q * (q * q - 1);
  return (q * q - 1) * (q * q - q);
}

GElt GroupSpec::mul(const GElt& x, const GElt& y) const {
  const Ring& R = ring_;
  return {R.add(R.mul(x[0], y[0]), R.mul(x[1], y[2])), R.add(R.mul(x[0], y[1]), R.mul(x[1], y[3])),
          R.add(R.mul(x[2], y[0]), R.mul(x[3], y[2])), R.add(R.mul(x[2], y[1]), R.mul(x[3], y[3]))};
}

uint32_t GroupSpec::det(const GElt& x) const {
  return ring_.sub(ring_.mul(x[0], x[3]), ring_.mul(x[1], x[2]));
}

GElt GroupSpec::inverse(const GElt& x) const {
  uint32_t di = ring_.inv(det(x));
  return {ring_.mul(di, x[3]), ring_.mul(di, ring_.neg(x[1])), ring_.mul(di, ring_.neg(x[2])),
          ring_.mul(di, x[0])};
}

bool GroupSpec::contains(const GElt& x) const {
  uint32_t d = det(x);
  return kind_ == Kind::SL2 ? d == ring_.one() : ring_.is_unit(d);
}

uint64_t GroupSpec::key(const GElt& x) const {
  uint64_t S = ring_.size();
  return ((uint64_t(x[0]) * S + x[1]) * S + x[2]) * S + x[3];
}

GElt GroupSpec::unkey(uint64_t k) const {
  uint64_t S = ring_.size();
  GElt x;
  x[3] = uint32_t(k % S);
  k /= S;
  x[2] = uint32_t(k % S);
  k /= S;
  x[1] = uint32_t(k % S);
  x[0] = uint32_t(k / S);
  return x;
}

namespace {

// elements with leading entry a, appended to out
void enumerate_slice(const GroupSpec& g, uint32_t a, std::vector<uint64_t>& out) {
  const Ring& R = g.ring();
  const uint32_t S = R.size();
  if (g.kind() == GroupSpec::Kind::SL2) {
    if (R.is_unit(a)) {
      uint32_t ai = R.inv(a);
      for (uint32_t b = 0; b < S; ++b)
        for (uint32_t c = 0; c < S; ++c) {
          uint32_t d = R.mul(ai, R.add(R.one(), R.mul(b, c)));
          out.push_back(g.key({a, b, c, d}));
        }
    } else {
      // det = ad - bc = 1 forces bc to be a unit when a is not; so b is a unit
      for (uint32_t b = 0; b < S; ++b) {
        if (!R.is_unit(b)) continue;
        uint32_t bi = R.inv(b);
        for (uint32_t d = 0; d < S; ++d) {
          uint32_t c = R.mul(bi, R.sub(R.mul(a, d), R.one()));
          out.push_back(g.key({a, b, c, d}));
        }
      }
    }
  } else {
    for (uint32_t b = 0; b < S; ++b)
      for (uint32_t c = 0; c < S; ++c)
        for (uint32_t d = 0; d < S; ++d)
          if (R.is_unit(R.sub(R.mul(a, d), R.mul(b, c)))) out.push_back(g.key({a, b, c, d}));
  }
}

}  // namespace

std::vector<uint64_t> GroupSpec::enumerate_serial_reference() const {
  require(order() <= cap_, errc::resource_limit,
          "group order " + std::to_string(order()) + " exceeds enumeration cap");
  std::vector<uint64_t> out;
  out.reserve(order());
  for (uint32_t a = 0; a < ring_.size(); ++a) enumerate_slice(*this, a, out);
  std::sort(out.begin(), out.end());
  require(out.size() == order(), errc::internal_error, "enumeration does not match closed-form order");
  return out;
}

const std::vector<uint64_t>& GroupSpec::enumerate() const {
  std::call_once(enum_once_, [&] {
    require(order() <= cap_, errc::resource_limit,
            "group order " + std::to_string(order()) + " exceeds enumeration cap");
    const uint32_t S = ring_.size();
    std::vector<std::vector<uint64_t>> slices(S);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (uint32_t a = 0; a < S; ++a) enumerate_slice(*this, a, slices[a]);
    std::vector<uint64_t> out;
    out.reserve(order());
    for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    require(out.size() == order(), errc::internal_error, "enumeration does not match closed-form order");
    elems_ = std::move(out);
  });
  require(!elems_.empty(), errc::resource_limit, "enumeration previously failed");
  return elems_;
}

size_t GroupSpec::index_of(const GElt& x) const {
  const auto& v = enumerate();
  uint64_t k = key(x);
  auto it = std::lower_bound(v.begin(), v.end(), k);
  require(it != v.end() && *it == k, errc::invalid_input, "element not in group");
  return size_t(it - v.begin());
}

std::vector<GElt> GroupSpec::generators() const {
  const Ring& R = ring_;
  std::vector<GElt> g;
  g.push_back({R.one(), R.one(), 0, R.one()});  // E12(1)
  g.push_back({R.one(), 0, R.one(), R.one()});  // E21(1)
  if (R.kind() == Ring::Kind::ExtField && R.field()->degree() > 1) {
    // additive generators for the extension field entries
    for (uint32_t i = 1; i < R.field()->degree(); ++i) {
      uint32_t b = 1;
      for (uint32_t j = 0; j < i; ++j) b *= R.p();
      g.push_back({R.one(), b, 0, R.one()});
      g.push_back({R.one(), 0, b, R.one()});
    }
  }
  if (kind_ == Kind::GL2)
    for (uint32_t u : R.unit_group_generators()) g.push_back({u, 0, 0, R.one()});
  else if (kind_ == Kind::SL2)
    for (uint32_t u : R.unit_group_generators()) g.push_back({u, 0, 0, R.inv(u)});
  return g;
}

std::vector<GroupSpec::ConjClass> GroupSpec::conjugacy_classes() const {
  const auto& v = enumerate();
  auto gens = generators();
  std::vector<GElt> gi;
  for (auto& x : gens) gi.push_back(inverse(x));
  std::vector<bool> seen(v.size(), false);
  std::vector<ConjClass> classes;
  std::deque<size_t> frontier;
  for (size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    GElt rep = unkey(v[i]);
    uint64_t size = 0;
    seen[i] = true;
    frontier.clear();
    frontier.push_back(i);
    while (!frontier.empty()) {
      size_t cur = frontier.front();
      frontier.pop_front();
      ++size;
      GElt x = unkey(v[cur]);
      for (size_t t = 0; t < gens.size(); ++t) {
        GElt y = mul(gens[t], mul(x, gi[t]));
        size_t j = index_of(y);
        if (!seen[j]) {
          seen[j] = true;
          frontier.push_back(j);
        }
      }
    }
    classes.push_back({rep, size});
  }
  return classes;
}

SubgroupHandle::SubgroupHandle(GroupPtr g, Name name, uint32_t level)
    : group_(std::move(g)), name_(name), level_(level) {
  const Ring& R = group_->ring();
  if (name_ == Name::CongruenceKernel || name_ == Name::IwahoriImage || name_ == Name::ProPIwahoriImage)
    require(R.kind() == Ring::Kind::IntMod, errc::invalid_input, "congruence subgroups need a Z/p^n ring");
  if (name_ == Name::SL2) require(group_->kind() == GroupSpec::Kind::GL2, errc::invalid_input, "SL2 handle needs GL2 parent");
  build_generators();
}

std::string SubgroupHandle::describe() const {
  switch (name_) {
    case Name::Trivial: return "1";
    case Name::B: return "B";
    case Name::Bminus: return "B-";
    case Name::U: return "U";
    case Name::Uminus: return "U-";
    case Name::T: return "T";
    case Name::Z: return "Z";
    case Name::SL2: return "SL2";
    case Name::BorelSL2: return "B'";
    case Name::CenterSL2: return "Z'";
    case Name::CongruenceKernel: return "K(" + std::to_string(level_) + ")";
    case Name::IwahoriImage: return "I";
    case Name::ProPIwahoriImage: return "I(1/2)";
  }
  return "?";
}

bool SubgroupHandle::contains(const GElt& x) const {
  const Ring& R = group_->ring();
  if (!group_->contains(x)) return false;
  auto pm = [&](uint32_t m) {  // p^m within the ring
    uint32_t r = 1;
    for (uint32_t i = 0; i < m; ++i) r *= R.p();
    return r;
  };
  switch (name_) {
    case Name::Trivial:
      return x == group_->id();
    case Name::B:
    case Name::BorelSL2:
      return x[2] == 0;
    case Name::Bminus:
      return x[1] == 0;
    case Name::U:
      return x[2] == 0 && x[0] == R.one() && x[3] == R.one();
    case Name::Uminus:
      return x[1] == 0 && x[0] == R.one() && x[3] == R.one();
    case Name::T:
      return x[1] == 0 && x[2] == 0;
    case Name::Z:
      return x[1] == 0 && x[2] == 0 && x[0] == x[3];
    case Name::CenterSL2:
      return x[1] == 0 && x[2] == 0 && x[0] == x[3] && R.mul(x[0], x[0]) == R.one();
    case Name::SL2:
      return group_->det(x) == R.one();
    case Name::CongruenceKernel: {
      uint32_t m = pm(level_);
      return x[0] % m == 1 % m && x[3] % m == 1 % m && x[1] % m == 0 && x[2] % m == 0;
    }
    case Name::IwahoriImage:
      return x[2] % R.p() == 0;
    case Name::ProPIwahoriImage:
      return x[2] % R.p() == 0 && x[0] % R.p() == 1 && x[3] % R.p() == 1;
  }
  return false;
}

void SubgroupHandle::build_generators() {
  const Ring& R = group_->ring();
  const bool sl2 = group_->kind() == GroupSpec::Kind::SL2 || name_ == Name::BorelSL2;
  auto add_e12 = [&](uint32_t scale) {
    gens_.push_back({R.one(), scale, 0, R.one()});
    if (R.kind() == Ring::Kind::ExtField)
      for (uint32_t i = 1; i < R.field()->degree(); ++i) {
        uint32_t b = scale;
        for (uint32_t j = 0; j < i; ++j) b *= R.p();
        gens_.push_back({R.one(), b, 0, R.one()});
      }
  };
  auto add_e21 = [&](uint32_t scale) {
    gens_.push_back({R.one(), 0, scale, R.one()});
    if (R.kind() == Ring::Kind::ExtField)
      for (uint32_t i = 1; i < R.field()->degree(); ++i) {
        uint32_t b = scale;
        for (uint32_t j = 0; j < i; ++j) b *= R.p();
        gens_.push_back({R.one(), 0, b, R.one()});
      }
  };
  auto add_torus = [&](bool det_one) {
    for (uint32_t u : R.unit_group_generators()) {
      if (det_one)
        gens_.push_back({u, 0, 0, R.inv(u)});
      else {
        gens_.push_back({u, 0, 0, R.one()});
        gens_.push_back({R.one(), 0, 0, u});
      }
    }
  };
  auto units_one_mod = [&](uint32_t m) {
    // generators of 1 + p^m Z/p^n inside (Z/p^n)*
    std::vector<uint32_t> out;
    uint32_t pm = 1;
    for (uint32_t i = 0; i < m; ++i) pm *= R.p();
    if (m == 0) return R.unit_group_generators();
    if (pm >= R.size()) return out;
    if (R.p() == 2 && m == 1) return R.unit_group_generators();
    out.push_back((1 + pm) % R.size());
    return out;
  };
  switch (name_) {
    case Name::Trivial:
      break;
    case Name::B:
      add_e12(R.one());
      add_torus(sl2);
      break;
    case Name::BorelSL2:
      add_e12(R.one());
      add_torus(true);
      break;
    case Name::Bminus:
      add_e21(R.one());
      add_torus(sl2);
      break;
    case Name::U:
      add_e12(R.one());
      break;
    case Name::Uminus:
      add_e21(R.one());
      break;
    case Name::T:
      add_torus(sl2);
      break;
    case Name::Z:
      for (uint32_t u : R.unit_group_generators()) gens_.push_back({u, 0, 0, u});
      if (sl2) {
        gens_.clear();
        if (R.one() != R.neg(R.one())) gens_.push_back({R.neg(R.one()), 0, 0, R.neg(R.one())});
      }
      break;
    case Name::CenterSL2:
      if (R.one() != R.neg(R.one())) gens_.push_back({R.neg(R.one()), 0, 0, R.neg(R.one())});
      break;
    case Name::SL2: {
      auto sub = GroupSpec::make(R, GroupSpec::Kind::SL2);
      for (auto& g : sub->generators()) gens_.push_back(g);
      break;
    }
    case Name::CongruenceKernel: {
      uint32_t pm = 1;
      for (uint32_t i = 0; i < level_; ++i) pm *= R.p();
      if (pm < R.size()) {
        add_e12(pm % R.size());
        add_e21(pm % R.size());
        for (uint32_t u : units_one_mod(level_)) {
          if (group_->kind() == GroupSpec::Kind::SL2)
            gens_.push_back({u, 0, 0, R.inv(u)});
          else {
            gens_.push_back({u, 0, 0, R.one()});
            gens_.push_back({R.one(), 0, 0, u});
          }
        }
      }
      break;
    }
    case Name::IwahoriImage:
      add_e12(R.one());
      add_e21(R.p() % R.size());
      add_torus(group_->kind() == GroupSpec::Kind::SL2);
      break;
    case Name::ProPIwahoriImage:
      add_e12(R.one());
      add_e21(R.p() % R.size());
      for (uint32_t u : units_one_mod(1)) {
        if (group_->kind() == GroupSpec::Kind::SL2)
          gens_.push_back({u, 0, 0, R.inv(u)});
        else {
          gens_.push_back({u, 0, 0, R.one()});
          gens_.push_back({R.one(), 0, 0, u});
        }
      }
      break;
  }
  for (auto& g : gens_) require(contains(g), errc::internal_error, "subgroup generator fails its own predicate");
}

std::vector<GElt> SubgroupHandle::elements() const {
  std::vector<GElt> out;
  std::unordered_set<uint64_t> seen;
  std::deque<GElt> frontier;
  auto push = [&](const GElt& x) {
    uint64_t k = group_->key(x);
    if (!seen.insert(k).second) return;
    out.push_back(x);
    frontier.push_back(x);
  };
  push(group_->id());
  while (!frontier.empty()) {
    GElt x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens_) push(group_->mul(x, g));
    require(out.size() <= GroupSpec::kDefaultCap, errc::resource_limit, "subgroup closure exceeds cap");
  }
  std::sort(out.begin(), out.end(), [&](const GElt& a, const GElt& b) { return group_->key(a) < group_->key(b); });
  return out;
}

bool SubgroupHandle::verify_consistent() const {
  auto els = elements();
  for (const auto& x : els)
    if (!contains(x)) return false;
  uint64_t count = 0;
  for (uint64_t k : group_->enumerate())
    if (contains(group_->unkey(k))) ++count;
  return count == els.size();
}

std::vector<GroupSpec::DoubleCoset> double_cosets(const SubgroupHandle& H, const GroupPtr& G,
                                                  const SubgroupHandle& K) {
  const auto& v = G->enumerate();
  std::vector<bool> seen(v.size(), false);
  std::vector<GroupSpec::DoubleCoset> out;
  std::deque<size_t> frontier;
  const auto& hg = H.generators();
  const auto& kg = K.generators();
  for (size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    GroupSpec::DoubleCoset dc;
    dc.rep = G->unkey(v[i]);
    dc.size = 0;
    seen[i] = true;
    frontier.clear();
    frontier.push_back(i);
    while (!frontier.empty()) {
      size_t cur = frontier.front();
      frontier.pop_front();
      ++dc.size;
      GElt x = G->unkey(v[cur]);
      auto visit = [&](const GElt& y) {
        size_t j = G->index_of(y);
        if (!seen[j]) {
          seen[j] = true;
          frontier.push_back(j);
        }
      };
      for (const auto& h : hg) visit(G->mul(h, x));
      for (const auto& k : kg) visit(G->mul(x, k));
    }
    out.push_back(dc);
  }
  return out;
}

}  // namespace sl2p
