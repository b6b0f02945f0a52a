#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sl2p/ring.hpp"

namespace sl2p {

/// 2x2 matrix over a Ring, row-major (a,b,c,d).
using GElt = std::array<uint32_t, 4>;

class GroupSpec;
using GroupPtr = std::shared_ptr<const GroupSpec>;

/// GL2 or SL2 over one of the three ring kinds.  Enumeration is in
/// lexicographic order of (a,b,c,d) canonical lifts; all derived data
/// (conjugacy classes, cosets) use that order for canonical representatives.
class GroupSpec : public std::enable_shared_from_this<GroupSpec> {
 public:
  enum class Kind { GL2, SL2 };
  static constexpr uint64_t kDefaultCap = 5'000'000;

  static GroupPtr make(Ring ring, Kind kind, uint64_t cap = kDefaultCap);

  const Ring& ring() const { return ring_; }
  Kind kind() const { return kind_; }
  uint64_t order() const;  // closed-form order

  GElt mul(const GElt& x, const GElt& y) const;
  GElt inverse(const GElt& x) const;
  uint32_t det(const GElt& x) const;
  GElt id() const { return {ring_.one(), 0, 0, ring_.one()}; }
  bool contains(const GElt& x) const;

  uint64_t key(const GElt& x) const;
  GElt unkey(uint64_t k) const;

  /// Duplicate-free, lexicographically sorted element list.  The fill is
  /// OpenMP-partitioned over the leading entry; results are identical to
  /// the serial reference for any thread count.
  const std::vector<uint64_t>& enumerate() const;
  /// Serial reference enumeration, kept for testing and benchmarks.
  std::vector<uint64_t> enumerate_serial_reference() const;
  size_t index_of(const GElt& x) const;

  /// Standard generating set (elementaries, plus diagonal units for GL2).
  std::vector<GElt> generators() const;

  struct ConjClass {
    GElt rep;
    uint64_t size;
  };
  std::vector<ConjClass> conjugacy_classes() const;

  struct DoubleCoset {
    GElt rep;  // canonical-minimal element of the coset
    uint64_t size;
  };

 private:
  Ring ring_;
  Kind kind_;
  uint64_t cap_;
  mutable std::once_flag enum_once_;
  mutable std::vector<uint64_t> elems_;
  GroupSpec(Ring r, Kind k, uint64_t cap) : ring_(std::move(r)), kind_(k), cap_(cap) {}
};

/// Distinguished subgroups, as named membership predicates plus explicit
/// generator lists.  The two views are checked against each other on demand.
class SubgroupHandle {
 public:
  enum class Name {
    Trivial,
    B,        // upper triangular
    Bminus,   // lower triangular
    U,        // upper unipotent
    Uminus,   // lower unipotent
    T,        // diagonal
    Z,        // center
    SL2,      // inside a GL2 spec
    BorelSL2,
    CenterSL2,
    CongruenceKernel,  // level m: x == 1 mod p^m   (IntMod rings)
    IwahoriImage,      // lower-left == 0 mod p     (IntMod rings)
    ProPIwahoriImage,  // diag == 1 mod p, lower-left == 0 mod p
  };

  SubgroupHandle(GroupPtr g, Name name, uint32_t level = 0);

  const GroupPtr& group() const { return group_; }
  Name name() const { return name_; }
  std::string describe() const;

  bool contains(const GElt& x) const;
  const std::vector<GElt>& generators() const { return gens_; }
  /// All elements, by closure of the generators (cap-guarded).
  std::vector<GElt> elements() const;
  /// Checks generator closure == predicate-filtered parent.  Expensive;
  /// intended for tests and small groups.
  bool verify_consistent() const;

 private:
  GroupPtr group_;
  Name name_;
  uint32_t level_;
  std::vector<GElt> gens_;
  void build_generators();
};

std::vector<GroupSpec::DoubleCoset> double_cosets(const SubgroupHandle& H, const GroupPtr& G,
                                                  const SubgroupHandle& K);

}  // namespace sl2p
