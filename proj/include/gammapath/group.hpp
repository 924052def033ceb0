#ifndef GAMMAPATH_GROUP_HPP_
#define GAMMAPATH_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gammapath {

using BigInt = boost::multiprecision::cpp_int;
using Coords = boost::container::small_vector<std::int64_t, 4>;

// A group element. Its meaning is relative to the Group that produced it:
// residue coordinates for cyclic products, a row index for Cayley tables,
// an arbitrary-precision integer for Z.
class Elem {
 public:
  Elem() = default;

  static Elem from_coords(Coords coords) { return Elem(Value(std::move(coords))); }
  static Elem from_index(std::size_t index) { return Elem(Value(index)); }
  static Elem from_integer(BigInt value) { return Elem(Value(std::move(value))); }

  bool is_coords() const noexcept { return value_.index() == 0; }
  bool is_index() const noexcept { return value_.index() == 1; }
  bool is_integer() const noexcept { return value_.index() == 2; }

  const Coords& coords() const { return std::get<0>(value_); }
  std::size_t index() const { return std::get<1>(value_); }
  const BigInt& integer() const { return std::get<2>(value_); }

  friend bool operator==(const Elem& a, const Elem& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  friend bool operator<(const Elem& a, const Elem& b) { return a.value_ < b.value_; }

 private:
  using Value = std::variant<Coords, std::size_t, BigInt>;
  explicit Elem(Value value) : value_(std::move(value)) {}

  Value value_;
};

enum class GroupKind { kCyclicProduct, kCayleyTable, kIntegers };

using CayleyTable = std::vector<std::vector<std::size_t>>;

// Group written additively. Values are immutable after construction.
//
// Cyclic products keep the factor orders as supplied (elements are expressed
// in those coordinates) and additionally carry the invariant-factor
// decomposition d1 | d2 | ... | dr so that isomorphism questions reduce to
// list comparison. Cayley tables may be nonabelian; the sum g + h is
// table[g][h].
class Group {
 public:
  static Group cyclic_product(std::vector<std::int64_t> orders);
  static Group cyclic(std::int64_t m) { return cyclic_product({m}); }
  static Group cayley(CayleyTable table, std::size_t identity);
  static Group integers();

  GroupKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != GroupKind::kIntegers; }
  bool is_abelian() const noexcept { return abelian_; }
  // |Γ|; throws for Z.
  std::size_t order() const;

  const std::vector<std::int64_t>& factor_orders() const noexcept { return orders_; }
  // Empty for the trivial group. Only meaningful for finite abelian groups.
  const std::vector<std::int64_t>& invariant_factors() const noexcept { return invariant_factors_; }
  const CayleyTable& table() const noexcept { return table_; }
  std::size_t identity_index() const noexcept { return identity_; }

  bool contains(const Elem& g) const noexcept;
  // Throws InvalidArgument unless g belongs to this group.
  void require(const Elem& g) const;

  Elem zero() const;
  bool is_zero(const Elem& g) const;
  Elem add(const Elem& g, const Elem& h) const;
  Elem neg(const Elem& g) const;
  Elem sub(const Elem& g, const Elem& h) const { return add(g, neg(h)); }
  // n·g, with negative n meaning |n|·(−g).
  Elem multiple(std::int64_t n, const Elem& g) const;

  // All elements in canonical order (lexicographic coordinates / table index).
  std::vector<Elem> elements() const;
  std::size_t rank(const Elem& g) const;
  Elem element_at(std::size_t rank) const;

  // nullopt means infinite order.
  std::optional<std::int64_t> element_order(const Elem& g) const;
  // <g> listed as 0, g, 2g, ...
  std::vector<Elem> cyclic_subgroup(const Elem& g) const;
  bool subgroup_contains(const Elem& g, const Elem& ell) const;
  std::vector<Elem> elements_of_order_at_most_2() const;
  // Smallest g (canonical order) with 2g = ell.
  std::optional<Elem> find_halving(const Elem& ell) const;
  std::set<Elem> sumset(const std::set<Elem>& x, const std::set<Elem>& y) const;

  // True iff this group is isomorphic to Z/m (m >= 2).
  bool is_cyclic_of_order(std::int64_t m) const;
  // True iff the group is (Z/2)^k for some k >= 0.
  bool is_elementary_abelian_2() const;
  bool is_cyclic() const;

  std::string format(const Elem& g) const;
  std::string describe() const;

  friend bool operator==(const Group& a, const Group& b);
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::kIntegers;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> invariant_factors_;
  CayleyTable table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  bool abelian_ = true;
};

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

// Cayley table of the symmetric group on n points (n <= 5), elements ordered
// lexicographically as permutations; composition is (g + h)(x) = g(h(x)).
Group symmetric_group(int n);

}  // namespace gammapath

#endif  // GAMMAPATH_GROUP_HPP_
