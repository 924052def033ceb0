#include "gammapath/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gammapath/error.hpp"

namespace gammapath {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * static_cast<__int128>(b) % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Combines prime-power cyclic factors into invariant factors d1 | ... | dr.
std::vector<std::int64_t> combine_prime_powers(
    std::map<std::int64_t, std::vector<int>> exponents_by_prime) {
  std::size_t rank = 0;
  for (auto& [p, exps] : exponents_by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  std::vector<std::int64_t> factors(rank, 1);
  // factors[0] is the largest.
  for (const auto& [p, exps] : exponents_by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) factors[i] *= ipow(p, exps[i]);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> result;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.emplace_back(p, e);
  }
  if (n > 1) result.emplace_back(n, 1);
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

Group Group::cyclic_product(std::vector<std::int64_t> orders) {
  std::map<std::int64_t, std::vector<int>> exps;
  for (std::int64_t m : orders) {
    if (m < 2) throw InvalidArgument("cyclic factor orders must be >= 2");
    for (auto [p, e] : factorize(m)) exps[p].push_back(e);
  }
  std::size_t size = 1;
  for (std::int64_t m : orders) {
    size *= static_cast<std::size_t>(m);
    if (size > (std::size_t{1} << 40)) throw InvalidArgument("cyclic product too large");
  }
  Group g;
  g.kind_ = GroupKind::kCyclicProduct;
  g.orders_ = std::move(orders);
  g.invariant_factors_ = combine_prime_powers(std::move(exps));
  g.abelian_ = true;
  return g;
}

Group Group::cayley(CayleyTable table, std::size_t identity) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("Cayley table must be nonempty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("Cayley table must be square");
    for (std::size_t x : row) {
      if (x >= n) throw InvalidArgument("Cayley table entry out of range");
    }
  }
  if (identity >= n) throw InvalidArgument("identity index out of range");
  for (std::size_t x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x) {
      throw InvalidArgument("Cayley table: identity axiom fails");
    }
  }
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] == n) throw InvalidArgument("Cayley table: inverse axiom fails");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidArgument("Cayley table: associativity fails");
        }
      }
    }
  }
  bool abelian = true;
  for (std::size_t a = 0; a < n && abelian; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (table[a][b] != table[b][a]) {
        abelian = false;
        break;
      }
    }
  }

  Group g;
  g.kind_ = GroupKind::kCayleyTable;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  g.abelian_ = abelian;
  if (abelian && n > 1) {
    // |Γ[p^i]| determines the number of cyclic p-factors of order >= p^i.
    std::map<std::int64_t, std::vector<int>> exps;
    for (auto [p, e] : factorize(static_cast<std::int64_t>(n))) {
      std::vector<int> log_sizes{0};
      for (int i = 1; log_sizes.back() < e; ++i) {
        std::int64_t pi = ipow(p, i);
        std::size_t count = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (g.is_zero(g.multiple(pi, Elem::from_index(x)))) ++count;
        }
        int lg = 0;
        for (std::size_t c = count; c > 1; c /= static_cast<std::size_t>(p)) ++lg;
        log_sizes.push_back(lg);
      }
      std::vector<int> at_least;  // at_least[i-1] = #factors of order >= p^i
      for (std::size_t i = 1; i < log_sizes.size(); ++i) {
        at_least.push_back(log_sizes[i] - log_sizes[i - 1]);
      }
      for (std::size_t i = 0; i < at_least.size(); ++i) {
        int exact = at_least[i] - (i + 1 < at_least.size() ? at_least[i + 1] : 0);
        for (int j = 0; j < exact; ++j) exps[p].push_back(static_cast<int>(i + 1));
      }
    }
    g.invariant_factors_ = combine_prime_powers(std::move(exps));
  }
  return g;
}

Group Group::integers() {
  Group g;
  g.kind_ = GroupKind::kIntegers;
  g.abelian_ = true;
  return g;
}

std::size_t Group::order() const {
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      std::size_t n = 1;
      for (std::int64_t m : orders_) n *= static_cast<std::size_t>(m);
      return n;
    }
    case GroupKind::kCayleyTable:
      return table_.size();
    case GroupKind::kIntegers:
      break;
  }
  throw InvalidArgument("the integers have infinite order");
}

bool Group::contains(const Elem& g) const noexcept {
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      if (!g.is_coords() || g.coords().size() != orders_.size()) return false;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (g.coords()[i] < 0 || g.coords()[i] >= orders_[i]) return false;
      }
      return true;
    }
    case GroupKind::kCayleyTable:
      return g.is_index() && g.index() < table_.size();
    case GroupKind::kIntegers:
      return g.is_integer();
  }
  return false;
}

void Group::require(const Elem& g) const {
  if (!contains(g)) {
    throw InvalidArgument("element does not belong to group " + describe());
  }
}

Elem Group::zero() const {
  switch (kind_) {
    case GroupKind::kCyclicProduct:
      return Elem::from_coords(Coords(orders_.size(), 0));
    case GroupKind::kCayleyTable:
      return Elem::from_index(identity_);
    case GroupKind::kIntegers:
      break;
  }
  return Elem::from_integer(0);
}

bool Group::is_zero(const Elem& g) const { return g == zero(); }

Elem Group::add(const Elem& g, const Elem& h) const {
  require(g);
  require(h);
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      Coords c(orders_.size());
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = mod(g.coords()[i] + h.coords()[i], orders_[i]);
      }
      return Elem::from_coords(std::move(c));
    }
    case GroupKind::kCayleyTable:
      return Elem::from_index(table_[g.index()][h.index()]);
    case GroupKind::kIntegers:
      break;
  }
  return Elem::from_integer(g.integer() + h.integer());
}

Elem Group::neg(const Elem& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      Coords c(orders_.size());
      for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = mod(-g.coords()[i], orders_[i]);
      return Elem::from_coords(std::move(c));
    }
    case GroupKind::kCayleyTable:
      return Elem::from_index(inverse_[g.index()]);
    case GroupKind::kIntegers:
      break;
  }
  return Elem::from_integer(-g.integer());
}

Elem Group::multiple(std::int64_t n, const Elem& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      Coords c(orders_.size());
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = mul_mod(mod(n, orders_[i]), g.coords()[i], orders_[i]);
      }
      return Elem::from_coords(std::move(c));
    }
    case GroupKind::kCayleyTable: {
      Elem base = n < 0 ? neg(g) : g;
      std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
      // Powers of a single element commute, so square-and-multiply is exact.
      Elem acc = zero();
      while (k > 0) {
        if (k & 1U) acc = add(acc, base);
        base = add(base, base);
        k >>= 1U;
      }
      return acc;
    }
    case GroupKind::kIntegers:
      break;
  }
  return Elem::from_integer(BigInt(n) * g.integer());
}

std::vector<Elem> Group::elements() const {
  const std::size_t n = order();
  std::vector<Elem> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) out.push_back(element_at(r));
  return out;
}

std::size_t Group::rank(const Elem& g) const {
  require(g);
  if (kind_ == GroupKind::kCayleyTable) return g.index();
  if (kind_ == GroupKind::kIntegers) throw InvalidArgument("the integers have no finite ranking");
  std::size_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r = r * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(g.coords()[i]);
  }
  return r;
}

Elem Group::element_at(std::size_t r) const {
  if (r >= order()) throw InvalidArgument("element rank out of range");
  if (kind_ == GroupKind::kCayleyTable) return Elem::from_index(r);
  Coords c(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c[i] = static_cast<std::int64_t>(r % static_cast<std::size_t>(orders_[i]));
    r /= static_cast<std::size_t>(orders_[i]);
  }
  return Elem::from_coords(std::move(c));
}

std::optional<std::int64_t> Group::element_order(const Elem& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::kCyclicProduct: {
      std::int64_t l = 1;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t oi = orders_[i] / std::gcd(g.coords()[i], orders_[i]);
        l = std::lcm(l, oi);
      }
      return l;
    }
    case GroupKind::kCayleyTable: {
      std::int64_t k = 1;
      std::size_t x = g.index();
      while (x != identity_) {
        x = table_[x][g.index()];
        ++k;
      }
      return k;
    }
    case GroupKind::kIntegers:
      break;
  }
  if (g.integer() == 0) return 1;
  return std::nullopt;
}

std::vector<Elem> Group::cyclic_subgroup(const Elem& g) const {
  if (!is_finite()) throw InvalidArgument("cyclic subgroups of Z are infinite");
  require(g);
  std::vector<Elem> out{zero()};
  Elem x = g;
  while (!is_zero(x)) {
    out.push_back(x);
    x = add(x, g);
  }
  return out;
}

bool Group::subgroup_contains(const Elem& g, const Elem& ell) const {
  require(ell);
  const auto sub = cyclic_subgroup(g);
  return std::find(sub.begin(), sub.end(), ell) != sub.end();
}

std::vector<Elem> Group::elements_of_order_at_most_2() const {
  if (!is_finite()) return {zero()};
  std::vector<Elem> out;
  for (const Elem& x : elements()) {
    if (is_zero(add(x, x))) out.push_back(x);
  }
  return out;
}

std::optional<Elem> Group::find_halving(const Elem& ell) const {
  require(ell);
  if (!is_finite()) {
    if (ell.integer() % 2 != 0) return std::nullopt;
    return Elem::from_integer(ell.integer() / 2);
  }
  for (const Elem& x : elements()) {
    if (add(x, x) == ell) return x;
  }
  return std::nullopt;
}

std::set<Elem> Group::sumset(const std::set<Elem>& x, const std::set<Elem>& y) const {
  std::set<Elem> out;
  for (const Elem& a : x) {
    for (const Elem& b : y) out.insert(add(a, b));
  }
  if (is_finite() && !x.empty() && !y.empty()) {
    const std::size_t p = order();
    if (is_prime(static_cast<std::int64_t>(p)) &&
        out.size() < std::min(x.size() + y.size() - 1, p)) {
      throw InternalError("sumset violates the Cauchy-Davenport bound");
    }
  }
  return out;
}

bool Group::is_cyclic_of_order(std::int64_t m) const {
  if (!is_finite() || !abelian_) return false;
  return invariant_factors_.size() == 1 && invariant_factors_[0] == m;
}

bool Group::is_elementary_abelian_2() const {
  if (!is_finite() || !abelian_) return false;
  return std::all_of(invariant_factors_.begin(), invariant_factors_.end(),
                     [](std::int64_t d) { return d == 2; });
}

bool Group::is_cyclic() const {
  if (!is_finite() || !abelian_) return false;
  return invariant_factors_.size() <= 1;
}

std::string Group::format(const Elem& g) const {
  require(g);
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::kCyclicProduct:
      if (orders_.size() == 1) {
        os << g.coords()[0];
      } else {
        os << '(';
        for (std::size_t i = 0; i < g.coords().size(); ++i) os << (i ? "," : "") << g.coords()[i];
        os << ')';
      }
      break;
    case GroupKind::kCayleyTable:
      os << '#' << g.index();
      break;
    case GroupKind::kIntegers:
      os << g.integer();
      break;
  }
  return os.str();
}

std::string Group::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::kCyclicProduct:
      for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? " x " : "") << "Z/" << orders_[i];
      break;
    case GroupKind::kCayleyTable:
      os << "Cayley(" << table_.size() << (abelian_ ? ", abelian)" : ", nonabelian)");
      break;
    case GroupKind::kIntegers:
      os << "Z";
      break;
  }
  return os.str();
}

bool operator==(const Group& a, const Group& b) {
  return a.kind_ == b.kind_ && a.orders_ == b.orders_ && a.table_ == b.table_ &&
         a.identity_ == b.identity_;
}

Group symmetric_group(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("symmetric_group supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  CayleyTable table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      table[a][b] = index.at(c);
    }
  }
  return Group::cayley(std::move(table), 0);
}

}  // namespace gammapath
