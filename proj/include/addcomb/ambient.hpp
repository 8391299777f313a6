#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/element.hpp"

namespace addcomb {

enum class AmbientKind { zmod, cayley, int_lattice, nat_lattice, free_monoid, product };

enum class Side { left, right };

struct AxiomReport {
  bool associative = true;
  bool cancellative = false;
  bool has_identity = false;
  std::optional<Element> identity;
  bool commutative = false;
  std::optional<std::uint64_t> finite_order;
};

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

/// A finitely described semigroup. Immutable once built; share it freely.
///
/// Cayley tables use the convention table[i][j] = i + j and are checked for
/// associativity when the ambient is constructed. Every other kind has its
/// axioms fixed analytically.
class Ambient {
 public:
  static AmbientPtr zmod(std::int64_t n);
  /// Throws NonAssociativeTable on a non-associative table.
  static AmbientPtr cayley(std::vector<std::vector<std::int64_t>> table,
                           std::vector<std::string> labels = {});
  static AmbientPtr int_lattice(std::size_t dim);
  static AmbientPtr nat_lattice(std::size_t dim);
  /// The alphabet must be prefix-free so words decode uniquely from strings.
  static AmbientPtr free_monoid(std::vector<std::string> alphabet);
  static AmbientPtr product(std::vector<AmbientPtr> factors);

  AmbientKind kind() const noexcept { return kind_; }
  const AxiomReport& axioms() const noexcept { return axioms_; }

  std::int64_t modulus() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<AmbientPtr>& factors() const noexcept { return factors_; }
  /// Row-major n*n table for cayley ambients.
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  bool is_finite() const noexcept { return axioms_.finite_order.has_value(); }
  /// Carrier size. Only valid when is_finite().
  std::size_t order() const { return static_cast<std::size_t>(axioms_.finite_order.value()); }
  bool is_monoid() const noexcept { return axioms_.has_identity; }
  /// Every element invertible.
  bool is_group() const noexcept { return group_; }

  bool contains(const Element& x) const;
  /// Throws ElementAmbientMismatch unless contains(x).
  void require(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  /// Right division solves z + y = x, left division solves y + z = x.
  std::optional<Element> divide(Side side, const Element& x, const Element& y) const;
  bool is_unit(const Element& x) const;
  std::optional<Element> invert(const Element& x) const;
  std::optional<Element> identity() const { return axioms_.identity; }

  /// True when the kind proves <x> infinite without enumeration.
  bool has_infinite_order(const Element& x) const;

  // Finite carriers are indexed 0..order()-1 in canonical element order.
  std::size_t index_of(const Element& x) const;
  Element element_at(std::size_t i) const;
  std::size_t add_index(std::size_t i, std::size_t j) const;

  /// Short human-readable name such as "Z6", "Cayley(6)", "N^2" or "Z2xZ4".
  std::string name() const;

  friend bool operator==(const Ambient& a, const Ambient& b);

 private:
  Ambient() = default;
  void build_index_table();

  AmbientKind kind_ = AmbientKind::zmod;
  std::int64_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> labels_;
  std::vector<std::string> alphabet_;
  std::vector<AmbientPtr> factors_;
  // Cayley division tables (only when cancellative); product addition table.
  std::vector<std::uint32_t> right_solve_;
  std::vector<std::uint32_t> left_solve_;
  std::vector<std::uint32_t> index_table_;
  std::vector<std::size_t> radix_;
  AxiomReport axioms_;
  bool group_ = false;
};

/// Same-ambient test used by every set operation: pointer identity or equal
/// descriptions.
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

}  // namespace addcomb
