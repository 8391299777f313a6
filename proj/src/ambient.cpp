#include "addcomb/ambient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

constexpr std::size_t kProductTableLimit = 1024;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::malformed_description, what);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("lattice coordinate overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("lattice coordinate overflow");
  return out;
}

bool all_zero(const Element::Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

AmbientPtr Ambient::zmod(std::int64_t n) {
  if (n < 1) malformed("zmod modulus must be positive, got " + std::to_string(n));
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::zmod;
  a->n_ = n;
  a->axioms_ = {true, true, true, Element(std::int64_t{0}), true,
                static_cast<std::uint64_t>(n)};
  a->group_ = true;
  return a;
}

AmbientPtr Ambient::cayley(std::vector<std::vector<std::int64_t>> table,
                           std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) malformed("cayley table must be non-empty");
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::cayley;
  a->n_ = static_cast<std::int64_t>(n);
  a->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) malformed("cayley table must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        malformed("cayley entry out of range at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      a->table_[i * n + j] = static_cast<std::uint32_t>(v);
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) malformed("cayley labels must match the table size");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    malformed("cayley labels must be distinct");
  a->labels_ = std::move(labels);

  const auto& t = a->table_;
  auto op = [&](std::size_t x, std::size_t y) -> std::size_t { return t[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(x, op(y, z))) throw NonAssociativeTable({x, y, z});

  bool cancellative = true;
  for (std::size_t x = 0; x < n && cancellative; ++x) {
    std::vector<bool> row(n), col(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (row[op(x, y)] || col[op(y, x)]) {
        cancellative = false;
        break;
      }
      row[op(x, y)] = true;
      col[op(y, x)] = true;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
    if (ok) identity = Element(static_cast<std::int64_t>(e));
  }

  bool commutative = true;
  for (std::size_t x = 0; x < n && commutative; ++x)
    for (std::size_t y = x + 1; y < n && commutative; ++y) commutative = op(x, y) == op(y, x);

  a->axioms_ = {true, cancellative, identity.has_value(), identity, commutative,
                static_cast<std::uint64_t>(n)};

  if (cancellative) {
    a->right_solve_.resize(n * n);
    a->left_solve_.resize(n * n);
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y) {
        a->right_solve_[op(z, y) * n + y] = static_cast<std::uint32_t>(z);
        a->left_solve_[op(y, z) * n + y] = static_cast<std::uint32_t>(z);
      }
  }

  bool group = identity.has_value();
  for (std::size_t x = 0; x < n && group; ++x) group = a->is_unit(Element(static_cast<std::int64_t>(x)));
  a->group_ = group;
  return a;
}

AmbientPtr Ambient::int_lattice(std::size_t dim) {
  if (dim == 0) malformed("int_lattice dimension must be positive");
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::int_lattice;
  a->dim_ = dim;
  a->axioms_ = {true, true, true, Element(Element::Vector(dim, 0)), true, std::nullopt};
  a->group_ = true;
  return a;
}

AmbientPtr Ambient::nat_lattice(std::size_t dim) {
  if (dim == 0) malformed("nat_lattice dimension must be positive");
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::nat_lattice;
  a->dim_ = dim;
  a->axioms_ = {true, true, true, Element(Element::Vector(dim, 0)), true, std::nullopt};
  return a;
}

AmbientPtr Ambient::free_monoid(std::vector<std::string> alphabet) {
  if (alphabet.empty()) malformed("free_monoid alphabet must be non-empty");
  for (const auto& s : alphabet)
    if (s.empty()) malformed("free_monoid symbols must be non-empty strings");
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = 0; j < alphabet.size(); ++j)
      if (i != j && alphabet[j].starts_with(alphabet[i]))
        malformed("free_monoid alphabet must be prefix-free ('" + alphabet[i] +
                  "' prefixes '" + alphabet[j] + "')");
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::free_monoid;
  a->alphabet_ = std::move(alphabet);
  a->axioms_ = {true, true, true, Element(Word{}), a->alphabet_.size() == 1, std::nullopt};
  return a;
}

AmbientPtr Ambient::product(std::vector<AmbientPtr> factors) {
  if (factors.empty()) malformed("product needs at least one factor");
  std::shared_ptr<Ambient> a(new Ambient());
  a->kind_ = AmbientKind::product;
  AxiomReport ax{true, true, true, std::nullopt, true, std::uint64_t{1}};
  Element::Tuple id;
  bool group = true;
  for (const auto& f : factors) {
    if (!f) malformed("null product factor");
    const auto& fa = f->axioms();
    ax.associative = ax.associative && fa.associative;
    ax.cancellative = ax.cancellative && fa.cancellative;
    ax.has_identity = ax.has_identity && fa.has_identity;
    ax.commutative = ax.commutative && fa.commutative;
    if (fa.identity) id.push_back(*fa.identity);
    if (ax.finite_order && fa.finite_order) {
      std::uint64_t prod = 0;
      if (__builtin_mul_overflow(*ax.finite_order, *fa.finite_order, &prod))
        malformed("product carrier too large");
      ax.finite_order = prod;
    } else {
      ax.finite_order.reset();
    }
    group = group && f->is_group();
  }
  if (ax.has_identity) ax.identity = Element(std::move(id));
  a->axioms_ = std::move(ax);
  a->group_ = group;
  a->factors_ = std::move(factors);
  if (a->is_finite()) a->build_index_table();
  return a;
}

void Ambient::build_index_table() {
  radix_.clear();
  for (const auto& f : factors_) radix_.push_back(f->order());
  const std::size_t n = order();
  if (n > kProductTableLimit) return;
  index_table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = element_at(i);
    for (std::size_t j = 0; j < n; ++j)
      index_table_[i * n + j] = static_cast<std::uint32_t>(index_of(add(x, element_at(j))));
  }
}

bool Ambient::contains(const Element& x) const {
  switch (kind_) {
    case AmbientKind::zmod:
    case AmbientKind::cayley:
      return x.is_scalar() && x.scalar() >= 0 && x.scalar() < n_;
    case AmbientKind::int_lattice:
      return x.is_vector() && x.vec().size() == dim_;
    case AmbientKind::nat_lattice:
      return x.is_vector() && x.vec().size() == dim_ &&
             std::all_of(x.vec().begin(), x.vec().end(), [](std::int64_t c) { return c >= 0; });
    case AmbientKind::free_monoid:
      return x.is_word() &&
             std::all_of(x.word().letters.begin(), x.word().letters.end(),
                         [&](std::uint32_t l) { return l < alphabet_.size(); });
    case AmbientKind::product:
      if (!x.is_tuple() || x.parts().size() != factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->contains(x.parts()[i])) return false;
      return true;
  }
  return false;
}

void Ambient::require(const Element& x) const {
  if (!contains(x))
    throw Error(ErrorCode::element_ambient_mismatch, "element is not valid for " + name());
}

Element Ambient::add(const Element& x, const Element& y) const {
  require(x);
  require(y);
  switch (kind_) {
    case AmbientKind::zmod: {
      auto s = x.scalar() + y.scalar();
      return Element(s >= n_ ? s - n_ : s);
    }
    case AmbientKind::cayley:
      return Element(static_cast<std::int64_t>(
          table_[static_cast<std::size_t>(x.scalar() * n_ + y.scalar())]));
    case AmbientKind::int_lattice:
    case AmbientKind::nat_lattice: {
      Element::Vector v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = checked_add(x.vec()[i], y.vec()[i]);
      return Element(std::move(v));
    }
    case AmbientKind::free_monoid: {
      Word w = x.word();
      w.letters.insert(w.letters.end(), y.word().letters.begin(), y.word().letters.end());
      return Element(std::move(w));
    }
    case AmbientKind::product: {
      Element::Tuple t;
      t.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->add(x.parts()[i], y.parts()[i]));
      return Element(std::move(t));
    }
  }
  return {};
}

std::optional<Element> Ambient::divide(Side side, const Element& x, const Element& y) const {
  require(x);
  require(y);
  switch (kind_) {
    case AmbientKind::zmod: {
      auto d = x.scalar() - y.scalar();
      return Element(d < 0 ? d + n_ : d);
    }
    case AmbientKind::cayley: {
      const auto n = static_cast<std::size_t>(n_);
      const auto xi = static_cast<std::size_t>(x.scalar());
      const auto yi = static_cast<std::size_t>(y.scalar());
      if (axioms_.cancellative) {
        const auto& solve = side == Side::right ? right_solve_ : left_solve_;
        return Element(static_cast<std::int64_t>(solve[xi * n + yi]));
      }
      std::optional<Element> found;
      for (std::size_t z = 0; z < n; ++z) {
        const auto v = side == Side::right ? table_[z * n + yi] : table_[yi * n + z];
        if (v != xi) continue;
        if (found)
          throw Error(ErrorCode::non_cancellative_ambiguity,
                      "division has more than one solution in " + name());
        found = Element(static_cast<std::int64_t>(z));
      }
      return found;
    }
    case AmbientKind::int_lattice:
    case AmbientKind::nat_lattice: {
      Element::Vector v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        v[i] = checked_sub(x.vec()[i], y.vec()[i]);
        if (kind_ == AmbientKind::nat_lattice && v[i] < 0) return std::nullopt;
      }
      return Element(std::move(v));
    }
    case AmbientKind::free_monoid: {
      const auto& xl = x.word().letters;
      const auto& yl = y.word().letters;
      if (yl.size() > xl.size()) return std::nullopt;
      const auto rest = xl.size() - yl.size();
      if (side == Side::right) {
        if (!std::equal(yl.begin(), yl.end(), xl.begin() + static_cast<std::ptrdiff_t>(rest)))
          return std::nullopt;
        return Element(Word{{xl.begin(), xl.begin() + static_cast<std::ptrdiff_t>(rest)}});
      }
      if (!std::equal(yl.begin(), yl.end(), xl.begin())) return std::nullopt;
      return Element(Word{{xl.begin() + static_cast<std::ptrdiff_t>(yl.size()), xl.end()}});
    }
    case AmbientKind::product: {
      Element::Tuple t;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto part = factors_[i]->divide(side, x.parts()[i], y.parts()[i]);
        if (!part) return std::nullopt;
        t.push_back(std::move(*part));
      }
      return Element(std::move(t));
    }
  }
  return std::nullopt;
}

bool Ambient::is_unit(const Element& x) const {
  require(x);
  switch (kind_) {
    case AmbientKind::zmod:
    case AmbientKind::int_lattice:
      return true;
    case AmbientKind::nat_lattice:
      return all_zero(x.vec());
    case AmbientKind::free_monoid:
      return x.word().empty();
    case AmbientKind::cayley:
    case AmbientKind::product:
      return invert(x).has_value();
  }
  return false;
}

std::optional<Element> Ambient::invert(const Element& x) const {
  require(x);
  switch (kind_) {
    case AmbientKind::zmod:
      return Element(x.scalar() == 0 ? 0 : n_ - x.scalar());
    case AmbientKind::int_lattice: {
      Element::Vector v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = checked_sub(0, x.vec()[i]);
      return Element(std::move(v));
    }
    case AmbientKind::nat_lattice:
    case AmbientKind::free_monoid:
      if (is_unit(x)) return x;
      return std::nullopt;
    case AmbientKind::cayley: {
      if (!axioms_.identity) return std::nullopt;
      const auto n = static_cast<std::size_t>(n_);
      const auto e = static_cast<std::size_t>(axioms_.identity->scalar());
      const auto xi = static_cast<std::size_t>(x.scalar());
      for (std::size_t w = 0; w < n; ++w)
        if (table_[xi * n + w] == e && table_[w * n + xi] == e)
          return Element(static_cast<std::int64_t>(w));
      return std::nullopt;
    }
    case AmbientKind::product: {
      Element::Tuple t;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto part = factors_[i]->invert(x.parts()[i]);
        if (!part) return std::nullopt;
        t.push_back(std::move(*part));
      }
      return Element(std::move(t));
    }
  }
  return std::nullopt;
}

bool Ambient::has_infinite_order(const Element& x) const {
  require(x);
  switch (kind_) {
    case AmbientKind::zmod:
    case AmbientKind::cayley:
      return false;
    case AmbientKind::int_lattice:
    case AmbientKind::nat_lattice:
      return !all_zero(x.vec());
    case AmbientKind::free_monoid:
      return !x.word().empty();
    case AmbientKind::product:
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i]->has_infinite_order(x.parts()[i])) return true;
      return false;
  }
  return false;
}

std::size_t Ambient::index_of(const Element& x) const {
  if (!is_finite()) throw std::logic_error("index_of on an infinite ambient");
  require(x);
  if (kind_ != AmbientKind::product) return static_cast<std::size_t>(x.scalar());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * radix_[i] + factors_[i]->index_of(x.parts()[i]);
  return idx;
}

Element Ambient::element_at(std::size_t i) const {
  if (!is_finite() || i >= order()) throw std::logic_error("element_at out of range");
  if (kind_ != AmbientKind::product) return Element(static_cast<std::int64_t>(i));
  Element::Tuple t(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    t[k] = factors_[k]->element_at(i % radix_[k]);
    i /= radix_[k];
  }
  return Element(std::move(t));
}

std::size_t Ambient::add_index(std::size_t i, std::size_t j) const {
  switch (kind_) {
    case AmbientKind::zmod: {
      const auto s = i + j;
      const auto n = static_cast<std::size_t>(n_);
      return s >= n ? s - n : s;
    }
    case AmbientKind::cayley:
      return table_[i * static_cast<std::size_t>(n_) + j];
    case AmbientKind::product:
      if (!index_table_.empty()) return index_table_[i * order() + j];
      return index_of(add(element_at(i), element_at(j)));
    default:
      throw std::logic_error("add_index on an infinite ambient");
  }
}

std::string Ambient::name() const {
  switch (kind_) {
    case AmbientKind::zmod:
      return "Z" + std::to_string(n_);
    case AmbientKind::cayley:
      return "Cayley(" + std::to_string(n_) + ")";
    case AmbientKind::int_lattice:
      return dim_ == 1 ? "Z" : "Z^" + std::to_string(dim_);
    case AmbientKind::nat_lattice:
      return dim_ == 1 ? "N" : "N^" + std::to_string(dim_);
    case AmbientKind::free_monoid: {
      std::string s = "Free{";
      for (std::size_t i = 0; i < alphabet_.size(); ++i) s += (i ? "," : "") + alphabet_[i];
      return s + "}";
    }
    case AmbientKind::product: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const bool wrap = factors_[i]->kind() == AmbientKind::product;
        s += (i ? "x" : "") + (wrap ? "(" + factors_[i]->name() + ")" : factors_[i]->name());
      }
      return s;
    }
  }
  return "?";
}

bool operator==(const Ambient& a, const Ambient& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.n_ != b.n_ || a.dim_ != b.dim_ || a.table_ != b.table_ ||
      a.labels_ != b.labels_ || a.alphabet_ != b.alphabet_ ||
      a.factors_.size() != b.factors_.size())
    return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (!(*a.factors_[i] == *b.factors_[i])) return false;
  return true;
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

}  // namespace addcomb
