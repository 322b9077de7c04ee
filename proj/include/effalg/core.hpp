#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace effalg {

/// Index of an element inside the carrier of one algebra.
using ElementId = std::uint32_t;

inline constexpr std::size_t kMaxCarrier = 4096;

/// One defined entry `lhs (+) rhs = result` of a partial sum table.
struct SumEntry {
    ElementId lhs;
    ElementId rhs;
    ElementId result;
};

/// Raw, unvalidated partial operation. Each entry also defines its transpose.
/// Sums with `zero` are implicit.
class SumTable {
public:
    SumTable(std::size_t size, ElementId zero, ElementId one);

    void define(ElementId lhs, ElementId rhs, ElementId result);
    void set_name(ElementId id, std::string name);

    std::size_t size() const { return size_; }
    ElementId zero() const { return zero_; }
    ElementId one() const { return one_; }
    const std::vector<SumEntry>& entries() const { return entries_; }
    const std::vector<std::pair<ElementId, std::string>>& names() const { return names_; }

private:
    std::size_t size_;
    ElementId zero_;
    ElementId one_;
    std::vector<SumEntry> entries_;
    std::vector<std::pair<ElementId, std::string>> names_;
};

enum class Axiom {
    Range,           // index outside the carrier
    Carrier,         // size bounds, zero == one
    Conflict,        // same ordered pair defined twice with different values
    Commutativity,   // a+b and b+a defined differently
    ZeroSum,         // explicit a+0 != a
    Associativity,
    Supplement,      // orthosupplement missing or not unique
    ZeroOne,         // a+1 defined for a != 0
};

const char* axiom_name(Axiom axiom);

struct Violation {
    Axiom axiom;
    std::vector<ElementId> elements;
    std::string detail;
};

std::string to_string(const Violation& violation);

/// A validated finite effect algebra. Immutable; all derived relations are
/// computed once on construction.
class EffectAlgebra {
public:
    static constexpr std::int16_t kUndefined = -1;

    std::size_t size() const { return size_; }
    ElementId zero() const { return zero_; }
    ElementId one() const { return one_; }

    /// a (+) b, if defined.
    std::optional<ElementId> sum(ElementId a, ElementId b) const;
    bool orthogonal(ElementId a, ElementId b) const { return cell(sums_, a, b) != kUndefined; }
    bool leq(ElementId a, ElementId b) const { return leq_[a * size_ + b] != 0; }
    bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
    ElementId supplement(ElementId a) const { return supplement_[a]; }
    /// b (-) a; throws std::domain_error unless a <= b.
    ElementId ominus(ElementId b, ElementId a) const;
    std::optional<ElementId> try_ominus(ElementId b, ElementId a) const;

    /// [0,a] intersected with [0,b], ascending by id.
    std::vector<ElementId> lower_cone(ElementId a, ElementId b) const;
    /// All pairs (a,b) with b covering a, sorted.
    std::vector<std::pair<ElementId, ElementId>> hasse_covers() const;

    /// Defined sums with both operands nonzero and lhs <= rhs (by id).
    const std::vector<SumEntry>& proper_sums() const { return proper_sums_; }

    const std::string& name(ElementId id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<ElementId> find(const std::string& name) const;

    /// Sum table with the implicit zero sums omitted, one entry per unordered pair.
    SumTable table() const;

private:
    friend struct AlgebraBuilder;
    EffectAlgebra() = default;

    std::int16_t cell(const std::vector<std::int16_t>& m, ElementId a, ElementId b) const
    {
        return m[a * size_ + b];
    }

    std::size_t size_ = 0;
    ElementId zero_ = 0;
    ElementId one_ = 0;
    std::vector<std::int16_t> sums_;
    std::vector<std::int16_t> diff_;
    std::vector<std::uint8_t> leq_;
    std::vector<ElementId> supplement_;
    std::vector<SumEntry> proper_sums_;
    std::vector<std::string> names_;
};

struct Validation {
    std::optional<EffectAlgebra> algebra;
    std::vector<Violation> violations;

    bool ok() const { return algebra.has_value(); }
};

/// Checks every axiom and collects all violations. On success the algebra
/// carries the derived order, orthosupplement and difference.
Validation validate(const SumTable& table);

/// Order obtained from the difference relation instead of the sum table.
/// Agrees with EffectAlgebra::leq on every valid algebra.
bool leq_via_difference(const EffectAlgebra& algebra, ElementId a, ElementId b);

}  // namespace effalg
