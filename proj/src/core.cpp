#include "effalg/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace effalg {

SumTable::SumTable(std::size_t size, ElementId zero, ElementId one) : size_(size), zero_(zero), one_(one) {}

void SumTable::define(ElementId lhs, ElementId rhs, ElementId result)
{
    entries_.push_back({lhs, rhs, result});
}

void SumTable::set_name(ElementId id, std::string name)
{
    names_.emplace_back(id, std::move(name));
}

const char* axiom_name(Axiom axiom)
{
    switch (axiom) {
    case Axiom::Range: return "range";
    case Axiom::Carrier: return "carrier";
    case Axiom::Conflict: return "conflict";
    case Axiom::Commutativity: return "commutativity";
    case Axiom::ZeroSum: return "zero-sum";
    case Axiom::Associativity: return "associativity";
    case Axiom::Supplement: return "orthosupplement";
    case Axiom::ZeroOne: return "zero-one";
    }
    return "unknown";
}

std::string to_string(const Violation& violation)
{
    std::ostringstream out;
    out << axiom_name(violation.axiom) << " (";
    for (std::size_t i = 0; i < violation.elements.size(); ++i)
        out << (i ? " " : "") << violation.elements[i];
    out << "): " << violation.detail;
    return out.str();
}

std::optional<ElementId> EffectAlgebra::sum(ElementId a, ElementId b) const
{
    auto v = cell(sums_, a, b);
    if (v == kUndefined)
        return std::nullopt;
    return static_cast<ElementId>(v);
}

std::optional<ElementId> EffectAlgebra::try_ominus(ElementId b, ElementId a) const
{
    auto v = cell(diff_, b, a);
    if (v == kUndefined)
        return std::nullopt;
    return static_cast<ElementId>(v);
}

ElementId EffectAlgebra::ominus(ElementId b, ElementId a) const
{
    auto c = try_ominus(b, a);
    if (!c)
        throw std::domain_error("ominus: " + names_[a] + " is not below " + names_[b]);
    return *c;
}

std::vector<ElementId> EffectAlgebra::lower_cone(ElementId a, ElementId b) const
{
    std::vector<ElementId> cone;
    for (ElementId c = 0; c < size_; ++c)
        if (leq(c, a) && leq(c, b))
            cone.push_back(c);
    return cone;
}

std::vector<std::pair<ElementId, ElementId>> EffectAlgebra::hasse_covers() const
{
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (ElementId a = 0; a < size_; ++a) {
        for (ElementId b = 0; b < size_; ++b) {
            if (!less(a, b))
                continue;
            bool between = false;
            for (ElementId c = 0; c < size_ && !between; ++c)
                between = less(a, c) && less(c, b);
            if (!between)
                covers.emplace_back(a, b);
        }
    }
    return covers;
}

std::optional<ElementId> EffectAlgebra::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<ElementId>(it - names_.begin());
}

SumTable EffectAlgebra::table() const
{
    SumTable table(size_, zero_, one_);
    for (const auto& e : proper_sums_)
        table.define(e.lhs, e.rhs, e.result);
    for (ElementId i = 0; i < size_; ++i)
        if (names_[i] != std::to_string(i))
            table.set_name(i, names_[i]);
    return table;
}

bool leq_via_difference(const EffectAlgebra& algebra, ElementId a, ElementId b)
{
    return algebra.try_ominus(b, a).has_value();
}

struct AlgebraBuilder {
    static Validation run(const SumTable& table);
};

Validation AlgebraBuilder::run(const SumTable& table)
{
    Validation out;
    auto& violations = out.violations;
    const std::size_t n = table.size();
    auto report = [&](Axiom axiom, std::vector<ElementId> elements, std::string detail) {
        violations.push_back({axiom, std::move(elements), std::move(detail)});
    };

    if (n < 2 || n > kMaxCarrier) {
        report(Axiom::Carrier, {}, "carrier size must lie in [2, " + std::to_string(kMaxCarrier) + "]");
        return out;
    }
    const ElementId zero = table.zero();
    const ElementId one = table.one();
    if (zero >= n || one >= n) {
        report(Axiom::Range, {zero, one}, "zero or one outside the carrier");
        return out;
    }
    if (zero == one)
        report(Axiom::Carrier, {zero}, "zero and one coincide");

    constexpr std::int16_t undef = EffectAlgebra::kUndefined;
    std::vector<std::int16_t> sums(n * n, undef);
    // Orientation in which each cell was first written: 0 = as given, 1 = transposed.
    std::vector<std::int8_t> origin(n * n, -1);
    auto at = [n](ElementId a, ElementId b) { return a * n + b; };

    for (ElementId a = 0; a < n; ++a) {
        sums[at(a, zero)] = static_cast<std::int16_t>(a);
        sums[at(zero, a)] = static_cast<std::int16_t>(a);
    }

    for (const auto& e : table.entries()) {
        if (e.lhs >= n || e.rhs >= n || e.result >= n) {
            report(Axiom::Range, {e.lhs, e.rhs, e.result}, "index outside the carrier");
            continue;
        }
        if (e.lhs == zero || e.rhs == zero) {
            ElementId other = e.lhs == zero ? e.rhs : e.lhs;
            if (e.result != other)
                report(Axiom::ZeroSum, {e.lhs, e.rhs, e.result}, "sum with zero must return the other operand");
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            ElementId x = side == 0 ? e.lhs : e.rhs;
            ElementId y = side == 0 ? e.rhs : e.lhs;
            auto idx = at(x, y);
            if (sums[idx] == undef) {
                sums[idx] = static_cast<std::int16_t>(e.result);
                origin[idx] = static_cast<std::int8_t>(side);
            }
            else if (sums[idx] != static_cast<std::int16_t>(e.result)) {
                // Same orientation twice is a plain conflict; the two
                // orientations disagreeing is a commutativity failure.
                if (side == 0)
                    report(origin[idx] != side ? Axiom::Commutativity : Axiom::Conflict,
                           {x, y, static_cast<ElementId>(sums[idx]), e.result},
                           "conflicting values for the same sum");
            }
        }
    }

    std::vector<std::vector<ElementId>> partners(n);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (sums[at(a, b)] != undef)
                partners[a].push_back(b);

    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b : partners[a]) {
            auto ab = static_cast<ElementId>(sums[at(a, b)]);
            for (ElementId c : partners[ab]) {
                auto ab_c = sums[at(ab, c)];
                auto bc = sums[at(b, c)];
                if (bc == undef) {
                    report(Axiom::Associativity, {a, b, c}, "(a+b)+c defined but b+c undefined");
                    continue;
                }
                auto a_bc = sums[at(a, static_cast<ElementId>(bc))];
                if (a_bc == undef)
                    report(Axiom::Associativity, {a, b, c}, "(a+b)+c defined but a+(b+c) undefined");
                else if (a_bc != ab_c)
                    report(Axiom::Associativity, {a, b, c}, "(a+b)+c and a+(b+c) differ");
            }
        }
    }
    // Mirror direction: a+(b+c) defined forces (a+b)+c.
    for (ElementId b = 0; b < n; ++b) {
        for (ElementId c : partners[b]) {
            auto bc = static_cast<ElementId>(sums[at(b, c)]);
            for (ElementId a : partners[bc]) {
                auto ab = sums[at(a, b)];
                if (ab == undef || sums[at(static_cast<ElementId>(ab), c)] == undef)
                    report(Axiom::Associativity, {a, b, c}, "a+(b+c) defined but (a+b)+c undefined");
            }
        }
    }

    std::vector<ElementId> supplement(n, 0);
    for (ElementId a = 0; a < n; ++a) {
        std::vector<ElementId> found;
        for (ElementId b : partners[a])
            if (sums[at(a, b)] == static_cast<std::int16_t>(one))
                found.push_back(b);
        if (found.size() != 1) {
            found.insert(found.begin(), a);
            report(Axiom::Supplement, found,
                   found.size() == 1 ? "no orthosupplement" : "orthosupplement not unique");
        }
        else {
            supplement[a] = found.front();
        }
    }

    for (ElementId a = 0; a < n; ++a)
        if (a != zero && sums[at(a, one)] != undef)
            report(Axiom::ZeroOne, {a}, "a+1 defined for nonzero a");

    if (!violations.empty())
        return out;

    EffectAlgebra algebra;
    algebra.size_ = n;
    algebra.zero_ = zero;
    algebra.one_ = one;
    algebra.leq_.assign(n * n, 0);
    algebra.diff_.assign(n * n, undef);
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId c : partners[a]) {
            auto b = sums[at(a, c)];
            algebra.leq_[at(a, static_cast<ElementId>(b))] = 1;
            algebra.diff_[at(static_cast<ElementId>(b), a)] = static_cast<std::int16_t>(c);
            if (a != zero && c != zero && a <= c)
                algebra.proper_sums_.push_back({a, c, static_cast<ElementId>(b)});
        }
    }
    algebra.sums_ = std::move(sums);
    algebra.supplement_ = std::move(supplement);
    algebra.names_.resize(n);
    for (ElementId i = 0; i < n; ++i)
        algebra.names_[i] = std::to_string(i);
    for (const auto& [id, name] : table.names())
        if (id < n)
            algebra.names_[id] = name;
    out.algebra = std::move(algebra);
    return out;
}

Validation validate(const SumTable& table)
{
    return AlgebraBuilder::run(table);
}

}  // namespace effalg
