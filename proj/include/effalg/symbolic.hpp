#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Finitely described members of infinite concrete orthomodular posets.
//
// Every carrier is a disjoint union of regions of naturals. An element is a
// base set (a union of whole regions) symmetrically corrected by a finite set
// of points, so it is finite or cofinite inside each infinite region.

namespace effalg::symbolic {

enum class Construction { OmpUnotSod, OmpNotM, ChainFiniteLattice, FiniteCofinite, Balanced };

/// Stable tokens: omp-unot-sod, omp-not-m, chain-finite-lattice, finite-cofinite, balanced.
const char* token(Construction id);
std::optional<Construction> parse_construction(std::string_view token);

struct Point {
    std::size_t region;
    std::uint64_t index;

    auto operator<=>(const Point&) const = default;
};

struct Region {
    std::string name;
    bool infinite;
    std::uint64_t first;  // least valid index
    std::uint64_t size;   // number of points when finite
};

struct Base {
    std::string label;
    std::vector<bool> includes;  // per region
};

struct SymbolicElement {
    std::size_t base = 0;
    std::set<Point> correction;

    bool operator==(const SymbolicElement&) const = default;
};

class SymbolicAlgebra {
public:
    explicit SymbolicAlgebra(Construction id);

    Construction id() const { return id_; }
    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<Base>& bases() const { return bases_; }
    std::size_t region(std::string_view name) const;

    SymbolicElement zero() const;
    SymbolicElement one() const;

    /// Canonical element for base Δ points; throws std::invalid_argument if the
    /// resulting set is not a member of the family.
    SymbolicElement make(std::string_view base, const std::set<Point>& points = {}) const;
    bool contains(const SymbolicElement& u) const;

    bool leq(const SymbolicElement& u, const SymbolicElement& v) const;
    bool disjoint(const SymbolicElement& u, const SymbolicElement& v) const;
    /// Disjoint union, when the sets are disjoint.
    std::optional<SymbolicElement> oplus(const SymbolicElement& u, const SymbolicElement& v) const;
    SymbolicElement complement(const SymbolicElement& u) const;
    /// Value of the point-carried state s_x at u.
    bool point_state(const Point& x, const SymbolicElement& u) const;

    /// `base` or `base^{R:i,R:j}`; `empty` names the base with no regions.
    SymbolicElement parse(std::string_view text) const;
    std::string format(const SymbolicElement& u) const;
    std::string format(const Point& x) const;

private:
    struct Part {
        bool cofinite = false;
        std::set<std::uint64_t> points;  // exceptions if cofinite, members otherwise
    };
    using Parts = std::vector<Part>;

    Parts expand(const SymbolicElement& u) const;
    std::optional<SymbolicElement> compress(const Parts& parts) const;
    bool valid_point(const Point& x) const;
    bool correction_allowed(const Point& x) const;
    bool shape_allowed(const SymbolicElement& u) const;

    Construction id_;
    std::vector<Region> regions_;
    std::vector<Base> bases_;
};

inline bool leq_sym(const SymbolicAlgebra& alg, const SymbolicElement& u, const SymbolicElement& v)
{
    return alg.leq(u, v);
}

inline std::optional<SymbolicElement> oplus_sym(const SymbolicAlgebra& alg, const SymbolicElement& u,
                                                const SymbolicElement& v)
{
    return alg.oplus(u, v);
}

SymbolicAlgebra build(Construction id);
/// Throws std::invalid_argument for an unknown token.
SymbolicAlgebra build(std::string_view token);

enum class RefutationKind { NoMaximal, NoUpperBound, NoSupremum, NotSod, ChainBound };
const char* to_string(RefutationKind kind);

/// Evidence against a claim, with the recomputed checks that certify it.
struct Refutation {
    RefutationKind kind;
    std::string claim;
    std::vector<SymbolicElement> witnesses;
    std::optional<std::uint64_t> chain_index;
    std::optional<std::uint64_t> bound;
    std::vector<std::string> checks;
    bool verified = true;

    std::string render(const SymbolicAlgebra& alg) const;
};

/// omp-not-m: given c in [0, X1uX2] ^ [0, X4uX1], an element of the same cone
/// strictly above c (c plus the least unused point of X1).
Refutation no_maximal_refuter(const SymbolicAlgebra& alg, const SymbolicElement& candidate);

/// omp-unot-sod: the pair (X4uX1, X1uX2) and, for the first `sample` points of
/// X1 and X3, the check that s_x(X4uX1) = 1 forces s_x(X1uX2) = 1.
Refutation not_sod_witness(const SymbolicAlgebra& alg, std::size_t sample);

/// balanced: the chain element C_n = {x_2..x_n, y_2..y_n}.
SymbolicElement balanced_chain(const SymbolicAlgebra& alg, std::uint64_t n);
/// The interval bounds A = (XuY) \ {x_1, y_1} and B = (XuY) \ {x_1, y_0}.
std::pair<SymbolicElement, SymbolicElement> balanced_interval(const SymbolicAlgebra& alg);
/// balanced: for u in [0,A] ^ [0,B], an n with C_n not below u.
Refutation chain_no_upper_bound_refuter(const SymbolicAlgebra& alg, const SymbolicElement& candidate);

/// A decidable, infinite and co-infinite set of points of X; the orthogonal
/// system is the family of its singletons.
struct PointSet {
    std::string name;
    std::function<bool(std::uint64_t)> contains;
};
/// "even", "odd" or "mod:<k>:<r>" with k >= 2.
PointSet parse_point_set(std::string_view text);

/// finite-cofinite: given a cofinite upper bound u of every finite partial sum
/// of the system, a strictly smaller upper bound.
Refutation no_supremum_refuter(const SymbolicAlgebra& alg, const PointSet& system, const SymbolicElement& candidate);

/// chain-finite-lattice: the maximum chain cardinality 3, checked on a sample
/// of `sample` pair elements and `sample` co-point elements plus 0 and 1.
Refutation chain_bound(const SymbolicAlgebra& alg, std::size_t sample);

}  // namespace effalg::symbolic
