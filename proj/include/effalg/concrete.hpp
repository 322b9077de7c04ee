#pragma once

#include "effalg/core.hpp"
#include "effalg/states.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace effalg {

/// Subset of the ground set {0, ..., m-1}.
using Block = std::uint32_t;

inline constexpr unsigned kMaxGround = 24;

struct SystemViolation {
    enum class Kind { Range, Empty, MissingComplement, MissingUnion } kind;
    std::vector<Block> blocks;  // offending blocks; the missing set comes last
    std::string detail;
};

/// A family of subsets of a finite ground set closed under complement and
/// under unions of disjoint members. Block order is the element order of
/// the algebra built from it.
class SetSystem {
public:
    unsigned ground_size() const { return ground_; }
    Block full() const { return (Block{1} << ground_) - 1; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(Block block) const;
    bool contains(Block block) const;

private:
    friend struct SystemFactory;
    unsigned ground_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::string> labels_;
    std::vector<Block> sorted_;
};

struct SystemValidation {
    std::optional<SetSystem> system;
    std::vector<SystemViolation> violations;

    bool ok() const { return system.has_value(); }
};

/// Accepts the family iff it is nonempty, complement-closed and closed under
/// disjoint unions. Duplicates are dropped; order is otherwise preserved.
/// Empty `labels` means labels are generated from the point letters.
SystemValidation validate_system(unsigned ground_size, const std::vector<Block>& blocks,
                                 const std::vector<std::string>& labels = {});

/// Least closed family containing the seeds, the empty set and the ground set,
/// in canonical order.
SetSystem closure(unsigned ground_size, const std::vector<Block>& seeds);

/// All even-cardinality subsets; throws std::invalid_argument for odd m.
SetSystem even_subsets(unsigned ground_size);
SetSystem powerset(unsigned ground_size);

/// The concrete orthomodular poset: sum is disjoint union, order is inclusion.
EffectAlgebra to_algebra(const SetSystem& system);

/// Two-valued state s_x(A) = [x in A], indexed like the blocks.
State point_state(const SetSystem& system, unsigned point);
std::vector<State> point_states(const SetSystem& system);

/// "{a,b}" style label of a block using letters for m <= 26, numbers otherwise.
std::string block_label(unsigned ground_size, Block block);
std::string point_name(unsigned ground_size, unsigned point);

}  // namespace effalg
