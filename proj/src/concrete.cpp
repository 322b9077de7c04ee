#include "effalg/concrete.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace effalg {

namespace {

// Cardinality first, then lexicographic on the ascending member lists.
bool canonical_less(Block a, Block b)
{
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb)
        return pa < pb;
    while (a != b) {
        Block la = a & -a;
        Block lb = b & -b;
        if (la != lb)
            return la < lb;
        a ^= la;
        b ^= lb;
    }
    return false;
}

}  // namespace

std::string point_name(unsigned ground_size, unsigned point)
{
    if (ground_size <= 26)
        return std::string(1, static_cast<char>('a' + point));
    return std::to_string(point);
}

std::string block_label(unsigned ground_size, Block block)
{
    std::string out = "{";
    bool first = true;
    for (unsigned x = 0; x < ground_size; ++x) {
        if (!(block >> x & 1U))
            continue;
        if (!first)
            out += ',';
        out += point_name(ground_size, x);
        first = false;
    }
    return out + "}";
}

struct SystemFactory {
    static SetSystem make(unsigned ground, std::vector<Block> blocks, std::vector<std::string> labels)
    {
        SetSystem s;
        s.ground_ = ground;
        if (labels.empty())
            for (Block b : blocks)
                labels.push_back(block_label(ground, b));
        s.blocks_ = std::move(blocks);
        s.labels_ = std::move(labels);
        s.sorted_ = s.blocks_;
        std::sort(s.sorted_.begin(), s.sorted_.end());
        return s;
    }
};

std::size_t SetSystem::index_of(Block block) const
{
    auto it = std::find(blocks_.begin(), blocks_.end(), block);
    if (it == blocks_.end())
        throw std::out_of_range("block not in system: " + block_label(ground_, block));
    return static_cast<std::size_t>(it - blocks_.begin());
}

bool SetSystem::contains(Block block) const
{
    return std::binary_search(sorted_.begin(), sorted_.end(), block);
}

SystemValidation validate_system(unsigned ground_size, const std::vector<Block>& blocks,
                                 const std::vector<std::string>& labels)
{
    SystemValidation out;
    auto& violations = out.violations;
    if (ground_size == 0 || ground_size > kMaxGround) {
        violations.push_back({SystemViolation::Kind::Range, {},
                              "ground set size must lie in [1, " + std::to_string(kMaxGround) + "]"});
        return out;
    }
    if (!labels.empty() && labels.size() != blocks.size())
        throw std::invalid_argument("validate_system: label count does not match block count");
    const Block full = (Block{1} << ground_size) - 1;

    std::vector<Block> kept;
    std::vector<std::string> kept_labels;
    std::unordered_set<Block> seen;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block b = blocks[i];
        if (b & ~full) {
            violations.push_back({SystemViolation::Kind::Range, {b}, "block uses points outside the ground set"});
            continue;
        }
        if (!seen.insert(b).second)
            continue;
        kept.push_back(b);
        if (!labels.empty())
            kept_labels.push_back(labels[i]);
    }
    if (kept.empty() && violations.empty())
        violations.push_back({SystemViolation::Kind::Empty, {}, "family is empty"});

    for (Block b : kept)
        if (!seen.contains(full & ~b))
            violations.push_back({SystemViolation::Kind::MissingComplement, {b, full & ~b},
                                  "complement " + block_label(ground_size, full & ~b) + " of " +
                                      block_label(ground_size, b) + " missing"});
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if ((kept[i] & kept[j]) == 0 && !seen.contains(kept[i] | kept[j]))
                violations.push_back({SystemViolation::Kind::MissingUnion, {kept[i], kept[j], kept[i] | kept[j]},
                                      "union " + block_label(ground_size, kept[i] | kept[j]) + " of disjoint " +
                                          block_label(ground_size, kept[i]) + " and " +
                                          block_label(ground_size, kept[j]) + " missing"});
    if (violations.empty())
        out.system = SystemFactory::make(ground_size, std::move(kept), std::move(kept_labels));
    return out;
}

SetSystem closure(unsigned ground_size, const std::vector<Block>& seeds)
{
    if (ground_size == 0 || ground_size > kMaxGround)
        throw std::invalid_argument("closure: ground set size out of range");
    const Block full = (Block{1} << ground_size) - 1;
    std::unordered_set<Block> members;
    std::vector<Block> order;
    std::deque<Block> work;
    auto add = [&](Block b) {
        if (members.insert(b).second) {
            order.push_back(b);
            work.push_back(b);
        }
    };
    add(0);
    add(full);
    for (Block s : seeds) {
        if (s & ~full)
            throw std::invalid_argument("closure: seed outside the ground set");
        add(s);
    }
    while (!work.empty()) {
        Block b = work.front();
        work.pop_front();
        add(full & ~b);
        // `order` may grow while we scan it.
        for (std::size_t i = 0; i < order.size(); ++i)
            if ((order[i] & b) == 0)
                add(order[i] | b);
    }
    std::sort(order.begin(), order.end(), canonical_less);
    return SystemFactory::make(ground_size, std::move(order), {});
}

SetSystem even_subsets(unsigned ground_size)
{
    if (ground_size % 2 != 0)
        throw std::invalid_argument("even_subsets: ground set size must be even");
    if (ground_size == 0 || ground_size > kMaxGround)
        throw std::invalid_argument("even_subsets: ground set size out of range");
    std::vector<Block> blocks;
    for (Block b = 0; b < (Block{1} << ground_size); ++b)
        if (std::popcount(b) % 2 == 0)
            blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end(), canonical_less);
    return SystemFactory::make(ground_size, std::move(blocks), {});
}

SetSystem powerset(unsigned ground_size)
{
    if (ground_size == 0 || ground_size > kMaxGround)
        throw std::invalid_argument("powerset: ground set size out of range");
    std::vector<Block> blocks;
    for (Block b = 0; b < (Block{1} << ground_size); ++b)
        blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end(), canonical_less);
    return SystemFactory::make(ground_size, std::move(blocks), {});
}

EffectAlgebra to_algebra(const SetSystem& system)
{
    const auto& blocks = system.blocks();
    if (blocks.size() > kMaxCarrier)
        throw std::invalid_argument("to_algebra: too many blocks for a dense algebra");
    std::vector<std::pair<Block, ElementId>> lookup;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        lookup.emplace_back(blocks[i], static_cast<ElementId>(i));
    std::sort(lookup.begin(), lookup.end());
    auto id_of = [&](Block b) {
        auto it = std::lower_bound(lookup.begin(), lookup.end(), std::make_pair(b, ElementId{0}));
        if (it == lookup.end() || it->first != b)
            throw std::logic_error("to_algebra: system not closed");
        return it->second;
    };

    SumTable table(blocks.size(), id_of(0), id_of(system.full()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        table.set_name(static_cast<ElementId>(i), system.labels()[i]);
        if (blocks[i] == 0)
            continue;
        for (std::size_t j = i; j < blocks.size(); ++j)
            if (blocks[j] != 0 && (blocks[i] & blocks[j]) == 0)
                table.define(static_cast<ElementId>(i), static_cast<ElementId>(j), id_of(blocks[i] | blocks[j]));
    }
    auto result = validate(table);
    if (!result.ok())
        throw std::logic_error("to_algebra: closed set system produced an invalid table: " +
                               to_string(result.violations.front()));
    return std::move(*result.algebra);
}

State point_state(const SetSystem& system, unsigned point)
{
    if (point >= system.ground_size())
        throw std::out_of_range("point_state: point outside the ground set");
    State s;
    s.name = "s_" + point_name(system.ground_size(), point);
    for (Block b : system.blocks())
        s.values.emplace_back((b >> point) & 1U);
    return s;
}

std::vector<State> point_states(const SetSystem& system)
{
    std::vector<State> out;
    for (unsigned x = 0; x < system.ground_size(); ++x)
        out.push_back(point_state(system, x));
    return out;
}

}  // namespace effalg
