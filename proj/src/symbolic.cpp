#include "effalg/symbolic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace effalg::symbolic {

namespace {

constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 20;

std::vector<Base> quadrant_bases()
{
    return {{"empty", {false, false, false, false}}, {"X1uX2", {true, true, false, false}},
            {"X2uX3", {false, true, true, false}},   {"X3uX4", {false, false, true, true}},
            {"X4uX1", {true, false, false, true}},   {"X", {true, true, true, true}}};
}

std::uint64_t parse_index(std::string_view text)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed point index '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

void require(const SymbolicAlgebra& alg, Construction id, const char* op)
{
    if (alg.id() != id)
        throw std::invalid_argument(std::string(op) + " applies to " + token(id) + ", not " + token(alg.id()));
}

}  // namespace

const char* token(Construction id)
{
    switch (id) {
    case Construction::OmpUnotSod: return "omp-unot-sod";
    case Construction::OmpNotM: return "omp-not-m";
    case Construction::ChainFiniteLattice: return "chain-finite-lattice";
    case Construction::FiniteCofinite: return "finite-cofinite";
    case Construction::Balanced: return "balanced";
    }
    return "?";
}

std::optional<Construction> parse_construction(std::string_view text)
{
    for (auto id : {Construction::OmpUnotSod, Construction::OmpNotM, Construction::ChainFiniteLattice,
                    Construction::FiniteCofinite, Construction::Balanced})
        if (text == token(id))
            return id;
    return std::nullopt;
}

SymbolicAlgebra::SymbolicAlgebra(Construction id) : id_(id)
{
    switch (id) {
    case Construction::OmpUnotSod:
        // X2 and X4 only need to be nonempty; singletons suffice.
        regions_ = {{"X1", true, 0, 0}, {"X2", false, 0, 1}, {"X3", true, 0, 0}, {"X4", false, 0, 1}};
        bases_ = quadrant_bases();
        break;
    case Construction::OmpNotM:
        regions_ = {{"X1", true, 0, 0}, {"X2", true, 0, 0}, {"X3", true, 0, 0}, {"X4", true, 0, 0}};
        bases_ = quadrant_bases();
        break;
    case Construction::ChainFiniteLattice:
        regions_ = {{"X", true, 0, 0}, {"Y", false, 0, 1}};
        bases_ = {{"empty", {false, false}}, {"X", {true, false}}, {"XuY", {true, true}}};
        break;
    case Construction::FiniteCofinite:
        regions_ = {{"X", true, 0, 0}};
        bases_ = {{"finite", {false}}, {"cofinite", {true}}};
        break;
    case Construction::Balanced:
        // X = {x_1, x_2, ...}; f(x_n) = y_n keeps y_0 out of the image.
        regions_ = {{"X", true, 1, 0}, {"Y", true, 0, 0}};
        bases_ = {{"finite", {false, false}}, {"cofinite", {true, true}}};
        break;
    }
}

std::size_t SymbolicAlgebra::region(std::string_view name) const
{
    for (std::size_t r = 0; r < regions_.size(); ++r)
        if (regions_[r].name == name)
            return r;
    throw std::invalid_argument("unknown region '" + std::string(name) + "' in " + token(id_));
}

bool SymbolicAlgebra::valid_point(const Point& x) const
{
    if (x.region >= regions_.size())
        return false;
    const auto& r = regions_[x.region];
    return x.index >= r.first && (r.infinite || x.index < r.first + r.size);
}

bool SymbolicAlgebra::correction_allowed(const Point& x) const
{
    if (id_ == Construction::OmpUnotSod)
        return x.region == 0 || x.region == 2;
    return true;
}

bool SymbolicAlgebra::shape_allowed(const SymbolicElement& u) const
{
    if (id_ == Construction::ChainFiniteLattice) {
        std::size_t xs = 0;
        std::size_t ys = 0;
        for (const auto& p : u.correction)
            (p.region == 0 ? xs : ys) += 1;
        const auto& label = bases_[u.base].label;
        if (label == "empty")
            return (xs == 0 && ys == 0) || (xs == 1 && ys == 1);
        if (label == "X")
            return xs == 1 && ys == 0;
        return xs == 0 && ys == 0;
    }
    if (id_ == Construction::Balanced) {
        std::size_t xs = 0;
        std::size_t ys = 0;
        for (const auto& p : u.correction)
            (p.region == 0 ? xs : ys) += 1;
        return xs == ys;
    }
    return true;
}

SymbolicAlgebra::Parts SymbolicAlgebra::expand(const SymbolicElement& u) const
{
    Parts parts(regions_.size());
    const auto& includes = bases_.at(u.base).includes;
    for (std::size_t r = 0; r < regions_.size(); ++r)
        parts[r].cofinite = regions_[r].infinite && includes[r];
    for (const auto& p : u.correction)
        parts.at(p.region).points.insert(p.index);
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        if (regions_[r].infinite || !includes[r])
            continue;
        std::set<std::uint64_t> members;
        for (std::uint64_t i = regions_[r].first; i < regions_[r].first + regions_[r].size; ++i)
            if (!parts[r].points.contains(i))
                members.insert(i);
        parts[r].points = std::move(members);
    }
    return parts;
}

std::optional<SymbolicElement> SymbolicAlgebra::compress(const Parts& parts) const
{
    for (std::size_t b = 0; b < bases_.size(); ++b) {
        const auto& includes = bases_[b].includes;
        SymbolicElement u;
        u.base = b;
        bool ok = true;
        for (std::size_t r = 0; r < regions_.size() && ok; ++r) {
            const auto& region = regions_[r];
            if (region.infinite) {
                if (parts[r].cofinite != includes[r]) {
                    ok = false;
                    break;
                }
                for (auto i : parts[r].points)
                    u.correction.insert({r, i});
            }
            else {
                for (std::uint64_t i = region.first; i < region.first + region.size; ++i)
                    if (parts[r].points.contains(i) != includes[r])
                        u.correction.insert({r, i});
            }
        }
        if (!ok)
            continue;
        if (std::all_of(u.correction.begin(), u.correction.end(), [&](const Point& p) { return correction_allowed(p); }) &&
            shape_allowed(u))
            return u;
    }
    return std::nullopt;
}

SymbolicElement SymbolicAlgebra::zero() const
{
    return make(bases_.front().label);
}

SymbolicElement SymbolicAlgebra::one() const
{
    return make(bases_.back().label);
}

SymbolicElement SymbolicAlgebra::make(std::string_view base, const std::set<Point>& points) const
{
    SymbolicElement raw;
    bool found = false;
    for (std::size_t b = 0; b < bases_.size() && !found; ++b) {
        if (bases_[b].label == base ||
            (base == "empty" && std::none_of(bases_[b].includes.begin(), bases_[b].includes.end(),
                                             [](bool v) { return v; }))) {
            raw.base = b;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("unknown base '" + std::string(base) + "' in " + token(id_));
    for (const auto& p : points)
        if (!valid_point(p))
            throw std::invalid_argument("point outside the carrier of " + std::string(token(id_)));
    raw.correction = points;
    auto canonical = compress(expand(raw));
    if (!canonical)
        throw std::invalid_argument(format(raw) + " is not a member of " + token(id_));
    return *canonical;
}

bool SymbolicAlgebra::contains(const SymbolicElement& u) const
{
    if (u.base >= bases_.size())
        return false;
    for (const auto& p : u.correction)
        if (!valid_point(p))
            return false;
    auto canonical = compress(expand(u));
    return canonical && *canonical == u;
}

bool SymbolicAlgebra::leq(const SymbolicElement& u, const SymbolicElement& v) const
{
    auto pu = expand(u);
    auto pv = expand(v);
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        const auto& a = pu[r];
        const auto& b = pv[r];
        if (!a.cofinite && !b.cofinite) {
            if (!std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end()))
                return false;
        }
        else if (!a.cofinite && b.cofinite) {
            for (auto i : a.points)
                if (b.points.contains(i))
                    return false;
        }
        else if (a.cofinite && !b.cofinite) {
            return false;
        }
        else if (!std::includes(a.points.begin(), a.points.end(), b.points.begin(), b.points.end())) {
            return false;
        }
    }
    return true;
}

bool SymbolicAlgebra::disjoint(const SymbolicElement& u, const SymbolicElement& v) const
{
    auto pu = expand(u);
    auto pv = expand(v);
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        const auto& a = pu[r];
        const auto& b = pv[r];
        if (a.cofinite && b.cofinite)
            return false;
        if (!a.cofinite && !b.cofinite) {
            for (auto i : a.points)
                if (b.points.contains(i))
                    return false;
        }
        else {
            const auto& fin = a.cofinite ? b : a;
            const auto& cof = a.cofinite ? a : b;
            if (!std::includes(cof.points.begin(), cof.points.end(), fin.points.begin(), fin.points.end()))
                return false;
        }
    }
    return true;
}

std::optional<SymbolicElement> SymbolicAlgebra::oplus(const SymbolicElement& u, const SymbolicElement& v) const
{
    if (!disjoint(u, v))
        return std::nullopt;
    auto pu = expand(u);
    auto pv = expand(v);
    Parts joined(regions_.size());
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        const auto& a = pu[r];
        const auto& b = pv[r];
        if (!a.cofinite && !b.cofinite) {
            joined[r].points = a.points;
            joined[r].points.insert(b.points.begin(), b.points.end());
        }
        else {
            // Disjointness leaves exactly one cofinite side.
            const auto& fin = a.cofinite ? b : a;
            const auto& cof = a.cofinite ? a : b;
            joined[r].cofinite = true;
            for (auto i : cof.points)
                if (!fin.points.contains(i))
                    joined[r].points.insert(i);
        }
    }
    auto out = compress(joined);
    if (!out)
        throw std::logic_error(std::string("disjoint union left the family ") + token(id_));
    return out;
}

SymbolicElement SymbolicAlgebra::complement(const SymbolicElement& u) const
{
    auto parts = expand(u);
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        if (regions_[r].infinite) {
            parts[r].cofinite = !parts[r].cofinite;
            continue;
        }
        std::set<std::uint64_t> rest;
        for (std::uint64_t i = regions_[r].first; i < regions_[r].first + regions_[r].size; ++i)
            if (!parts[r].points.contains(i))
                rest.insert(i);
        parts[r].points = std::move(rest);
    }
    auto out = compress(parts);
    if (!out)
        throw std::logic_error(std::string("complement left the family ") + token(id_));
    return *out;
}

bool SymbolicAlgebra::point_state(const Point& x, const SymbolicElement& u) const
{
    if (!valid_point(x))
        throw std::invalid_argument("point outside the carrier of " + std::string(token(id_)));
    const auto part = expand(u)[x.region];
    return part.cofinite != part.points.contains(x.index);
}

SymbolicElement SymbolicAlgebra::parse(std::string_view text) const
{
    text = trim(text);
    auto caret = text.find('^');
    auto base = trim(text.substr(0, caret));
    std::set<Point> points;
    if (caret != std::string_view::npos) {
        auto rest = trim(text.substr(caret + 1));
        if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
            throw std::invalid_argument("expected {R:i,...} after '^' in '" + std::string(text) + "'");
        rest = rest.substr(1, rest.size() - 2);
        while (!trim(rest).empty()) {
            auto comma = rest.find(',');
            auto item = trim(rest.substr(0, comma));
            auto colon = item.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("malformed point '" + std::string(item) + "'");
            points.insert({region(trim(item.substr(0, colon))), parse_index(trim(item.substr(colon + 1)))});
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    return make(base, points);
}

std::string SymbolicAlgebra::format(const Point& x) const
{
    return regions_.at(x.region).name + ":" + std::to_string(x.index);
}

std::string SymbolicAlgebra::format(const SymbolicElement& u) const
{
    std::string out = bases_.at(u.base).label;
    if (u.correction.empty())
        return out;
    out += "^{";
    bool first = true;
    for (const auto& p : u.correction) {
        out += (first ? "" : ",") + format(p);
        first = false;
    }
    return out + "}";
}

SymbolicAlgebra build(Construction id)
{
    return SymbolicAlgebra(id);
}

SymbolicAlgebra build(std::string_view text)
{
    auto id = parse_construction(text);
    if (!id)
        throw std::invalid_argument("unknown construction '" + std::string(text) + "'");
    return SymbolicAlgebra(*id);
}

const char* to_string(RefutationKind kind)
{
    switch (kind) {
    case RefutationKind::NoMaximal: return "no-maximal";
    case RefutationKind::NoUpperBound: return "no-upper-bound";
    case RefutationKind::NoSupremum: return "no-supremum";
    case RefutationKind::NotSod: return "not-SOD";
    case RefutationKind::ChainBound: return "chain-bound";
    }
    return "?";
}

std::string Refutation::render(const SymbolicAlgebra& alg) const
{
    std::ostringstream out;
    out << "construction: " << token(alg.id()) << '\n';
    out << "refutation: " << to_string(kind) << '\n';
    out << "claim: " << claim << '\n';
    for (const auto& w : witnesses)
        out << "witness: " << alg.format(w) << '\n';
    if (chain_index)
        out << "chain-index: " << *chain_index << '\n';
    if (bound)
        out << "bound: " << *bound << '\n';
    for (const auto& c : checks)
        out << "check: " << c << '\n';
    out << "verified: " << (verified ? "true" : "false") << '\n';
    return out.str();
}

namespace {

// Appends a recomputed check and folds it into `verified`.
void record(Refutation& r, bool ok, const std::string& what)
{
    r.checks.push_back(what + (ok ? " ... ok" : " ... FAILED"));
    r.verified = r.verified && ok;
}

}  // namespace

Refutation no_maximal_refuter(const SymbolicAlgebra& alg, const SymbolicElement& c)
{
    require(alg, Construction::OmpNotM, "no_maximal_refuter");
    auto a = alg.make("X1uX2");
    auto b = alg.make("X4uX1");
    if (!alg.contains(c) || !alg.leq(c, a) || !alg.leq(c, b))
        throw std::invalid_argument(alg.format(c) + " is not in [0, X1uX2] ^ [0, X4uX1]");
    const std::size_t x1 = alg.region("X1");
    std::uint64_t fresh = alg.regions()[x1].first;
    while (c.correction.contains({x1, fresh}))
        ++fresh;
    auto larger = alg.oplus(c, alg.make("empty", {{x1, fresh}}));
    if (!larger)
        throw std::logic_error("fresh point is not disjoint from the candidate");

    Refutation r{RefutationKind::NoMaximal,
                 alg.format(c) + " is a maximal element of [0, X1uX2] ^ [0, X4uX1]",
                 {*larger},
                 std::nullopt,
                 std::nullopt,
                 {},
                 true};
    record(r, alg.leq(c, *larger) && !(c == *larger), alg.format(c) + " < " + alg.format(*larger));
    record(r, alg.leq(*larger, a), alg.format(*larger) + " <= X1uX2");
    record(r, alg.leq(*larger, b), alg.format(*larger) + " <= X4uX1");
    return r;
}

Refutation not_sod_witness(const SymbolicAlgebra& alg, std::size_t sample)
{
    require(alg, Construction::OmpUnotSod, "not_sod_witness");
    auto u = alg.make("X4uX1");
    auto v = alg.make("X1uX2");
    Refutation r{RefutationKind::NotSod,
                 "the point states on X1 u X3 are strongly order determining",
                 {u, v},
                 std::nullopt,
                 std::nullopt,
                 {},
                 true};
    record(r, !alg.leq(u, v), "X4uX1 is not below X1uX2");
    const std::size_t x1 = alg.region("X1");
    const std::size_t x3 = alg.region("X3");
    std::size_t forced = 0;
    std::size_t vacuous = 0;
    bool implication = true;
    bool unital = true;
    for (std::size_t region : {x1, x3}) {
        for (std::uint64_t i = 0; i < sample; ++i) {
            Point x{region, i};
            bool su = alg.point_state(x, u);
            bool sv = alg.point_state(x, v);
            if (su) {
                ++forced;
                implication = implication && region == x1 && sv;
            }
            else {
                ++vacuous;
            }
            // s_x takes the value 1 on the nonzero element {x}.
            unital = unital && alg.point_state(x, alg.make("empty", {x}));
        }
    }
    record(r, implication,
           "every sampled s_x with s_x(X4uX1) = 1 has x in X1 and s_x(X1uX2) = 1 (" + std::to_string(forced) +
               " forced, " + std::to_string(vacuous) + " vacuous)");
    record(r, unital, "every sampled s_x is 1 on the singleton {x}");
    return r;
}

SymbolicElement balanced_chain(const SymbolicAlgebra& alg, std::uint64_t n)
{
    require(alg, Construction::Balanced, "balanced_chain");
    if (n < 2)
        throw std::invalid_argument("chain index must be at least 2");
    std::set<Point> points;
    for (std::uint64_t i = 2; i <= n; ++i) {
        points.insert({0, i});
        points.insert({1, i});
    }
    return alg.make("finite", points);
}

std::pair<SymbolicElement, SymbolicElement> balanced_interval(const SymbolicAlgebra& alg)
{
    require(alg, Construction::Balanced, "balanced_interval");
    return {alg.make("cofinite", {{0, 1}, {1, 1}}), alg.make("cofinite", {{0, 1}, {1, 0}})};
}

Refutation chain_no_upper_bound_refuter(const SymbolicAlgebra& alg, const SymbolicElement& u)
{
    require(alg, Construction::Balanced, "chain_no_upper_bound_refuter");
    auto [a, b] = balanced_interval(alg);
    if (!alg.contains(u) || !alg.leq(u, a) || !alg.leq(u, b))
        throw std::invalid_argument(alg.format(u) + " is not in [0,A] ^ [0,B]");
    std::uint64_t n = 0;
    if (alg.bases()[u.base].label == "finite") {
        // C_n has 2(n-1) points, more than u has.
        n = u.correction.size() / 2 + 2;
    }
    else {
        // The missing part of u is balanced and holds y_0 and y_1, so it also
        // holds an X point other than x_1.
        for (const auto& p : u.correction)
            if (p.region == 0 && p.index != 1) {
                n = p.index;
                break;
            }
        if (n == 0)
            throw std::logic_error("cofinite candidate without a second missing X point");
    }
    auto chain = balanced_chain(alg, n);
    Refutation r{RefutationKind::NoUpperBound,
                 alg.format(u) + " is an upper bound of the chain C_n in [0,A] ^ [0,B]",
                 {chain},
                 n,
                 std::nullopt,
                 {},
                 true};
    record(r, alg.contains(chain) && alg.leq(chain, a) && alg.leq(chain, b), "C_" + std::to_string(n) + " lies in [0,A] ^ [0,B]");
    if (n > 2)
        record(r, alg.leq(balanced_chain(alg, n - 1), chain), "C_" + std::to_string(n - 1) + " <= C_" + std::to_string(n));
    record(r, !alg.leq(chain, u), "C_" + std::to_string(n) + " is not below " + alg.format(u));
    return r;
}

PointSet parse_point_set(std::string_view text)
{
    if (text == "even")
        return {"even", [](std::uint64_t i) { return i % 2 == 0; }};
    if (text == "odd")
        return {"odd", [](std::uint64_t i) { return i % 2 == 1; }};
    if (text.starts_with("mod:")) {
        auto rest = text.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("expected mod:<k>:<r>");
        auto k = parse_index(rest.substr(0, colon));
        auto r = parse_index(rest.substr(colon + 1));
        if (k < 2 || r >= k)
            throw std::invalid_argument("mod:<k>:<r> needs k >= 2 and r < k");
        return {std::string(text), [k, r](std::uint64_t i) { return i % k == r; }};
    }
    throw std::invalid_argument("unknown point set '" + std::string(text) + "'");
}

Refutation no_supremum_refuter(const SymbolicAlgebra& alg, const PointSet& system, const SymbolicElement& u)
{
    require(alg, Construction::FiniteCofinite, "no_supremum_refuter");
    if (!alg.contains(u))
        throw std::invalid_argument(alg.format(u) + " is not a member of finite-cofinite");
    if (alg.bases()[u.base].label != "cofinite")
        throw std::invalid_argument(alg.format(u) + " is finite and cannot bound an infinite system");
    for (const auto& p : u.correction)
        if (system.contains(p.index))
            throw std::invalid_argument(alg.format(u) + " misses " + alg.format(p) + " of the system");

    std::uint64_t z = 0;
    while (z < kSearchLimit && (system.contains(z) || u.correction.contains({0, z})))
        ++z;
    if (z == kSearchLimit)
        throw std::invalid_argument("no point outside the system found; is it co-infinite?");
    auto points = u.correction;
    points.insert({0, z});
    auto smaller = alg.make("cofinite", points);

    Refutation r{RefutationKind::NoSupremum,
                 alg.format(u) + " is the supremum of the partial sums of {{x} : x in " + system.name + "}",
                 {smaller},
                 std::nullopt,
                 std::nullopt,
                 {},
                 true};
    record(r, alg.leq(smaller, u) && !(smaller == u), alg.format(smaller) + " < " + alg.format(u));
    // Partial sums over the first 16 members of the system.
    auto partial = alg.zero();
    bool bounded = true;
    std::size_t taken = 0;
    for (std::uint64_t i = 0; taken < 16 && i < kSearchLimit; ++i) {
        if (!system.contains(i))
            continue;
        auto next = alg.oplus(partial, alg.make("finite", {{0, i}}));
        bounded = bounded && next && alg.leq(*next, smaller);
        if (next)
            partial = *next;
        ++taken;
    }
    record(r, bounded, "the first " + std::to_string(taken) + " partial sums are below " + alg.format(smaller));
    bool covers = std::none_of(points.begin(), points.end(), [&](const Point& p) { return system.contains(p.index); });
    record(r, covers, "every point of the system lies in " + alg.format(smaller));
    return r;
}

Refutation chain_bound(const SymbolicAlgebra& alg, std::size_t sample)
{
    require(alg, Construction::ChainFiniteLattice, "chain_bound");
    std::vector<SymbolicElement> elems{alg.zero(), alg.one()};
    for (std::uint64_t i = 0; i < sample; ++i) {
        elems.push_back(alg.make("empty", {{0, i}, {1, 0}}));
        elems.push_back(alg.make("X", {{0, i}}));
    }
    // Longest strictly increasing chain among the sample; the height order is
    // the count of sample elements strictly below.
    std::vector<std::size_t> below(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (i != j && alg.leq(elems[j], elems[i]))
                ++below[i];
    std::vector<std::size_t> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
    std::vector<std::uint64_t> height(elems.size(), 1);
    std::uint64_t longest = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (alg.leq(elems[order[j]], elems[order[i]]) && !(elems[order[j]] == elems[order[i]]))
                height[order[i]] = std::max(height[order[i]], height[order[j]] + 1);
        longest = std::max(longest, height[order[i]]);
    }
    Refutation r{RefutationKind::ChainBound,
                 "chains of unbounded length exist",
                 {},
                 std::nullopt,
                 3,
                 {},
                 true};
    record(r, longest == 3, "longest chain among " + std::to_string(elems.size()) + " sampled elements has " +
                                std::to_string(longest) + " elements");
    if (sample >= 2) {
        auto pair = alg.make("empty", {{0, 0}, {1, 0}});
        auto copoint = alg.make("X", {{0, 1}});
        record(r, !alg.leq(pair, copoint) && !alg.leq(copoint, pair),
               alg.format(pair) + " and " + alg.format(copoint) + " are incomparable");
    }
    return r;
}

}  // namespace effalg::symbolic
