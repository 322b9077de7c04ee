#include "effalg/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace effalg {

namespace {

Verdict fail(std::vector<ElementId> witness, std::string detail)
{
    return {false, std::move(witness), std::move(detail), std::nullopt};
}

Verdict pass(std::string detail = {})
{
    return {true, {}, std::move(detail), std::nullopt};
}

const std::string& nm(const EffectAlgebra& e, ElementId a)
{
    return e.name(a);
}

// Length of a longest chain among `members`, or nullopt if the strict order
// restricted to them is not a strict partial order.
std::optional<std::size_t> longest_chain(const EffectAlgebra& e, const std::vector<ElementId>& members)
{
    for (ElementId x : members) {
        for (ElementId y : members) {
            if (x != y && e.leq(x, y) && e.leq(y, x))
                return std::nullopt;
            if (!e.less(x, y))
                continue;
            for (ElementId z : members)
                if (e.less(y, z) && !e.less(x, z))
                    return std::nullopt;
        }
    }
    // Elements with fewer strict predecessors first is a linear extension.
    std::vector<std::size_t> below(e.size(), 0);
    for (ElementId x : members)
        for (ElementId y : members)
            if (e.less(y, x))
                ++below[x];
    auto order = members;
    std::stable_sort(order.begin(), order.end(), [&](ElementId x, ElementId y) { return below[x] < below[y]; });
    std::vector<std::size_t> height(e.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (e.less(order[j], order[i]))
                height[order[i]] = std::max(height[order[i]], height[order[j]] + 1);
        best = std::max(best, height[order[i]]);
    }
    return best;
}

}  // namespace

Verdict is_principal(const EffectAlgebra& e, ElementId a)
{
    for (ElementId b = 0; b < e.size(); ++b) {
        if (!e.leq(b, a))
            continue;
        for (ElementId c = b; c < e.size(); ++c) {
            if (!e.leq(c, a))
                continue;
            auto bc = e.sum(b, c);
            if (bc && !e.leq(*bc, a))
                return fail({b, c}, nm(e, b) + " + " + nm(e, c) + " = " + nm(e, *bc) + " is not below " + nm(e, a));
        }
    }
    return pass();
}

Verdict is_orthoalgebra(const EffectAlgebra& e)
{
    for (ElementId a = 0; a < e.size(); ++a)
        if (a != e.zero() && e.sum(a, a))
            return fail({a}, nm(e, a) + " + " + nm(e, a) + " is defined for nonzero " + nm(e, a));
    return pass();
}

Verdict is_omp(const EffectAlgebra& e)
{
    for (ElementId a = 0; a < e.size(); ++a) {
        auto v = is_principal(e, a);
        if (!v) {
            v.witness.insert(v.witness.begin(), a);
            v.detail = nm(e, a) + " is not principal: " + v.detail;
            return v;
        }
    }
    return pass();
}

Verdict is_omp_by_joins(const EffectAlgebra& e)
{
    for (const auto& s : e.proper_sums()) {
        auto j = join(e, s.lhs, s.rhs);
        if (!j || *j != s.result)
            return fail({s.lhs, s.rhs}, nm(e, s.lhs) + " + " + nm(e, s.rhs) + " is not their join");
    }
    return pass();
}

std::optional<ElementId> meet(const EffectAlgebra& e, ElementId a, ElementId b)
{
    auto lower = e.lower_cone(a, b);
    for (ElementId g : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](ElementId l) { return e.leq(l, g); }))
            return g;
    return std::nullopt;
}

std::optional<ElementId> join(const EffectAlgebra& e, ElementId a, ElementId b)
{
    std::vector<ElementId> upper;
    for (ElementId u = 0; u < e.size(); ++u)
        if (e.leq(a, u) && e.leq(b, u))
            upper.push_back(u);
    for (ElementId l : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](ElementId u) { return e.leq(l, u); }))
            return l;
    return std::nullopt;
}

Verdict is_lattice(const EffectAlgebra& e)
{
    for (ElementId a = 0; a < e.size(); ++a) {
        for (ElementId b = a + 1; b < e.size(); ++b) {
            if (!join(e, a, b))
                return fail({a, b}, nm(e, a) + " and " + nm(e, b) + " have no join");
            if (!meet(e, a, b))
                return fail({a, b}, nm(e, a) + " and " + nm(e, b) + " have no meet");
        }
    }
    return pass();
}

Verdict is_oml(const EffectAlgebra& e)
{
    auto omp = is_omp(e);
    if (!omp)
        return omp;
    return is_lattice(e);
}

std::vector<ElementId> maximal_elements(const EffectAlgebra& e, ElementId a, ElementId b)
{
    auto cone = e.lower_cone(a, b);
    std::vector<ElementId> out;
    for (ElementId c : cone)
        if (std::none_of(cone.begin(), cone.end(), [&](ElementId d) { return e.less(c, d); }))
            out.push_back(c);
    return out;
}

Verdict has_maximality(const EffectAlgebra& e)
{
    for (ElementId a = 0; a < e.size(); ++a)
        for (ElementId b = a; b < e.size(); ++b)
            if (maximal_elements(e, a, b).empty())
                return fail({a, b}, "[0," + nm(e, a) + "] ^ [0," + nm(e, b) + "] has no maximal element");
    return pass();
}

Verdict is_chain_finite(const EffectAlgebra& e)
{
    std::vector<ElementId> all(e.size());
    std::iota(all.begin(), all.end(), ElementId{0});
    auto height = longest_chain(e, all);
    if (!height)
        return fail({}, "order relation is not a partial order, so chains need not be finite");
    return pass("longest chain has " + std::to_string(*height) + " elements");
}

Verdict is_orthocomplete(const EffectAlgebra& e)
{
    const std::size_t n = e.size();
    std::vector<ElementId> nonzero;
    for (ElementId a = 0; a < n; ++a)
        if (a != e.zero())
            nonzero.push_back(a);

    std::size_t systems = 0;
    Verdict result = pass();
    std::vector<ElementId> members;

    // `partial` marks the finite partial sums of the current system.
    std::function<bool(std::size_t, ElementId, const std::vector<std::uint8_t>&)> extend =
        [&](std::size_t from, ElementId total, const std::vector<std::uint8_t>& partial) {
            ++systems;
            std::vector<ElementId> upper;
            for (ElementId u = 0; u < n; ++u) {
                bool bounds = true;
                for (ElementId p = 0; p < n && bounds; ++p)
                    bounds = !partial[p] || e.leq(p, u);
                if (bounds)
                    upper.push_back(u);
            }
            bool has_sup = std::any_of(upper.begin(), upper.end(), [&](ElementId l) {
                return std::all_of(upper.begin(), upper.end(), [&](ElementId u) { return e.leq(l, u); });
            });
            if (!has_sup) {
                result = fail(members, "orthogonal system has no supremum of its partial sums");
                return false;
            }
            for (std::size_t i = from; i < nonzero.size(); ++i) {
                ElementId x = nonzero[i];
                auto next_total = e.sum(total, x);
                if (!next_total)
                    continue;
                std::vector<std::uint8_t> next = partial;
                for (ElementId p = 0; p < n; ++p) {
                    if (!partial[p])
                        continue;
                    auto px = e.sum(p, x);
                    if (!px) {
                        result = fail(members, "partial sum not orthogonal to an extension of the system");
                        return false;
                    }
                    next[*px] = 1;
                }
                members.push_back(x);
                bool ok = extend(i, *next_total, next);
                members.pop_back();
                if (!ok)
                    return false;
            }
            return true;
        };

    std::vector<std::uint8_t> start(n, 0);
    start[e.zero()] = 1;
    if (!extend(0, e.zero(), start))
        return result;
    return pass(std::to_string(systems) + " orthogonal systems checked");
}

Verdict has_chain_upper_bounds(const EffectAlgebra& e)
{
    std::size_t tallest = 0;
    for (ElementId a = 0; a < e.size(); ++a) {
        for (ElementId b = a; b < e.size(); ++b) {
            // A chain in a finite partially ordered cone is finite and its
            // maximum is an upper bound inside the cone.
            auto height = longest_chain(e, e.lower_cone(a, b));
            if (!height)
                return fail({a, b}, "order on [0," + nm(e, a) + "] ^ [0," + nm(e, b) + "] is not a partial order");
            tallest = std::max(tallest, *height);
        }
    }
    return pass("longest chain in a lower cone has " + std::to_string(tallest) + " elements");
}

const std::vector<std::string> kFlagOrder{"finite", "cf", "oc", "cu", "m", "oa", "omp", "lattice", "oml",
                                          "unital", "sod", "jp_algebra", "jpcu"};

ClassificationReport classify(const EffectAlgebra& e, bool with_states)
{
    ClassificationReport r;
    auto put = [&](const std::string& key, Verdict v) {
        r.flags[key] = v.holds;
        r.verdicts[key] = std::move(v);
    };
    put("finite", pass(std::to_string(e.size()) + " elements"));
    put("cf", is_chain_finite(e));
    put("oc", is_orthocomplete(e));
    put("cu", has_chain_upper_bounds(e));
    put("m", has_maximality(e));
    put("oa", is_orthoalgebra(e));
    put("omp", is_omp(e));
    put("lattice", is_lattice(e));
    if (!r.flags["omp"])
        put("oml", fail(r.verdicts["omp"].witness, "not an orthomodular poset"));
    else
        put("oml", r.verdicts["lattice"]);
    if (with_states) {
        put("unital", unital_full_check(e));
        put("sod", sod_full_check(e));
        put("jp_algebra", jp_algebra_check(e));
        // A finite algebra with a unital state space has a finite unital set.
        if (!r.flags["unital"])
            put("jpcu", fail(r.verdicts["unital"].witness, "no unital set of states"));
        else if (!r.flags["jp_algebra"])
            put("jpcu", fail(r.verdicts["jp_algebra"].witness, "not Jauch-Piron"));
        else
            put("jpcu", pass());
    }
    return r;
}

std::string ClassificationReport::render_flags() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& key : kFlagOrder) {
        auto it = flags.find(key);
        if (it == flags.end())
            continue;
        out << (first ? "" : " ") << key << '=' << (it->second ? "true" : "false");
        first = false;
    }
    return out.str();
}

std::string ClassificationReport::render_text(const EffectAlgebra& algebra) const
{
    std::ostringstream out;
    for (const auto& key : kFlagOrder) {
        auto it = verdicts.find(key);
        if (it == verdicts.end())
            continue;
        const auto& v = it->second;
        out << key << ": " << (v.holds ? "true" : "false");
        if (!v.witness.empty()) {
            out << "  witness (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                out << (i ? ", " : "") << algebra.name(v.witness[i]);
            out << ")";
        }
        if (!v.detail.empty())
            out << "  " << v.detail;
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> report_implication_failures(const ClassificationReport& r)
{
    static const std::vector<std::pair<std::string, std::string>> kImplications{
        {"finite", "cf"}, {"cf", "oc"},   {"oc", "cu"},  {"cu", "m"},     {"lattice", "cu"},
        {"oml", "omp"},   {"omp", "oa"},  {"jpcu", "lattice"}, {"jpcu", "m"}, {"sod", "unital"},
        {"unital", "oa"}, {"sod", "omp"}, {"jpcu", "oml"},
    };
    std::vector<std::string> out;
    for (const auto& [lhs, rhs] : kImplications) {
        auto l = r.flags.find(lhs);
        auto h = r.flags.find(rhs);
        if (l == r.flags.end() || h == r.flags.end())
            continue;
        if (l->second && !h->second)
            out.push_back(lhs + "=>" + rhs);
    }
    return out;
}

}  // namespace effalg
