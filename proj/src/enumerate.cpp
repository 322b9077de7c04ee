#include "effalg/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace effalg {

namespace {

using Matrix = std::vector<std::int16_t>;
constexpr std::int16_t kUndef = -1;
constexpr std::int16_t kUnknown = -2;

char digit(std::int16_t v)
{
    if (v < 0)
        return '.';
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

Matrix full_matrix(const EffectAlgebra& e)
{
    const std::size_t n = e.size();
    Matrix m(n * n, kUndef);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (auto s = e.sum(a, b))
                m[a * n + b] = static_cast<std::int16_t>(*s);
    return m;
}

// Relabels `m` so that old element perm[i] becomes i.
Matrix relabel(const Matrix& m, std::size_t n, const std::vector<ElementId>& perm)
{
    std::vector<std::int16_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i)
        inverse[perm[i]] = static_cast<std::int16_t>(i);
    Matrix out(n * n, kUndef);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto v = m[perm[i] * n + perm[j]];
            out[i * n + j] = v < 0 ? v : inverse[static_cast<std::size_t>(v)];
        }
    return out;
}

// Least relabeling sending `zero` to 0 and `one` to n-1.
Matrix least_relabeling(const Matrix& m, std::size_t n, ElementId zero, ElementId one)
{
    std::vector<ElementId> middle;
    for (ElementId a = 0; a < n; ++a)
        if (a != zero && a != one)
            middle.push_back(a);
    Matrix best;
    do {
        std::vector<ElementId> perm;
        perm.push_back(zero);
        perm.insert(perm.end(), middle.begin(), middle.end());
        perm.push_back(one);
        auto candidate = relabel(m, n, perm);
        if (best.empty() || candidate < best)
            best = std::move(candidate);
    } while (std::next_permutation(middle.begin(), middle.end()));
    return best;
}

SumTable table_from_matrix(const Matrix& m, std::size_t n, ElementId zero, ElementId one)
{
    SumTable t(n, zero, one);
    for (ElementId i = 0; i < n; ++i)
        for (ElementId j = i; j < n; ++j)
            if (m[i * n + j] >= 0 && i != zero && j != zero)
                t.define(i, j, static_cast<ElementId>(m[i * n + j]));
    return t;
}

}  // namespace

std::string CanonicalForm::encode() const
{
    std::string out = std::to_string(size) + ":";
    for (std::size_t i = 1; i < size; ++i)
        for (std::size_t j = i; j < size; ++j)
            out += digit(cells[i * size + j]);
    return out;
}

CanonicalForm canonical_form(const EffectAlgebra& e)
{
    if (e.size() > kMaxCanonical)
        throw std::invalid_argument("canonical_form: carrier too large for exhaustive relabeling");
    return {e.size(), least_relabeling(full_matrix(e), e.size(), e.zero(), e.one())};
}

SumTable decode_canonical(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("canonical encoding lacks ':'");
    std::size_t n = std::stoul(text.substr(0, colon));
    std::string body = text.substr(colon + 1);
    if (n < 2 || body.size() != (n - 1) * n / 2)
        throw std::invalid_argument("canonical encoding has the wrong length");
    SumTable t(n, 0, static_cast<ElementId>(n - 1));
    std::size_t k = 0;
    for (ElementId i = 1; i < n; ++i)
        for (ElementId j = i; j < n; ++j) {
            char c = body[k++];
            if (c == '.')
                continue;
            int v = std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : c - 'a' + 10;
            t.define(i, j, static_cast<ElementId>(v));
        }
    return t;
}

std::vector<EffectAlgebra> enumerate_all(std::size_t n)
{
    if (n < 2 || n > kMaxEnumerate)
        throw std::invalid_argument("enumerate_all: n must lie in [2, " + std::to_string(kMaxEnumerate) + "]");
    const auto one = static_cast<std::int16_t>(n - 1);
    Matrix m(n * n, kUndef);
    auto at = [n](std::size_t a, std::size_t b) { return a * n + b; };
    for (std::size_t a = 0; a < n; ++a) {
        m[at(a, 0)] = static_cast<std::int16_t>(a);
        m[at(0, a)] = static_cast<std::int16_t>(a);
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i + 1 < n; ++i)
        for (std::size_t j = i; j + 1 < n; ++j) {
            cells.emplace_back(i, j);
            m[at(i, j)] = m[at(j, i)] = kUnknown;
        }

    // Consistency of the assigned part: at most one supplement per row and
    // associativity wherever every cell involved is known.
    auto consistent = [&]() {
        for (std::size_t a = 1; a + 1 < n; ++a) {
            int ones = 0;
            for (std::size_t b = 1; b + 1 < n; ++b)
                ones += m[at(a, b)] == one;
            if (ones > 1)
                return false;
        }
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t b = 1; b < n; ++b) {
                auto ab = m[at(a, b)];
                if (ab < 0)
                    continue;
                for (std::size_t c = 1; c < n; ++c) {
                    auto ab_c = m[at(static_cast<std::size_t>(ab), c)];
                    if (ab_c == kUnknown || ab_c == kUndef)
                        continue;
                    auto bc = m[at(b, c)];
                    if (bc == kUnknown)
                        continue;
                    if (bc == kUndef)
                        return false;
                    auto a_bc = m[at(a, static_cast<std::size_t>(bc))];
                    if (a_bc == kUnknown)
                        continue;
                    if (a_bc != ab_c)
                        return false;
                }
            }
        return true;
    };

    std::vector<EffectAlgebra> out;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (!consistent())
            return;
        if (k == cells.size()) {
            if (least_relabeling(m, n, 0, static_cast<ElementId>(one)) != m)
                return;
            auto v = validate(table_from_matrix(m, n, 0, static_cast<ElementId>(one)));
            if (v.ok())
                out.push_back(std::move(*v.algebra));
            return;
        }
        auto [i, j] = cells[k];
        std::vector<std::int16_t> options{kUndef, one};
        // Nonzero summands never give 0 or either summand back.
        for (std::size_t c = 1; c + 1 < n; ++c)
            if (c != i && c != j)
                options.push_back(static_cast<std::int16_t>(c));
        for (auto value : options) {
            m[at(i, j)] = m[at(j, i)] = value;
            fill(k + 1);
        }
        m[at(i, j)] = m[at(j, i)] = kUnknown;
    };
    fill(0);
    std::sort(out.begin(), out.end(), [](const EffectAlgebra& x, const EffectAlgebra& y) {
        return canonical_form(x) < canonical_form(y);
    });
    return out;
}

std::vector<EffectAlgebra> naive_oracle(std::size_t n)
{
    if (n < 2 || n > kMaxNaiveOracle)
        throw std::invalid_argument("naive_oracle: n must lie in [2, " + std::to_string(kMaxNaiveOracle) + "]");
    std::vector<std::pair<ElementId, ElementId>> cells;
    for (ElementId i = 0; i < n; ++i)
        for (ElementId j = i; j < n; ++j)
            cells.emplace_back(i, j);

    std::set<std::pair<ElementId, Matrix>> seen;
    std::vector<EffectAlgebra> out;
    std::vector<std::int16_t> assignment(cells.size(), kUndef);

    // Every choice of unit, every value (or none) in every cell. The only early
    // cut is an explicit sum with 0 that contradicts a (+) 0 = a.
    for (ElementId one = 1; one < n; ++one) {
        std::function<void(std::size_t)> fill = [&](std::size_t k) {
            if (k == cells.size()) {
                SumTable t(n, 0, one);
                for (std::size_t c = 0; c < cells.size(); ++c)
                    if (assignment[c] != kUndef)
                        t.define(cells[c].first, cells[c].second, static_cast<ElementId>(assignment[c]));
                auto v = validate(t);
                if (!v.ok())
                    return;
                Matrix m(n * n, kUndef);
                for (ElementId a = 0; a < n; ++a)
                    for (ElementId b = 0; b < n; ++b)
                        if (auto s = v.algebra->sum(a, b))
                            m[a * n + b] = static_cast<std::int16_t>(*s);
                if (seen.contains({one, m}))
                    return;
                // Record the whole orbit under relabelings fixing 0.
                std::vector<ElementId> perm(n);
                std::iota(perm.begin(), perm.end(), ElementId{0});
                do {
                    std::vector<ElementId> inverse(n);
                    for (ElementId i = 0; i < n; ++i)
                        inverse[perm[i]] = i;
                    seen.insert({inverse[one], relabel(m, n, perm)});
                } while (std::next_permutation(perm.begin() + 1, perm.end()));
                out.push_back(std::move(*v.algebra));
                return;
            }
            auto [i, j] = cells[k];
            for (std::int16_t value = kUndef; value < static_cast<std::int16_t>(n); ++value) {
                if (i == 0 && value != kUndef && value != static_cast<std::int16_t>(j))
                    continue;
                assignment[k] = value;
                fill(k + 1);
            }
            assignment[k] = kUndef;
        };
        fill(0);
    }
    return out;
}

std::size_t HarnessReport::total_violations() const
{
    std::size_t total = 0;
    for (const auto& t : theorems)
        total += t.violations;
    return total;
}

std::string HarnessReport::render() const
{
    std::ostringstream out;
    for (std::size_t n = 0; n < algebras_per_size.size(); ++n)
        if (algebras_per_size[n] > 0)
            out << "algebras n=" << n << ": " << algebras_per_size[n] << '\n';
    for (const auto& t : theorems)
        out << t.name << ": checked=" << t.checked << " hypothesis=" << t.hypothesis_held
            << " violations=" << t.violations << '\n';
    for (const auto& d : violation_details)
        out << "VIOLATION " << d << '\n';
    out << "total violations: " << total_violations() << '\n';
    return out.str();
}

std::vector<State> jp_candidate_states(const EffectAlgebra& e)
{
    std::vector<State> pool = two_valued_states(e);
    for (ElementId a = 0; a < e.size(); ++a) {
        if (a == e.zero())
            continue;
        if (auto s = relative_interior_state(e, {{a, Rational(1)}}))
            pool.push_back(std::move(*s));
    }
    std::vector<State> out;
    for (auto& s : pool) {
        if (!jp_state_check(e, s))
            continue;
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(std::move(s));
    }
    return out;
}

namespace {

TheoremTally& tally(HarnessReport& report, const std::string& name)
{
    for (auto& t : report.theorems)
        if (t.name == name)
            return t;
    report.theorems.push_back({name, 0, 0, 0});
    return report.theorems.back();
}

// One hypothesis => conclusion instance.
void implication(HarnessReport& report, const EffectAlgebra& e, const std::string& name, bool hypothesis,
                 bool conclusion, const std::string& note = {})
{
    auto& t = tally(report, name);
    ++t.checked;
    if (!hypothesis)
        return;
    ++t.hypothesis_held;
    if (conclusion)
        return;
    ++t.violations;
    std::string where = e.size() <= kMaxCanonical ? canonical_form(e).encode() : std::to_string(e.size()) + " elements";
    report.violation_details.push_back(name + " on " + where + (note.empty() ? "" : " (" + note + ")"));
}

// Greedy unital subset: keep a state only if it covers a not yet covered element.
std::vector<State> greedy_unital(const EffectAlgebra& e, const std::vector<State>& states)
{
    std::vector<State> out;
    std::vector<bool> covered(e.size(), false);
    covered[e.zero()] = true;
    for (const auto& s : states) {
        bool useful = false;
        for (ElementId a = 0; a < e.size(); ++a)
            useful = useful || (!covered[a] && s(a) == 1);
        if (!useful)
            continue;
        for (ElementId a = 0; a < e.size(); ++a)
            if (s(a) == 1)
                covered[a] = true;
        out.push_back(s);
    }
    return out;
}

}  // namespace

void run_theorems(const EffectAlgebra& e, HarnessReport& report)
{
    auto r = classify(e, true);
    const bool m = r.flag("m");

    implication(report, e, "lemma sod=>unital (full state space)", r.flag("sod"), r.flag("unital"));
    implication(report, e, "unital=>orthoalgebra", r.flag("unital"), r.flag("oa"));
    implication(report, e, "sod=>omp", r.flag("sod"), r.flag("omp"));
    implication(report, e, "jpcu=>maximality", r.flag("jpcu"), m);
    implication(report, e, "jpcu=>oml", r.flag("jpcu"), r.flag("oml"));

    auto two_valued = two_valued_states(e);
    auto jp = jp_candidate_states(e);
    std::vector<State> jp_two_valued;
    for (const auto& s : jp) {
        bool two = std::all_of(s.values.begin(), s.values.end(), [](const Rational& v) { return v == 0 || v == 1; });
        if (two)
            jp_two_valued.push_back(s);
    }
    auto jp_greedy = greedy_unital(e, jp);

    for (const auto* family : {&two_valued, &jp, &jp_two_valued, &jp_greedy})
        implication(report, e, "lemma sod=>unital (state sets)", bool(sod_set_check(e, *family)),
                    bool(unital_set_check(e, *family)));

    const bool jp_unital = bool(unital_set_check(e, jp));
    implication(report, e, "maximality & unital JP set=>omp", m && jp_unital, r.flag("omp"));
    for (const auto* family : {&jp, &jp_two_valued, &jp_greedy}) {
        bool unital = bool(unital_set_check(e, *family));
        bool sod = bool(sod_set_check(e, *family));
        implication(report, e, "JP set under maximality: unital=>sod", m && unital, sod);
        implication(report, e, "JP set under maximality: sod=>unital", m && sod, unital);
    }

    auto failures = report_implication_failures(r);
    std::string joined;
    for (const auto& f : failures)
        joined += (joined.empty() ? "" : ",") + f;
    implication(report, e, "F=>CF=>OC=>CU=>M, JPCU=>L=>CU", true, failures.empty(), joined);
}

HarnessReport theorem_harness(std::size_t n_max)
{
    HarnessReport report;
    report.algebras_per_size.assign(n_max + 1, 0);
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (const auto& e : enumerate_all(n)) {
            ++report.algebras_per_size[n];
            run_theorems(e, report);
        }
    }
    return report;
}

std::string census_line(const EffectAlgebra& algebra, const ClassificationReport& report)
{
    return canonical_form(algebra).encode() + " " + report.render_flags();
}

}  // namespace effalg
