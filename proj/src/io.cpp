#include "effalg/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace effalg::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (auto hash = text.find('#'); hash != std::string::npos)
            text.resize(hash);
        std::istringstream words(text);
        Line line{number, {}};
        for (std::string w; words >> w;)
            line.words.push_back(w);
        if (!line.words.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

std::optional<unsigned long> to_number(const std::string& word)
{
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        return std::nullopt;
    return value;
}

unsigned long number(const Line& line, std::size_t index)
{
    if (index >= line.words.size())
        throw InputError("missing argument to '" + line.words.front() + "'", line.number);
    auto v = to_number(line.words[index]);
    if (!v)
        throw InputError("expected a nonnegative integer, got '" + line.words[index] + "'", line.number);
    return *v;
}

void expect_arity(const Line& line, std::size_t count)
{
    if (line.words.size() != count)
        throw InputError("'" + line.words.front() + "' expects " + std::to_string(count - 1) + " arguments",
                         line.number);
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

InputError::InputError(const std::string& message, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

SumTable parse_ea(std::istream& in)
{
    auto lines = tokenize(in);
    if (lines.empty() || lines.front().words.front() != "ea")
        throw InputError("expected 'ea <n>' header", lines.empty() ? 0 : lines.front().number);
    expect_arity(lines.front(), 2);
    auto n = number(lines.front(), 1);
    if (n < 2 || n > kMaxCarrier)
        throw InputError("carrier size out of range", lines.front().number);
    std::optional<unsigned long> one;
    std::vector<SumEntry> entries;
    std::vector<std::pair<ElementId, std::string>> names;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        const auto& key = line.words.front();
        if (key == "one") {
            expect_arity(line, 2);
            if (one)
                throw InputError("duplicate 'one'", line.number);
            one = number(line, 1);
        }
        else if (key == "sum") {
            expect_arity(line, 4);
            auto i = number(line, 1);
            auto j = number(line, 2);
            if (i > j)
                throw InputError("sum entries must list i <= j", line.number);
            entries.push_back({static_cast<ElementId>(i), static_cast<ElementId>(j),
                               static_cast<ElementId>(number(line, 3))});
        }
        else if (key == "name") {
            expect_arity(line, 3);
            names.emplace_back(static_cast<ElementId>(number(line, 1)), line.words[2]);
        }
        else {
            throw InputError("unknown keyword '" + key + "'", line.number);
        }
    }
    if (!one)
        throw InputError("missing 'one <k>'");
    SumTable table(n, 0, static_cast<ElementId>(*one));
    for (const auto& e : entries)
        table.define(e.lhs, e.rhs, e.result);
    for (auto& [id, name] : names) {
        if (id >= n)
            throw InputError("name for element outside the carrier");
        table.set_name(id, std::move(name));
    }
    return table;
}

std::string write_ea(const EffectAlgebra& algebra)
{
    // The format fixes zero at 0; move it there if needed.
    std::vector<ElementId> to_file(algebra.size());
    ElementId next = 1;
    for (ElementId a = 0; a < algebra.size(); ++a)
        to_file[a] = a == algebra.zero() ? 0 : next++;
    std::ostringstream out;
    out << "ea " << algebra.size() << '\n';
    out << "one " << to_file[algebra.one()] << '\n';
    for (const auto& e : algebra.proper_sums()) {
        auto i = to_file[e.lhs];
        auto j = to_file[e.rhs];
        out << "sum " << std::min(i, j) << ' ' << std::max(i, j) << ' ' << to_file[e.result] << '\n';
    }
    for (ElementId a = 0; a < algebra.size(); ++a)
        if (algebra.name(a) != std::to_string(a))
            out << "name " << to_file[a] << ' ' << algebra.name(a) << '\n';
    return out.str();
}

OmpFile parse_omp(std::istream& in)
{
    auto lines = tokenize(in);
    if (lines.empty() || lines.front().words.front() != "base")
        throw InputError("expected 'base <m>' header", lines.empty() ? 0 : lines.front().number);
    expect_arity(lines.front(), 2);
    OmpFile file;
    auto m = number(lines.front(), 1);
    if (m == 0 || m > kMaxGround)
        throw InputError("ground set size out of range", lines.front().number);
    file.ground_size = static_cast<unsigned>(m);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.words.front() != "block")
            throw InputError("unknown keyword '" + line.words.front() + "'", line.number);
        if (line.words.size() < 2 || line.words[1].back() != ':')
            throw InputError("expected 'block <label>: <points>'", line.number);
        std::string label = line.words[1].substr(0, line.words[1].size() - 1);
        if (label.empty())
            throw InputError("empty block label", line.number);
        Block b = 0;
        for (std::size_t w = 2; w < line.words.size(); ++w) {
            auto x = number(line, w);
            if (x >= m)
                throw InputError("point " + std::to_string(x) + " outside the ground set", line.number);
            b |= Block{1} << x;
        }
        file.blocks.push_back(b);
        file.labels.push_back(std::move(label));
    }
    return file;
}

std::string write_omp(const SetSystem& system)
{
    std::ostringstream out;
    out << "base " << system.ground_size() << '\n';
    for (std::size_t i = 0; i < system.blocks().size(); ++i) {
        out << "block " << system.labels()[i] << ':';
        for (unsigned x = 0; x < system.ground_size(); ++x)
            if (system.blocks()[i] >> x & 1U)
                out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

ElementId resolve_element(const EffectAlgebra& algebra, const std::string& token)
{
    if (auto id = algebra.find(token))
        return *id;
    if (auto v = to_number(token); v && *v < algebra.size())
        return static_cast<ElementId>(*v);
    throw InputError("unknown element '" + token + "'");
}

std::vector<State> parse_states(std::istream& in, const EffectAlgebra& algebra)
{
    auto lines = tokenize(in);
    struct Partial {
        std::string name;
        std::size_t line;
        std::map<ElementId, Rational> values;
    };
    std::vector<Partial> partial;
    for (const auto& line : lines) {
        const auto& key = line.words.front();
        if (key == "state") {
            expect_arity(line, 2);
            partial.push_back({line.words[1], line.number, {}});
        }
        else if (key == "val") {
            expect_arity(line, 3);
            if (partial.empty())
                throw InputError("'val' before any 'state'", line.number);
            ElementId id;
            Rational value;
            try {
                id = resolve_element(algebra, line.words[1]);
                value = parse_rational(line.words[2]);
            }
            catch (const std::exception& ex) {
                throw InputError(ex.what(), line.number);
            }
            if (!partial.back().values.emplace(id, value).second)
                throw InputError("duplicate value for " + algebra.name(id), line.number);
        }
        else {
            throw InputError("unknown keyword '" + key + "'", line.number);
        }
    }
    std::vector<State> out;
    for (auto& p : partial) {
        State s;
        s.name = p.name;
        s.values.resize(algebra.size());
        for (ElementId a = 0; a < algebra.size(); ++a) {
            if (auto it = p.values.find(a); it != p.values.end())
                s.values[a] = it->second;
            else if (a == algebra.zero())
                s.values[a] = 0;
            else if (a == algebra.one())
                s.values[a] = 1;
            else if (auto sup = p.values.find(algebra.supplement(a)); sup != p.values.end())
                s.values[a] = 1 - sup->second;
            else
                throw InputError("state '" + p.name + "' leaves " + algebra.name(a) + " undetermined", p.line);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string write_states(const std::vector<State>& states, const EffectAlgebra& algebra)
{
    std::ostringstream out;
    for (const auto& s : states) {
        out << "state " << s.name << '\n';
        for (ElementId a = 0; a < algebra.size(); ++a)
            out << "val " << algebra.name(a) << ' ' << to_string(s.values[a]) << '\n';
    }
    return out.str();
}

std::string to_dot(const EffectAlgebra& algebra)
{
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (ElementId a = 0; a < algebra.size(); ++a)
        out << "  n" << a << " [label=\"" << dot_escape(algebra.name(a)) << "\"];\n";
    for (const auto& [lo, hi] : algebra.hasse_covers())
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace effalg::io
