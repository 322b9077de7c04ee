#include "effalg/cli.hpp"

#include "effalg/classify.hpp"
#include "effalg/concrete.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/io.hpp"
#include "effalg/symbolic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace effalg::cli {

namespace {

// A loaded input: the algebra, plus the set system when it came from `.omp`.
struct Loaded {
    std::optional<EffectAlgebra> algebra;
    std::optional<SetSystem> system;
    std::vector<std::string> problems;
};

std::string first_keyword(const std::string& text)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream words(line);
        std::string w;
        if (words >> w)
            return w;
    }
    return {};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw io::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Loaded load(const std::string& path, bool use_closure)
{
    Loaded result;
    auto text = read_file(path);
    std::istringstream in(text);
    if (first_keyword(text) == "base") {
        auto file = io::parse_omp(in);
        if (use_closure) {
            result.system = closure(file.ground_size, file.blocks);
        }
        else {
            auto v = validate_system(file.ground_size, file.blocks, file.labels);
            for (const auto& violation : v.violations)
                result.problems.push_back(violation.detail);
            if (!v.ok())
                return result;
            result.system = std::move(*v.system);
        }
        result.algebra = to_algebra(*result.system);
        return result;
    }
    auto v = validate(io::parse_ea(in));
    for (const auto& violation : v.violations)
        result.problems.push_back(to_string(violation));
    result.algebra = std::move(v.algebra);
    return result;
}

EffectAlgebra require_algebra(const std::string& path, bool use_closure = false)
{
    auto loaded = load(path, use_closure);
    if (!loaded.algebra) {
        std::string msg = path + " is not a valid effect algebra";
        for (const auto& p : loaded.problems)
            msg += "\n  " + p;
        throw io::InputError(msg);
    }
    return std::move(*loaded.algebra);
}

std::string names(const EffectAlgebra& e, const std::vector<ElementId>& ids)
{
    std::string out = "(";
    for (std::size_t i = 0; i < ids.size(); ++i)
        out += (i ? ", " : "") + e.name(ids[i]);
    return out + ")";
}

int print_verdict(std::ostream& out, const EffectAlgebra& e, const std::string& label, const Verdict& v)
{
    out << label << ": " << (v.holds ? "true" : "false") << '\n';
    if (!v.witness.empty())
        out << "witness: " << names(e, v.witness) << '\n';
    if (!v.detail.empty())
        out << "detail: " << v.detail << '\n';
    if (v.counterexample)
        out << io::write_states({*v.counterexample}, e);
    return v.holds ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Effect algebra workbench", "effalg"};
    app.require_subcommand(1);
    int code = kOk;

    auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of an .ea or .omp file");
    std::string file;
    bool use_closure = false;
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_flag("--closure", use_closure, "Close an .omp family under complement and disjoint union");

    auto* classify_cmd = app.add_subcommand("classify", "Structural classification");
    bool with_states = false;
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--with-states", with_states, "Also decide unital, SOD and Jauch-Piron");
    classify_cmd->add_flag("--closure", use_closure);

    auto* states_cmd = app.add_subcommand("states", "Two-valued states or an exact LP query");
    bool two_valued = false;
    std::vector<std::string> pins;
    std::string minimize;
    std::string maximize;
    states_cmd->add_option("file", file)->required();
    auto* tv = states_cmd->add_flag("--two-valued", two_valued, "Enumerate all two-valued states");
    auto* pin_opt = states_cmd->add_option("--pin", pins, "Pin s(i)=value; repeatable");
    auto* min_opt = states_cmd->add_option("--minimize", minimize, "Minimize s(j)");
    auto* max_opt = states_cmd->add_option("--maximize", maximize, "Maximize s(j)");
    tv->excludes(pin_opt)->excludes(min_opt)->excludes(max_opt);
    min_opt->excludes(max_opt);
    states_cmd->add_flag("--closure", use_closure);

    auto* check_cmd = app.add_subcommand("check", "Decide unital / sod / jp");
    std::string property;
    std::string states_file;
    bool full = false;
    check_cmd->add_option("property", property)->required()->check(CLI::IsMember({"unital", "sod", "jp"}));
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--states", states_file, "State set (.st) to check instead of all states");
    check_cmd->add_flag("--full", full, "Quantify over the whole state space");
    check_cmd->add_flag("--closure", use_closure);

    auto* theorems_cmd = app.add_subcommand("theorems", "Run the implication harness over all small algebras");
    std::size_t max_n = 5;
    theorems_cmd->add_option("--max-n", max_n)->check(CLI::Range(std::size_t{2}, kMaxEnumerate));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List all effect algebras of a given size");
    std::size_t size = 4;
    std::string census;
    bool naive = false;
    enumerate_cmd->add_option("--n", size)->required()->check(CLI::Range(std::size_t{2}, kMaxEnumerate));
    enumerate_cmd->add_option("--census", census, "Write classified census lines to this file");
    enumerate_cmd->add_flag("--naive", naive, "Use the unpruned oracle generator (n <= 4)");

    auto* witness_cmd = app.add_subcommand("witness", "Refutation witnesses for the infinite constructions");
    std::string construction;
    std::string op;
    std::string candidate = "empty";
    std::string system = "even";
    std::size_t sample = 8;
    std::size_t iterate = 1;
    witness_cmd->add_option("construction", construction)->required();
    witness_cmd->add_option("op", op)->required();
    witness_cmd->add_option("--candidate", candidate, "Symbolic element, e.g. empty or X1uX2^{X1:0}");
    witness_cmd->add_option("--system", system, "Orthogonal system for no-supremum: even, odd, mod:k:r");
    witness_cmd->add_option("--sample", sample, "Number of sampled points per region");
    witness_cmd->add_option("--iterate", iterate, "Apply no-maximal repeatedly");

    auto* dot_cmd = app.add_subcommand("export-dot", "Write the Hasse diagram in DOT syntax");
    std::string output;
    dot_cmd->add_option("file", file)->required();
    dot_cmd->add_option("-o,--output", output)->required();
    dot_cmd->add_flag("--closure", use_closure);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    }
    catch (const CLI::ParseError& ex) {
        err << ex.what() << '\n';
        return kMalformed;
    }

    try {
        if (*validate_cmd) {
            auto loaded = load(file, use_closure);
            for (const auto& p : loaded.problems)
                out << "violation: " << p << '\n';
            if (!loaded.algebra)
                return kMalformed;
            out << "valid: " << loaded.algebra->size() << " elements\n";
            if (use_closure && loaded.system)
                out << io::write_omp(*loaded.system);
            return kOk;
        }
        if (*classify_cmd) {
            auto e = require_algebra(file, use_closure);
            auto report = classify(e, with_states);
            out << report.render_text(e);
            out << "flags: " << report.render_flags() << '\n';
            return kOk;
        }
        if (*states_cmd) {
            auto e = require_algebra(file, use_closure);
            if (two_valued) {
                auto states = two_valued_states(e);
                out << "# " << states.size() << " two-valued states\n" << io::write_states(states, e);
                return kOk;
            }
            StatePolytopeQuery query;
            for (const auto& p : pins) {
                auto eq = p.find('=');
                if (eq == std::string::npos)
                    throw io::InputError("--pin expects <element>=<value>");
                query.pins.emplace_back(io::resolve_element(e, p.substr(0, eq)), parse_rational(p.substr(eq + 1)));
            }
            if (minimize.empty() && maximize.empty()) {
                auto s = lp_feasible(e, query);
                if (!s) {
                    out << "infeasible\n";
                    return kFalse;
                }
                out << io::write_states({*s}, e);
                return kOk;
            }
            query.sense = minimize.empty() ? Sense::Maximize : Sense::Minimize;
            query.target = io::resolve_element(e, minimize.empty() ? maximize : minimize);
            auto best = lp_extremize(e, query);
            if (!best) {
                out << "infeasible\n";
                return kFalse;
            }
            out << "optimum: " << to_string(best->first) << '\n' << io::write_states({best->second}, e);
            return kOk;
        }
        if (*check_cmd) {
            auto e = require_algebra(file, use_closure);
            if (!states_file.empty() && !full) {
                std::istringstream in(read_file(states_file));
                auto states = io::parse_states(in, e);
                for (const auto& s : states)
                    if (auto v = is_state(e, s); !v)
                        throw io::InputError("'" + s.name + "' is not a state: " + v.detail);
                if (property == "unital")
                    return print_verdict(out, e, "unital", unital_set_check(e, states));
                if (property == "sod")
                    return print_verdict(out, e, "sod", sod_set_check(e, states));
                for (const auto& s : states) {
                    auto v = jp_state_check(e, s);
                    v.counterexample.reset();
                    if (!v) {
                        out << "state: " << s.name << '\n';
                        return print_verdict(out, e, "jp", v);
                    }
                }
                out << "jp: true\n";
                return kOk;
            }
            if (property == "unital")
                return print_verdict(out, e, "unital", unital_full_check(e));
            if (property == "sod")
                return print_verdict(out, e, "sod", sod_full_check(e));
            return print_verdict(out, e, "jp", jp_algebra_check(e));
        }
        if (*theorems_cmd) {
            auto report = theorem_harness(max_n);
            out << report.render();
            return report.total_violations() == 0 ? kOk : kFalse;
        }
        if (*enumerate_cmd) {
            if (naive && size > kMaxNaiveOracle)
                throw io::InputError("--naive supports n <= " + std::to_string(kMaxNaiveOracle));
            auto algebras = naive ? naive_oracle(size) : enumerate_all(size);
            std::ofstream census_out;
            if (!census.empty()) {
                census_out.open(census);
                if (!census_out)
                    throw io::InputError("cannot write '" + census + "'");
            }
            for (const auto& e : algebras) {
                out << canonical_form(e).encode() << '\n';
                if (census_out.is_open())
                    census_out << census_line(e, classify(e, true)) << '\n';
            }
            out << "# " << algebras.size() << " algebras with " << size << " elements\n";
            return kOk;
        }
        if (*witness_cmd) {
            auto alg = symbolic::build(construction);
            std::optional<symbolic::Refutation> r;
            if (op == "no-maximal") {
                auto c = alg.parse(candidate);
                for (std::size_t i = 0; i < std::max<std::size_t>(iterate, 1); ++i) {
                    r = symbolic::no_maximal_refuter(alg, c);
                    c = r->witnesses.front();
                }
            }
            else if (op == "not-sod") {
                r = symbolic::not_sod_witness(alg, sample);
            }
            else if (op == "chain-no-upper-bound") {
                r = symbolic::chain_no_upper_bound_refuter(alg, alg.parse(candidate));
            }
            else if (op == "no-supremum") {
                r = symbolic::no_supremum_refuter(alg, symbolic::parse_point_set(system),
                                                  alg.parse(candidate == "empty" ? "cofinite" : candidate));
            }
            else if (op == "chain-bound") {
                r = symbolic::chain_bound(alg, sample);
            }
            else {
                throw io::InputError("unknown witness operation '" + op + "'");
            }
            out << r->render(alg);
            return r->verified ? kOk : kFalse;
        }
        if (*dot_cmd) {
            auto e = require_algebra(file, use_closure);
            std::ofstream dot(output);
            if (!dot)
                throw io::InputError("cannot write '" + output + "'");
            dot << io::to_dot(e);
            out << "wrote " << output << " (" << e.size() << " nodes, " << e.hasse_covers().size() << " edges)\n";
            return kOk;
        }
    }
    catch (const io::InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kMalformed;
    }
    catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kMalformed;
    }
    catch (const std::out_of_range& ex) {
        err << "error: " << ex.what() << '\n';
        return kMalformed;
    }
    return code;
}

}  // namespace effalg::cli
