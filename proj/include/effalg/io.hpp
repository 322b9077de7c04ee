#pragma once

#include "effalg/concrete.hpp"
#include "effalg/core.hpp"
#include "effalg/states.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace effalg::io {

/// Malformed text input; `line` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& message, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// `.ea`: `ea <n>`, `one <k>`, `sum <i> <j> <k>`, `name <i> <label>`; zero is 0.
SumTable parse_ea(std::istream& in);
std::string write_ea(const EffectAlgebra& algebra);

/// `.omp`: `base <m>` and `block <label>: <i> <j> ...` lines.
struct OmpFile {
    unsigned ground_size = 0;
    std::vector<Block> blocks;
    std::vector<std::string> labels;
};
OmpFile parse_omp(std::istream& in);
std::string write_omp(const SetSystem& system);

/// `.st`: `state <name>` then `val <element> <p>/<q>` lines. Elements are ids
/// or names. Missing values are filled only for 0, 1 and supplements of
/// given elements.
std::vector<State> parse_states(std::istream& in, const EffectAlgebra& algebra);
std::string write_states(const std::vector<State>& states, const EffectAlgebra& algebra);

/// Hasse diagram: one node per element labeled by its name, one edge per cover.
std::string to_dot(const EffectAlgebra& algebra);

/// Element id from a numeric index or a name.
ElementId resolve_element(const EffectAlgebra& algebra, const std::string& token);

}  // namespace effalg::io
