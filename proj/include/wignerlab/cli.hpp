// cli.hpp — command implementations behind the wignerlab executable.
// Commands write to caller-supplied streams and return process exit
// codes: 0 success, 1 input error, 2 consistency violation.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wignerlab/phase_space.hpp"
#include "wignerlab/states.hpp"

namespace wignerlab {

enum class OutputFormat { text, json, csv };
enum class SamplerKind { pure, mixed, separable, werner_sweep };

const char* to_string(SamplerKind k);

struct RunConfig {
    std::optional<StateSpec> state;
    std::uint64_t seed = 0;
    int samples = 1;
    double tolerance = 1e-9;
    OutputFormat format = OutputFormat::text;
    SamplerKind sampler = SamplerKind::mixed;
    std::vector<StateSpec> witnesses;  // empty -> four Bell states plus `samples` random pure states
};

int cmd_wf(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_criteria(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_batch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Grid rendered in table orientation: rows (p1,p2) = 11,10,01,00 top to
// bottom, columns (q1,q2) = 00,01,10,11 left to right (one-qubit grids:
// rows p = 1,0; columns q = 0,1), six decimals per cell.
std::string render_grid(const WignerGrid& w);

}  // namespace wignerlab
