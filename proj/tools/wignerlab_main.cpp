// wignerlab — phase-space toolkit for one- and two-qubit states:
// Wigner/characteristic grids, separability criteria, witness scans and
// seeded batch experiments.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wignerlab/cli.hpp"
#include "wignerlab/states_json.hpp"

namespace {

using wignerlab::OutputFormat;
using wignerlab::RunConfig;
using wignerlab::SamplerKind;

std::string load_inline_or_file(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("state: cannot open file \"" + arg + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonOpts {
    std::string state_arg;
    std::string witnesses_arg;
    std::string format = "text";
    std::string out_path;
};

void finalize(RunConfig& config, CommonOpts& opts) {
    if (!opts.state_arg.empty()) config.state = wignerlab::parse_state_spec_text(load_inline_or_file(opts.state_arg));
    if (!opts.witnesses_arg.empty()) {
        nlohmann::json arr;
        try {
            arr = nlohmann::json::parse(load_inline_or_file(opts.witnesses_arg));
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("witnesses: JSON parse error: ") + e.what());
        }
        if (!arr.is_array()) throw std::invalid_argument("witnesses: expected a JSON array of states");
        for (std::size_t i = 0; i < arr.size(); ++i)
            config.witnesses.push_back(
                wignerlab::parse_state_spec(arr[i], "witnesses[" + std::to_string(i) + "]"));
    }
    if (opts.format == "text") config.format = OutputFormat::text;
    else if (opts.format == "json") config.format = OutputFormat::json;
    else if (opts.format == "csv") config.format = OutputFormat::csv;
    else throw std::invalid_argument("format: expected text, json or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wignerlab — discrete phase-space toolkit for one- and two-qubit states"};
    app.require_subcommand(1);

    RunConfig config;
    CommonOpts opts;
    std::string sampler = "mixed";

    auto add_common = [&](CLI::App* sub, bool needs_state) {
        auto* st = sub->add_option("--state", opts.state_arg, "State spec: inline JSON or a file path");
        if (needs_state) st->required();
        sub->add_option("--seed", config.seed, "64-bit RNG seed")->envname("WIGNERLAB_SEED");
        sub->add_option("--tol", config.tolerance, "Decision tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", opts.format, "Output format: text, json or csv");
        sub->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
    };

    CLI::App* wf = app.add_subcommand("wf", "Print the Wigner grid of a state");
    add_common(wf, true);

    CLI::App* criteria = app.add_subcommand("criteria", "Run every separability criterion on a state");
    add_common(criteria, true);

    CLI::App* witness = app.add_subcommand("witness", "Overlap of the partially transposed state with witnesses");
    add_common(witness, true);
    witness->add_option("--witnesses", opts.witnesses_arg, "JSON array of witness states (inline or file)");
    witness->add_option("--samples", config.samples, "Random witnesses to append to the Bell set")
        ->check(CLI::NonNegativeNumber);

    CLI::App* batch = app.add_subcommand("batch", "Seeded batch experiment over sampled states");
    add_common(batch, false);
    batch->add_option("--samples", config.samples, "Number of sampled states")->check(CLI::PositiveNumber);
    batch->add_option("--sampler", sampler, "pure, mixed, separable or werner-sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (batch->parsed()) {
            if (!batch->count("--samples")) config.samples = 1000;
            if (!batch->count("--format")) opts.format = "csv";
            if (sampler == "pure") config.sampler = SamplerKind::pure;
            else if (sampler == "mixed") config.sampler = SamplerKind::mixed;
            else if (sampler == "separable") config.sampler = SamplerKind::separable;
            else if (sampler == "werner-sweep") config.sampler = SamplerKind::werner_sweep;
            else throw std::invalid_argument("sampler: expected pure, mixed, separable or werner-sweep");
        }
        if (witness->parsed() && !witness->count("--samples")) config.samples = 16;
        finalize(config, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!opts.out_path.empty()) {
        file_out.open(opts.out_path);
        if (!file_out) {
            std::cerr << "error: cannot open output file \"" << opts.out_path << "\"\n";
            return 1;
        }
        out = &file_out;
    }

    if (wf->parsed()) return wignerlab::cmd_wf(config, *out, std::cerr);
    if (criteria->parsed()) return wignerlab::cmd_criteria(config, *out, std::cerr);
    if (witness->parsed()) return wignerlab::cmd_witness(config, *out, std::cerr);
    if (batch->parsed()) return wignerlab::cmd_batch(config, *out, std::cerr);
    return 1;
}
