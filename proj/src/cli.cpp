#include "wignerlab/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wignerlab/criteria.hpp"
#include "wignerlab/states_json.hpp"

namespace wignerlab {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%10.6f", v);
    return buf;
}

const DensityMatrix require_state(const RunConfig& config) {
    if (!config.state) throw std::invalid_argument("state: missing --state argument");
    return to_density(*config.state);
}

json verdict_json(const Verdict& v) {
    json e = json::object();
    for (const auto& [k, val] : v.evidence) e[k] = val;
    return json{{"criterion", v.criterion},
                {"decision", to_string(v.decision)},
                {"evidence", e},
                {"tolerance", v.tolerance}};
}

void print_verdict_line(std::ostream& out, const Verdict& v) {
    out << std::left << std::setw(20) << v.criterion << std::setw(14) << to_string(v.decision)
        << "margin=" << fmt(v.evidence.at("margin")) << "  tol=" << fmt(v.tolerance) << "\n";
}

struct CriterionNames {
    static const std::vector<std::string>& all() {
        static const std::vector<std::string> names = {"negativity", "dual_nonnegativity", "lur_trace",
                                                       "lur_generalized", "gup_pt", "oracle"};
        return names;
    }
};

}  // namespace

const char* to_string(SamplerKind k) {
    switch (k) {
        case SamplerKind::pure: return "pure";
        case SamplerKind::mixed: return "mixed";
        case SamplerKind::separable: return "separable";
        case SamplerKind::werner_sweep: return "werner-sweep";
    }
    return "?";
}

std::string render_grid(const WignerGrid& w) {
    std::ostringstream os;
    if (w.n_qubits == 1) {
        os << " p\n";
        for (int p = 1; p >= 0; --p) {
            os << "  " << p << " |";
            for (int q = 0; q < 2; ++q) os << cell(w.values[2 * q + p]);
            os << "\n";
        }
        os << "    +--------------------\n";
        os << "          0         1    q\n";
        return os.str();
    }
    os << " (p1,p2)\n";
    static const int rows[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
    for (const auto& r : rows) {
        const int p1 = r[0], p2 = r[1];
        os << "   " << p1 << p2 << " |";
        for (int q1 = 0; q1 < 2; ++q1)
            for (int q2 = 0; q2 < 2; ++q2) os << cell(w.values[8 * q1 + 4 * q2 + 2 * p1 + p2]);
        os << "\n";
    }
    os << "      +----------------------------------------\n";
    os << "            00        01        10        11    (q1,q2)\n";
    return os.str();
}

int cmd_wf(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const DensityMatrix rho = require_state(config);
        const WignerGrid w = wigner_of(rho);
        const CharGrid chi = char_of(rho);
        if (config.format == OutputFormat::json) {
            json j{{"n_qubits", w.n_qubits},
                   {"wigner", w.values},
                   {"wigner_index", w.n_qubits == 1 ? "2*q+p" : "8*q1+4*q2+2*p1+p2"},
                   {"chi", chi.values},
                   {"chi_index", w.n_qubits == 1 ? "2*u+v" : "8*u1+4*u2+2*v1+v2"},
                   {"purity", purity(w)}};
            out << j.dump() << "\n";
        } else {
            out << render_grid(w);
            out << "purity: " << fmt(purity(w)) << "\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_criteria(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const DensityMatrix rho = require_state(config);
        const CriteriaRun run = run_all(rho, config.tolerance);
        if (config.format == OutputFormat::json) {
            json verdicts = json::array();
            for (const Verdict& v : run.verdicts) verdicts.push_back(verdict_json(v));
            out << json{{"verdicts", verdicts}, {"oracle", verdict_json(run.oracle)}}.dump() << "\n";
        } else {
            for (const Verdict& v : run.verdicts) print_verdict_line(out, v);
            print_verdict_line(out, run.oracle);
        }
        return 0;
    } catch (const ConsistencyError& e) {
        err << "consistency violation: " << e.what() << "\n";
        err << json{{"criterion", verdict_json(e.criterion_verdict())},
                    {"oracle", verdict_json(e.oracle_verdict())}}
                   .dump()
            << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const DensityMatrix rho = require_state(config);
        if (rho.dim() != 4) throw std::invalid_argument("witness: state must be a two-qubit state");
        const PtPair pair = wigner_pt(rho);

        std::vector<std::pair<std::string, WignerGrid>> grids;
        std::vector<std::string> warnings;
        if (config.witnesses.empty()) {
            grids.emplace_back("bell:phi_plus", wigner_of(bell(BellKind::phi_plus)));
            grids.emplace_back("bell:phi_minus", wigner_of(bell(BellKind::phi_minus)));
            grids.emplace_back("bell:psi_plus", wigner_of(bell(BellKind::psi_plus)));
            grids.emplace_back("bell:psi_minus", wigner_of(bell(BellKind::psi_minus)));
            Rng rng(config.seed);
            for (int i = 0; i < config.samples; ++i)
                grids.emplace_back("random:" + std::to_string(i), wigner_of(random_pure(rng, 4)));
        } else {
            for (std::size_t i = 0; i < config.witnesses.size(); ++i) {
                const std::string label = "user:" + std::to_string(i);
                try {
                    grids.emplace_back(label, wigner_of(to_density(config.witnesses[i])));
                } catch (const std::invalid_argument& e) {
                    warnings.push_back("witness " + label + " skipped (" + e.what() + ")");
                }
            }
        }

        int certifying = 0;
        json rows = json::array();
        std::ostringstream table;
        for (const auto& [label, grid] : grids) {
            const double overlap = witness_overlap(pair, grid);
            const bool certifies = overlap < -config.tolerance;
            certifying += certifies ? 1 : 0;
            if (config.format == OutputFormat::json) {
                rows.push_back(json{{"witness", label}, {"overlap", overlap}, {"certifies", certifies}});
            } else {
                table << std::left << std::setw(18) << label << std::setw(18) << fmt(overlap)
                      << (certifies ? "certifies" : "-") << "\n";
            }
        }
        if (config.format == OutputFormat::json) {
            out << json{{"overlaps", rows}, {"certifying", certifying}, {"warnings", warnings}}.dump() << "\n";
        } else {
            out << std::left << std::setw(18) << "witness" << std::setw(18) << "overlap" << "verdict\n";
            out << table.str();
            for (const std::string& wmsg : warnings) out << "warning: " << wmsg << "\n";
            out << "certifying witnesses: " << certifying << " of " << grids.size() << "\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

struct BatchRecord {
    int index;
    std::string param;
    double min_w, min_w_pt, oracle_min_eig, purity;
    std::vector<Decision> decisions;  // order of CriterionNames::all()
};

std::string csv_row(const BatchRecord& r, SamplerKind sampler) {
    std::ostringstream os;
    os << r.index << "," << to_string(sampler) << "," << r.param << "," << fmt(r.min_w) << ","
       << fmt(r.min_w_pt) << "," << fmt(r.oracle_min_eig) << "," << fmt(r.purity);
    for (Decision d : r.decisions) os << "," << to_string(d);
    return os.str();
}

}  // namespace

int cmd_batch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.samples < 1) throw std::invalid_argument("batch: samples must be >= 1");
        Rng rng(config.seed);

        std::vector<BatchRecord> records;
        std::map<std::string, std::map<Decision, int>> counts;
        double min_w_observed = 1.0;
        std::map<std::string, double> detection_onset;  // criterion -> first x with Entangled

        for (int i = 0; i < config.samples; ++i) {
            std::string param;
            std::optional<DensityMatrix> rho;
            double sweep_x = 0.0;
            switch (config.sampler) {
                case SamplerKind::pure:
                    param = "-";
                    rho = random_pure(rng, 4);
                    break;
                case SamplerKind::mixed: {
                    const int rank = 1 + rng.uniform_int(4);
                    param = "rank=" + std::to_string(rank);
                    rho = random_mixed(rng, 4, rank);
                    break;
                }
                case SamplerKind::separable: {
                    const int k = 1 + rng.uniform_int(16);
                    param = "k=" + std::to_string(k);
                    rho = random_separable(rng, k);
                    break;
                }
                case SamplerKind::werner_sweep: {
                    sweep_x = config.samples == 1 ? 0.0 : static_cast<double>(i) / (config.samples - 1);
                    param = "x=" + fmt(sweep_x);
                    rho = werner(sweep_x);
                    break;
                }
            }

            CriteriaRun run;
            try {
                run = run_all(*rho, config.tolerance);
            } catch (const ConsistencyError& e) {
                err << "consistency violation at sample " << i << " (" << param << "): " << e.what() << "\n";
                err << "state: " << density_to_spec_json(*rho).dump() << "\n";
                err << json{{"criterion", verdict_json(e.criterion_verdict())},
                            {"oracle", verdict_json(e.oracle_verdict())}}
                           .dump()
                    << "\n";
                return 2;
            }

            BatchRecord rec;
            rec.index = i;
            rec.param = param;
            const Verdict& dual = run.verdicts[1];
            rec.min_w = dual.evidence.at("min_w");
            rec.min_w_pt = dual.evidence.at("min_w_pt");
            rec.oracle_min_eig = run.oracle.evidence.at("min_eigenvalue");
            rec.purity = purity(wigner_of(*rho));
            for (const Verdict& v : run.verdicts) rec.decisions.push_back(v.decision);
            rec.decisions.push_back(run.oracle.decision);
            records.push_back(rec);

            min_w_observed = std::min(min_w_observed, rec.min_w);
            for (std::size_t c = 0; c < CriterionNames::all().size(); ++c) {
                counts[CriterionNames::all()[c]][rec.decisions[c]] += 1;
                if (config.sampler == SamplerKind::werner_sweep && rec.decisions[c] == Decision::entangled &&
                    detection_onset.find(CriterionNames::all()[c]) == detection_onset.end())
                    detection_onset[CriterionNames::all()[c]] = sweep_x;
            }
        }

        if (config.format == OutputFormat::json) {
            json recs = json::array();
            for (const BatchRecord& r : records) {
                json decisions = json::object();
                for (std::size_t c = 0; c < CriterionNames::all().size(); ++c)
                    decisions[CriterionNames::all()[c]] = to_string(r.decisions[c]);
                recs.push_back(json{{"index", r.index},
                                    {"sampler", to_string(config.sampler)},
                                    {"param", r.param},
                                    {"min_w", r.min_w},
                                    {"min_w_pt", r.min_w_pt},
                                    {"oracle_min_eig", r.oracle_min_eig},
                                    {"purity", r.purity},
                                    {"verdicts", decisions}});
            }
            json summary{{"samples", config.samples}, {"contradictions", 0}, {"min_w_observed", min_w_observed}};
            json per_criterion = json::object();
            for (const auto& [name, byd] : counts) {
                json c = json::object();
                for (const auto& [d, n] : byd) c[to_string(d)] = n;
                per_criterion[name] = c;
            }
            summary["verdict_counts"] = per_criterion;
            if (config.sampler == SamplerKind::werner_sweep) {
                json onset = json::object();
                for (const auto& [name, x] : detection_onset) onset[name] = x;
                summary["detection_onset"] = onset;
            }
            out << json{{"records", recs}, {"summary", summary}}.dump() << "\n";
            return 0;
        }

        out << "# wignerlab batch v1\n";
        out << "# sampler=" << to_string(config.sampler) << " samples=" << config.samples
            << " seed=" << config.seed << " tol=" << fmt(config.tolerance) << "\n";
        out << "index,sampler,param,min_w,min_w_pt,oracle_min_eig,purity";
        for (const std::string& name : CriterionNames::all()) out << "," << name;
        out << "\n";
        for (const BatchRecord& r : records) out << csv_row(r, config.sampler) << "\n";
        out << "# summary: samples=" << config.samples << " contradictions=0"
            << " min_w_observed=" << fmt(min_w_observed) << "\n";
        for (const std::string& name : CriterionNames::all()) {
            out << "# verdicts " << name << ":";
            for (Decision d : {Decision::entangled, Decision::separable, Decision::inconclusive})
                out << " " << to_string(d) << "=" << counts[name][d];
            out << "\n";
        }
        if (config.sampler == SamplerKind::werner_sweep) {
            for (const auto& [name, x] : detection_onset)
                out << "# detection_onset " << name << ": x=" << fmt(x) << "\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wignerlab
