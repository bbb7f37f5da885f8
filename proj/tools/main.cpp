// Command-line front end: evolve/check/fuzz/spectrum over the qdyn library.
//
// Exit codes: 0 ok; 1 bad arguments; 2 malformed or unsupported input file;
// 3 numerical failure; 4 residual check failed.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdyn/complementarity.hpp"
#include "qdyn/dynamics.hpp"
#include "qdyn/infomeasure.hpp"
#include "qdyn/qstate.hpp"
#include "qdyn/tangle.hpp"

namespace {

// Numeric text policy: 12 significant digits, fixed-point at or above 1e-4
// in magnitude (and for exact zero), scientific below; residual-type values
// are always scientific so near-zero columns stay aligned.
std::string format_value(double x) {
    if (x == 0.0) return "0.00000000000";
    const double ax = std::abs(x);
    char buf[64];
    if (ax < 1e-4) {
        std::snprintf(buf, sizeof buf, "%.11e", x);
        return buf;
    }
    const int lead = static_cast<int>(std::floor(std::log10(ax)));
    int decimals = std::max(0, 11 - lead);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    // Rounding can push into the next decade (0.99999... -> 1.0...); trim one
    // decimal so the digit count stays at 12.
    const double back = std::abs(std::strtod(buf, nullptr));
    if (back > 0.0 && static_cast<int>(std::floor(std::log10(back))) > lead && decimals > 0)
        std::snprintf(buf, sizeof buf, "%.*f", decimals - 1, x);
    return buf;
}

std::string format_residual(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

double parse_strict_double(const std::string& text) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in number: " + text);
    return v;
}

// Accepts "p/q" rationals as well as plain decimals; value must land in [0,1].
double parse_alpha_sq(const std::string& text) {
    double value = 0.0;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double p = parse_strict_double(text.substr(0, slash));
        const double q = parse_strict_double(text.substr(slash + 1));
        if (q == 0.0) throw std::invalid_argument("zero denominator in --alpha-sq");
        value = p / q;
    } else {
        value = parse_strict_double(text);
    }
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("--alpha-sq must lie in [0, 1]");
    return value;
}

qdyn::TimeGrid parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("--grid expects start:end:samples");
    const double start = parse_strict_double(text.substr(0, first));
    const double end = parse_strict_double(text.substr(first + 1, second - first - 1));
    std::size_t pos = 0;
    const std::string tail = text.substr(second + 1);
    const long samples = std::stol(tail, &pos);
    if (pos != tail.size()) throw std::invalid_argument("--grid sample count must be an integer");
    return qdyn::TimeGrid(start, end, static_cast<int>(samples));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

struct CouplingCli {
    std::string preset = "ising";
    double c = 1.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    CLI::Option* c_opt = nullptr;
    CLI::Option* c1_opt = nullptr;
    CLI::Option* c2_opt = nullptr;
    CLI::Option* c3_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "Coupling preset: ising, xy, or custom")
            ->check(CLI::IsMember({"ising", "xy", "custom"}))
            ->capture_default_str();
        c_opt = cmd->add_option("--c", c, "Coupling strength for the ising/xy presets")
                    ->capture_default_str();
        c1_opt = cmd->add_option("--c1", c1, "sx-sx coupling (custom preset)");
        c2_opt = cmd->add_option("--c2", c2, "sy-sy coupling (custom preset)");
        c3_opt = cmd->add_option("--c3", c3, "sz-sz coupling (custom preset)");
    }

    qdyn::CouplingParams resolve() const {
        const bool has_custom = c1_opt->count() || c2_opt->count() || c3_opt->count();
        if (preset == "custom") {
            if (c_opt->count())
                throw std::invalid_argument("--c applies to the ising/xy presets; use --c1/--c2/--c3");
            return {c1, c2, c3};
        }
        if (has_custom)
            throw std::invalid_argument("--c1/--c2/--c3 apply to the custom preset only");
        return preset == "ising" ? qdyn::CouplingParams::ising(c) : qdyn::CouplingParams::xy(c);
    }
};

std::string csv_header(int qubits) {
    return qubits == 2 ? "t,I1,I2,I_total,tau12,E,residual"
                       : "t,I1,I2,I3,I_total,tau12,tau13,tau23,tau123,E,residual";
}

std::vector<std::pair<std::string, std::string>> record_fields(const qdyn::TimeSeriesRecord& rec,
                                                               int qubits) {
    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("t", format_value(rec.t));
    for (int q = 0; q < qubits; ++q)
        fields.emplace_back("I" + std::to_string(q + 1), format_value(rec.info.per_qubit[q]));
    fields.emplace_back("I_total", format_value(rec.info.total));
    for (const auto& [pair, tau] : rec.tangles.tau_pairs)
        fields.emplace_back("tau" + std::to_string(pair.first) + std::to_string(pair.second),
                            format_value(tau));
    if (rec.tangles.tau_123) fields.emplace_back("tau123", format_value(*rec.tangles.tau_123));
    fields.emplace_back("E", format_value(rec.tangles.aggregate));
    fields.emplace_back("residual", format_residual(rec.residual));
    return fields;
}

std::string render_series(const std::vector<qdyn::TimeSeriesRecord>& records, int qubits,
                          const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        out << csv_header(qubits) << '\n';
        for (const auto& rec : records) {
            const auto fields = record_fields(rec, qubits);
            for (std::size_t i = 0; i < fields.size(); ++i)
                out << (i ? "," : "") << fields[i].second;
            out << '\n';
        }
        return out.str();
    }
    out << "[\n";
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto fields = record_fields(records[r], qubits);
        out << "  {";
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? ", " : "") << '"' << fields[i].first << "\": " << fields[i].second;
        out << (r + 1 < records.size() ? "},\n" : "}\n");
    }
    out << "]\n";
    return out.str();
}

std::string render_pairs(const std::vector<std::pair<std::string, std::string>>& fields,
                         const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        out << "quantity,value\n";
        for (const auto& [key, value] : fields) out << key << ',' << value << '\n';
        return out.str();
    }
    out << "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
        out << "  \"" << fields[i].first << "\": " << fields[i].second
            << (i + 1 < fields.size() ? ",\n" : "\n");
    out << "}\n";
    return out.str();
}

int run_evolve(int qubits, const qdyn::PureState& psi0, const qdyn::CouplingParams& coupling,
               const qdyn::TimeGrid& grid, const std::string& format, const std::string& out) {
    const qdyn::ComplexMatrix h =
        qubits == 2 ? qdyn::hamiltonian_2q(coupling) : qdyn::hamiltonian_3q(coupling);
    const auto records = qdyn::trajectory(h, psi0, grid);
    write_output(render_series(records, qubits, format), out);
    return 0;
}

int run_check(const qdyn::PureState& state, const std::string& format, const std::string& out) {
    const auto info = qdyn::total_local_info(state, qdyn::LocalInfoMeasure::fidelity);
    const auto tangles = qdyn::aggregate_tangles(state);
    const auto report = qdyn::residual_pure(state);

    std::vector<std::pair<std::string, std::string>> fields;
    for (int q = 0; q < state.qubits(); ++q)
        fields.emplace_back("I" + std::to_string(q + 1), format_value(info.per_qubit[q]));
    fields.emplace_back("I_total", format_value(info.total));
    for (const auto& [pair, tau] : tangles.tau_pairs)
        fields.emplace_back("tau" + std::to_string(pair.first) + std::to_string(pair.second),
                            format_value(tau));
    if (tangles.tau_123) fields.emplace_back("tau123", format_value(*tangles.tau_123));
    fields.emplace_back("E", format_value(tangles.aggregate));
    fields.emplace_back("lhs", format_value(report.lhs));
    fields.emplace_back("residual", format_residual(report.residual));
    for (std::size_t q = 0; q < report.per_qubit_residuals.size(); ++q)
        fields.emplace_back("residual_q" + std::to_string(q + 1),
                            format_residual(report.per_qubit_residuals[q]));

    write_output(render_pairs(fields, format), out);
    return std::abs(report.residual) <= qdyn::kResidualTolerance ? 0 : 4;
}

int run_fuzz(int qubits, long trials, std::uint64_t seed, const std::string& format,
             const std::string& out) {
    double worst = -1.0;
    std::uint64_t worst_seed = seed;
    for (long i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
        const auto state = qdyn::haar_random_state(qubits, trial_seed);
        const double r = std::abs(qdyn::residual_pure(state).residual);
        if (r > worst) {
            worst = r;
            worst_seed = trial_seed;
        }
    }
    const bool pass = worst <= qdyn::kResidualTolerance;

    std::ostringstream body;
    if (format == "csv") {
        body << "trials,max_abs_residual,worst_seed,pass\n"
             << trials << ',' << format_residual(worst) << ',' << worst_seed << ','
             << (pass ? "true" : "false") << '\n';
    } else {
        body << "{\n  \"trials\": " << trials
             << ",\n  \"max_abs_residual\": " << format_residual(worst)
             << ",\n  \"worst_seed\": " << worst_seed
             << ",\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    }
    write_output(body.str(), out);
    return pass ? 0 : 4;
}

int run_spectrum(int qubits, const qdyn::CouplingParams& coupling, const std::string& format,
                 const std::string& out) {
    const qdyn::ComplexMatrix h =
        qubits == 2 ? qdyn::hamiltonian_2q(coupling) : qdyn::hamiltonian_3q(coupling);
    const auto eig = qdyn::hermitian_eig(h);
    std::ostringstream body;
    if (format == "json") {
        body << "[\n";
        for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
            body << "  " << format_value(eig.eigenvalues[k])
                 << (k + 1 < eig.eigenvalues.size() ? ",\n" : "\n");
        body << "]\n";
    } else {
        for (double e : eig.eigenvalues) body << format_value(e) << '\n';
    }
    write_output(body.str(), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information dynamics in small isolated qubit systems"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "Output file (default: standard output)");
    };

    // evolve
    auto* evolve = app.add_subcommand("evolve", "Evolve an initial state and emit a time series");
    int ev_qubits = 0;
    std::string ev_alpha_sq = "1/3";
    std::string ev_state_path;
    std::string ev_grid = "0:6.283185307:401";
    CouplingCli ev_coupling;
    auto* ev_qubits_opt =
        evolve->add_option("--qubits", ev_qubits, "System size: 2 or 3")->check(CLI::IsMember({2, 3}));
    auto* ev_alpha_opt = evolve->add_option(
        "--alpha-sq", ev_alpha_sq,
        "|alpha|^2 of the first qubit as a rational (e.g. 1/3) or decimal; the rest start in |0>");
    evolve->add_option("--state", ev_state_path, "State file supplying the initial state");
    evolve->add_option("--grid", ev_grid, "Time grid as start:end:samples")->capture_default_str();
    ev_coupling.attach(evolve);
    add_io(evolve);

    // check
    auto* check = app.add_subcommand("check", "Verify the complementarity identity for a state file");
    std::string ck_state_path;
    check->add_option("--state", ck_state_path, "State file to check")->required();
    add_io(check);

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "Scan random pure states for identity violations");
    int fz_qubits = 0;
    long fz_trials = 0;
    std::uint64_t fz_seed = 42;
    fuzz->add_option("--qubits", fz_qubits, "System size: 2 or 3")
        ->check(CLI::IsMember({2, 3}))
        ->required();
    fuzz->add_option("--trials", fz_trials, "Number of random states")
        ->check(CLI::PositiveNumber)
        ->required();
    fuzz->add_option("--seed", fz_seed, "Base seed; trial i uses seed + i")->capture_default_str();
    add_io(fuzz);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Print Hamiltonian eigenvalues, ascending");
    int sp_qubits = 0;
    CouplingCli sp_coupling;
    spectrum->add_option("--qubits", sp_qubits, "System size: 2 or 3")
        ->check(CLI::IsMember({2, 3}))
        ->required();
    sp_coupling.attach(spectrum);
    add_io(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (evolve->parsed()) {
            qdyn::CouplingParams coupling = ev_coupling.resolve();
            int qubits = ev_qubits;
            if (!ev_state_path.empty()) {
                if (ev_alpha_opt->count())
                    throw std::invalid_argument("--state and --alpha-sq are mutually exclusive");
                qdyn::PureState psi0 = qdyn::load_state_file(ev_state_path);
                if (ev_qubits_opt->count() && ev_qubits != psi0.qubits())
                    throw std::invalid_argument("--qubits disagrees with the state file");
                qubits = psi0.qubits();
                if (qubits != 2 && qubits != 3)
                    throw qdyn::MalformedState("state file must hold 2 or 3 qubits");
                return run_evolve(qubits, psi0, coupling, parse_grid(ev_grid), format, out_path);
            }
            if (!ev_qubits_opt->count())
                throw std::invalid_argument("either --qubits or --state is required");
            const double alpha_sq = parse_alpha_sq(ev_alpha_sq);
            const qdyn::PureState psi0 = qdyn::product_state(
                {std::sqrt(alpha_sq), std::sqrt(1.0 - alpha_sq), qubits - 1});
            return run_evolve(qubits, psi0, coupling, parse_grid(ev_grid), format, out_path);
        }
        if (check->parsed()) {
            const qdyn::PureState state = qdyn::load_state_file(ck_state_path);
            if (state.qubits() != 2 && state.qubits() != 3)
                throw qdyn::MalformedState("state file must hold 2 or 3 qubits");
            return run_check(state, format, out_path);
        }
        if (fuzz->parsed()) return run_fuzz(fz_qubits, fz_trials, fz_seed, format, out_path);
        if (spectrum->parsed())
            return run_spectrum(sp_qubits, sp_coupling.resolve(), format, out_path);
    } catch (const qdyn::MalformedState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qdyn::NotNormalized& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qdyn::UnsupportedSize& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qdyn::Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
