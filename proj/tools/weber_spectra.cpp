// weber-spectra: command-line front end for the Weber hydrogen toolkit.
//
// Exit codes: 0 success, 1 computational error, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "output.hpp"
#include "weber/actions.hpp"
#include "weber/delay.hpp"
#include "weber/dynamics.hpp"
#include "weber/error.hpp"
#include "weber/hamiltonian.hpp"
#include "weber/spectrum.hpp"

namespace {

using weber::cli::CsvWriter;
using weber::cli::Json;
using weber::cli::json_number;

constexpr double kCodataAlpha = 0.0072973525693;
constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    double alpha = kCodataAlpha;
    std::string format = "csv";
    std::string out;
    int precision = 15;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_format = true) {
    cmd->add_option("--alpha", cfg.alpha, "fine-structure constant (atomic units, c = 1/alpha)")
        ->check(CLI::Range(0.0, 0.2));
    if (with_format) {
        cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    }
    cmd->add_option("--out", cfg.out, "output file (default: stdout)");
    cmd->add_option("--precision", cfg.precision, "significant digits in output")->check(CLI::Range(6, 17));
}

// Writes `text` to the configured path or stdout.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

unsigned thread_cap() {
    const char* env = std::getenv("WEBER_SPECTRA_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    RunConfig cfg;
    int n_max = 5;
    double tol = weber::kDefaultSpectrumTol;
};

int run_spectrum(const SpectrumArgs& a) {
    const auto rows = weber::spectrum_table(a.n_max, a.cfg.alpha, a.tol, thread_cap());
    const int p = a.cfg.precision;
    bool failed = false;
    std::ostringstream os;
    if (a.cfg.format == "csv") {
        CsvWriter csv(os, p);
        csv.comment("weber-spectra spectrum v1");
        csv.header({"n", "l", "n_r", "E_coulomb", "E_weber_2nd", "E_sommerfeld_2nd", "E_exact", "residual",
                    "weber_minus_sommerfeld", "status"});
        for (const auto& row : rows) {
            csv.field(static_cast<long>(row.qn.n()))
                .field(static_cast<long>(row.qn.ell))
                .field(static_cast<long>(row.qn.n_r))
                .field(row.e_coulomb)
                .field(row.e_weber_2nd)
                .field(row.e_sommerfeld_2nd)
                .field(row.e_exact)
                .field(row.residual)
                .field(row.weber_minus_sommerfeld)
                .field(row.error ? "error: " + *row.error : std::string("ok"));
            csv.end_row();
            failed = failed || row.error.has_value();
        }
    } else {
        Json doc;
        doc["schema"] = "weber-spectra/spectrum/1";
        doc["alpha"] = json_number(a.cfg.alpha, p);
        doc["tol"] = json_number(a.tol, p);
        doc["rows"] = Json::array();
        for (const auto& row : rows) {
            Json r;
            r["n"] = row.qn.n();
            r["l"] = row.qn.ell;
            r["n_r"] = row.qn.n_r;
            r["E_coulomb"] = json_number(row.e_coulomb, p);
            r["E_weber_2nd"] = json_number(row.e_weber_2nd, p);
            r["E_sommerfeld_2nd"] = json_number(row.e_sommerfeld_2nd, p);
            r["E_exact"] = json_number(row.e_exact, p);
            r["residual"] = json_number(row.residual, p);
            r["weber_minus_sommerfeld"] = json_number(row.weber_minus_sommerfeld, p);
            r["error"] = row.error ? Json(*row.error) : Json(nullptr);
            doc["rows"].push_back(r);
            failed = failed || row.error.has_value();
        }
        os << dump(doc);
    }
    emit(a.cfg.out, os.str());
    return failed ? kExitCompute : kExitOk;
}

// ---------------------------------------------------------------- action

struct ActionArgs {
    RunConfig cfg;
    double energy = 0.0;
    double ell = 1.0;
    std::string method = "all";
    double tol = weber::kDefaultActionTol;
};

int run_action(const ActionArgs& a) {
    const int p = a.cfg.precision;
    std::vector<std::pair<std::string, weber::ActionResult>> results;
    const bool all = a.method == "all";
    if (all || a.method == "quad") {
        results.emplace_back("quadrature", weber::radial_action_quadrature(a.energy, a.ell, a.cfg.alpha, a.tol));
    }
    if (all || a.method == "closed") {
        results.emplace_back("closed_form", weber::radial_action_closed_form(a.energy, a.ell, a.cfg.alpha));
    }
    if (all || a.method == "expanded") {
        results.emplace_back("expanded", weber::radial_action_expanded(a.energy, a.ell, a.cfg.alpha));
    }
    std::ostringstream os;
    if (a.cfg.format == "csv") {
        CsvWriter csv(os, p);
        csv.comment("weber-spectra action v1");
        csv.header({"method", "n_r", "est_error"});
        for (const auto& [name, r] : results) {
            csv.field(name).field(r.value).field(r.est_error);
            csv.end_row();
        }
    } else {
        Json doc;
        doc["schema"] = "weber-spectra/action/1";
        doc["energy"] = json_number(a.energy, p);
        doc["l"] = json_number(a.ell, p);
        doc["alpha"] = json_number(a.cfg.alpha, p);
        Json methods = Json::object();
        for (const auto& [name, r] : results) {
            methods[name] = {{"n_r", json_number(r.value, p)}, {"est_error", json_number(r.est_error, p)}};
        }
        doc["methods"] = methods;
        Json diffs = Json::object();
        for (std::size_t i = 0; i < results.size(); ++i) {
            for (std::size_t j = i + 1; j < results.size(); ++j) {
                diffs[results[i].first + "_minus_" + results[j].first] =
                    json_number(results[i].second.value - results[j].second.value, p);
            }
        }
        doc["differences"] = diffs;
        os << dump(doc);
    }
    emit(a.cfg.out, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------- orbit

struct OrbitArgs {
    RunConfig cfg;
    double energy = 0.0;
    double ell = 1.0;
    double periods = 3.0;
    double step = 1e-3;
    std::string scheme = "gl4";
    std::size_t stride = 1;
    std::string summary;
    double closure_tol = 1e-6;
    bool shape_fit = false;
};

int run_orbit(const OrbitArgs& a) {
    const int p = a.cfg.precision;
    const double alpha = a.cfg.alpha;
    const weber::TurningPoints tp = weber::turning_points(a.energy, a.ell, alpha);
    const double period = weber::radial_period(a.energy, a.ell, alpha);
    const double apsidal = weber::apsidal_angle(a.energy, a.ell, alpha);

    weber::IntegratorConfig config;
    config.step = a.step;
    config.scheme = a.scheme == "midpoint" ? weber::Scheme::ImplicitMidpoint : weber::Scheme::GaussLegendre4;
    config.record_stride = a.stride;

    const weber::ModelParams params = weber::electron_proton(alpha);
    const weber::PhaseState start{0.0, tp.r_min, 0.0, 0.0, a.ell};
    // A small margin past the last periproton so that it is detected.
    const weber::OrbitTrace trace = weber::integrate(start, params, (a.periods + 0.05) * period, config);

    Json summary;
    summary["schema"] = "weber-spectra/orbit-summary/1";
    summary["energy"] = json_number(a.energy, p);
    summary["l"] = json_number(a.ell, p);
    summary["alpha"] = json_number(alpha, p);
    summary["step"] = json_number(a.step, p);
    summary["scheme"] = a.scheme;
    summary["r_min"] = json_number(tp.r_min, p);
    summary["r_max"] = json_number(tp.r_max, p);
    summary["radial_period"] = json_number(period, p);
    summary["apsidal_angle"] = json_number(apsidal, p);
    summary["quadrature_shift"] = json_number(apsidal - 2.0 * std::numbers::pi, p);

    double shift = apsidal - 2.0 * std::numbers::pi;
    try {
        const weber::ShiftMeasurement m = weber::measure_periproton_shift(trace);
        shift = m.mean;
        summary["measured_shift"] = json_number(m.mean, p);
        summary["measured_shift_stddev"] = json_number(m.stddev, p);
        summary["periods_measured"] = m.periods;
        summary["shift_difference"] = json_number(m.mean - (apsidal - 2.0 * std::numbers::pi), p);
    } catch (const weber::Error&) {
        summary["measured_shift"] = nullptr;
        summary["measured_shift_stddev"] = nullptr;
        summary["periods_measured"] = 0;
        summary["shift_difference"] = nullptr;
    }
    summary["apsides"] = trace.apsides.size();
    summary["energy_drift"] = json_number(trace.energy_drift, p);
    summary["relative_energy_drift"] = json_number(trace.energy_drift / std::abs(a.energy), p);
    const weber::Closure closure = weber::rosette_closure(shift, a.closure_tol);
    summary["closure"] = closure.periodic
                             ? Json{{"kind", "periodic"}, {"p", closure.p}, {"q", closure.q}}
                             : Json{{"kind", "quasiperiodic"}, {"p", nullptr}, {"q", nullptr}};
    if (a.shape_fit) {
        const weber::RosetteShape shape = weber::fit_rosette_shape(trace, 2.0 * std::numbers::pi / apsidal);
        summary["shape_fit"] = {{"scale", json_number(shape.scale, p)},
                                {"kappa", json_number(shape.kappa, p)},
                                {"gamma", json_number(shape.gamma, p)},
                                {"phase", json_number(shape.phase, p)},
                                {"rms", json_number(shape.rms, p)}};
    }

    if (!a.cfg.out.empty()) {
        std::ostringstream os;
        CsvWriter csv(os, p);
        csv.comment("weber-spectra orbit-trace v1");
        csv.header({"t", "r", "phi", "p_r", "p_phi", "energy"});
        for (const auto& s : trace.states) {
            csv.field(s.t).field(s.r).field(s.phi).field(s.p_r).field(s.p_phi).field(weber::eval_hamiltonian(s, params));
            csv.end_row();
        }
        emit(a.cfg.out, os.str());
    }
    emit(a.summary, dump(summary));
    return kExitOk;
}

// ---------------------------------------------------------------- delay-check

struct DelayArgs {
    RunConfig cfg;
    std::size_t corpus_size = 10;
    std::size_t samples = 1024;
    std::uint64_t seed = 42;
    double h = 1e-3;
    bool constant_loop = false;
    std::vector<std::string> loop_files;
};

struct CorpusLoop {
    std::string source;  // "random", "constant" or a file name
    long degree;         // trigonometric degree, -1 for sampled files
    weber::LoopSamples samples;
};

// One column of samples; blank lines, '#' comments and a non-numeric header are skipped.
weber::LoopSamples read_loop_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open loop file " + path);
    weber::LoopSamples s;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const std::string cell = line.substr(begin, line.find_first_of(",\r", begin) - begin);
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str()) {
            if (first) {
                first = false;
                continue;
            }
            throw std::runtime_error("non-numeric sample '" + cell + "' in " + path);
        }
        first = false;
        s.values.push_back(v);
    }
    return s;
}

constexpr double kS1Threshold = 1e-7;
constexpr double kS2Threshold = 1e-5;
constexpr double kRatioLo = 6.0;
constexpr double kRatioHi = 10.0;

Json truncation_ratios(const std::vector<double>& errors, int precision) {
    Json ratios = Json::array();
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k] == 0.0 && errors[k + 1] == 0.0) {
            ratios.push_back(nullptr);  // no truncation error at all (constant loop)
        } else {
            ratios.push_back(json_number(errors[k] / errors[k + 1], precision));
        }
    }
    return ratios;
}

int run_delay(const DelayArgs& a) {
    const int p = a.cfg.precision;
    const std::vector<double> alphas{0.04, 0.02, 0.01};

    std::vector<CorpusLoop> loops;
    for (const weber::TrigLoop& t : weber::random_loop_corpus(a.corpus_size, a.seed)) {
        loops.push_back({"random", static_cast<long>(t.cos_coeffs.size()), t.sample(a.samples)});
    }
    if (a.constant_loop) {
        weber::TrigLoop constant;
        constant.c0 = 2.0;
        loops.front() = {"constant", 0, constant.sample(a.samples)};
    }
    for (const std::string& path : a.loop_files) loops.push_back({path, -1, read_loop_csv(path)});

    Json doc;
    doc["schema"] = "weber-spectra/delay-check/1";
    doc["seed"] = a.seed;
    doc["samples"] = a.samples;
    doc["h"] = json_number(a.h, p);
    doc["alpha"] = json_number(a.cfg.alpha, p);
    doc["thresholds"] = {{"s1_abs", kS1Threshold}, {"s2_abs_diff", kS2Threshold}, {"ratio_lo", kRatioLo},
                         {"ratio_hi", kRatioHi}};
    Json per_loop = Json::array();
    double max_s1 = 0.0, max_s2_diff = 0.0;
    bool all_pass = true;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const weber::PeriodicLoop loop(loops[i].samples);
        const double s0 = weber::taylor_coefficient_analytic(loop, 0);
        const double s1 = weber::taylor_coefficient_numeric(loop, 1, a.h);
        const double s2n = weber::taylor_coefficient_numeric(loop, 2, a.h);
        const double s2a = weber::taylor_coefficient_analytic(loop, 2);
        std::vector<double> errors;
        for (double al : alphas) errors.push_back(weber::truncation_error(loop, al));
        // Per-loop ratios are informative only: a random loop can have a tiny S^3,
        // and then the a^4 term dominates at these alphas.
        const Json ratios = truncation_ratios(errors, p);
        const bool s1_ok = std::abs(s1) < kS1Threshold;
        const bool s2_ok = std::abs(s2n - s2a) < kS2Threshold;
        max_s1 = std::max(max_s1, std::abs(s1));
        max_s2_diff = std::max(max_s2_diff, std::abs(s2n - s2a));
        all_pass = all_pass && s1_ok && s2_ok;

        Json entry;
        entry["index"] = i;
        entry["source"] = loops[i].source;
        entry["samples"] = loops[i].samples.size();
        entry["degree"] = loops[i].degree >= 0 ? Json(loops[i].degree) : Json(nullptr);
        entry["s0"] = json_number(s0, p);
        entry["s1_numeric"] = json_number(s1, p);
        entry["s2_numeric"] = json_number(s2n, p);
        entry["s2_analytic"] = json_number(s2a, p);
        entry["neumann_action"] = json_number(weber::neumann_action(loop, a.cfg.alpha), p);
        entry["retarded_action"] =
            json_number(weber::retarded_action(loop, weber::DelayParams::from_alpha(a.cfg.alpha).a), p);
        Json errs = Json::array();
        for (double e : errors) errs.push_back(json_number(e, p));
        entry["truncation_alphas"] = alphas;
        entry["truncation_errors"] = errs;
        entry["truncation_ratios"] = ratios;
        entry["pass"] = s1_ok && s2_ok;
        per_loop.push_back(entry);
    }
    doc["loops"] = per_loop;

    // Truncation order is judged on a fixed asymmetric loop with a non-zero S^3.
    const weber::PeriodicLoop reference(weber::order_reference_loop().sample(a.samples));
    std::vector<double> ref_errors;
    for (double al : alphas) ref_errors.push_back(weber::truncation_error(reference, al));
    bool order_ok = true;
    for (std::size_t k = 0; k + 1 < ref_errors.size(); ++k) {
        const double ratio = ref_errors[k] / ref_errors[k + 1];
        order_ok = order_ok && ratio >= kRatioLo && ratio <= kRatioHi;
    }
    Json order;
    order["loop"] = "2 + cos(2 pi t) + 0.3 sin(4 pi t)";
    order["alphas"] = alphas;
    Json ref_errs = Json::array();
    for (double e : ref_errors) ref_errs.push_back(json_number(e, p));
    order["errors"] = ref_errs;
    order["ratios"] = truncation_ratios(ref_errors, p);
    order["pass"] = order_ok;
    doc["truncation_order"] = order;
    all_pass = all_pass && order_ok;

    doc["max_abs_s1"] = json_number(max_s1, p);
    doc["max_abs_s2_diff"] = json_number(max_s2_diff, p);
    doc["all_pass"] = all_pass;
    emit(a.cfg.out, dump(doc));
    return all_pass ? kExitOk : kExitCompute;
}

// ---------------------------------------------------------------- pp

struct PpArgs {
    RunConfig cfg;
    double r0 = 0.0;
    double p_r = 0.0;
    double p_phi = 0.0;
    double duration = 1e-4;
    double step = 1e-7;
};

std::string signature_name(weber::Signature s) {
    switch (s) {
        case weber::Signature::Riemannian: return "riemannian";
        case weber::Signature::Minkowski: return "minkowski";
        case weber::Signature::Degenerate: return "degenerate";
    }
    return "unknown";
}

int run_pp(const PpArgs& a) {
    const int p = a.cfg.precision;
    weber::IntegratorConfig config;
    config.step = a.step;
    const weber::PhaseState start{0.0, a.r0, 0.0, a.p_r, a.p_phi};
    const weber::ProtonProtonReport rep = weber::pp_probe(start, a.cfg.alpha, a.duration, config);

    Json doc;
    doc["schema"] = "weber-spectra/pp/1";
    doc["alpha"] = json_number(a.cfg.alpha, p);
    doc["critical_radius"] = json_number(rep.critical_radius, p);
    doc["r0"] = json_number(a.r0, p);
    doc["signature"] = signature_name(rep.initial_signature);
    doc["initial_acceleration"] = json_number(rep.initial_acceleration, p);
    doc["force"] = rep.initial_acceleration > 0.0   ? "repulsive"
                   : rep.initial_acceleration < 0.0 ? "attractive"
                                                    : "neutral";
    doc["separation_grew"] = rep.separation_grew;
    const weber::PhaseState& last = rep.trace.states.back();
    doc["final"] = {{"t", json_number(last.t, p)}, {"r", json_number(last.r, p)}, {"p_r", json_number(last.p_r, p)}};
    if (rep.stop) {
        doc["stop"] = {{"kind", std::string(weber::to_string(rep.stop->kind()))},
                       {"message", rep.stop->what()},
                       {"time", rep.stop->value() ? json_number(*rep.stop->value(), p) : Json(nullptr)}};
    } else {
        doc["stop"] = nullptr;
    }
    emit(a.cfg.out, dump(doc));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weber hydrogen toolkit: fine-structure levels, rosette orbits, retarded-potential checks"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* spec_cmd = app.add_subcommand("spectrum", "energy levels by all methods for n <= n-max");
    spec_cmd->add_option("--n-max", spectrum.n_max, "largest main quantum number")
        ->check(CLI::Range(1, weber::kMaxSpectrumN));
    spec_cmd->add_option("--tol", spectrum.tol, "quantization residual tolerance")->check(CLI::PositiveNumber);
    add_common(spec_cmd, spectrum.cfg);

    OrbitArgs orbit;
    auto* orbit_cmd = app.add_subcommand("orbit", "integrate a rosette and measure its periproton shift");
    orbit_cmd->add_option("--energy", orbit.energy, "orbit energy (negative)")->required();
    orbit_cmd->add_option("--l", orbit.ell, "angular momentum p_phi")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--periods", orbit.periods, "radial periods to integrate")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--step", orbit.step, "time step")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--scheme", orbit.scheme, "integrator")->check(CLI::IsMember({"gl4", "midpoint"}));
    orbit_cmd->add_option("--stride", orbit.stride, "keep every k-th state in the trace")
        ->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--summary", orbit.summary, "summary JSON file (default: stdout)");
    orbit_cmd->add_option("--closure-tol", orbit.closure_tol, "tolerance (rad) for rational closure")
        ->check(CLI::PositiveNumber);
    orbit_cmd->add_flag("--shape-fit", orbit.shape_fit, "fit R / r = 1 + kappa cos(gamma phi - phase) to the trace");
    add_common(orbit_cmd, orbit.cfg, false);
    orbit_cmd->get_option("--out")->description("trace CSV file (omitted: no trace written)");

    ActionArgs action;
    auto* action_cmd = app.add_subcommand("action", "radial action n_r by quadrature and closed form");
    action_cmd->add_option("--energy", action.energy, "energy (negative)")->required();
    action_cmd->add_option("--l", action.ell, "angular momentum")->check(CLI::PositiveNumber);
    action_cmd->add_option("--method", action.method, "method")
        ->check(CLI::IsMember({"all", "quad", "closed", "expanded"}));
    action_cmd->add_option("--tol", action.tol, "quadrature relative tolerance")->check(CLI::Range(1e-14, 1e-3));
    add_common(action_cmd, action.cfg);
    action.cfg.format = "json";

    DelayArgs delay;
    auto* delay_cmd = app.add_subcommand("delay-check", "retarded-potential Taylor checks on random loops");
    delay_cmd->add_option("--corpus-size", delay.corpus_size, "number of random loops")->check(CLI::Range(1, 1000));
    delay_cmd->add_option("--samples", delay.samples, "samples per loop (power of two >= 64)");
    delay_cmd->add_option("--seed", delay.seed, "corpus seed");
    delay_cmd->add_option("--fd-step", delay.h, "finite-difference spacing in a")->check(CLI::PositiveNumber);
    delay_cmd->add_flag("--constant-loop", delay.constant_loop, "replace the first loop with r = 2");
    delay_cmd->add_option("--loop-csv", delay.loop_files, "extra loop: one column of samples r(k/N)")
        ->check(CLI::ExistingFile);
    add_common(delay_cmd, delay.cfg, false);

    PpArgs pp;
    auto* pp_cmd = app.add_subcommand("pp", "proton-proton critical radius and force-sign probe");
    pp_cmd->add_option("--r0", pp.r0, "initial separation")->required()->check(CLI::PositiveNumber);
    pp_cmd->add_option("--p-r", pp.p_r, "initial radial momentum");
    pp_cmd->add_option("--p-phi", pp.p_phi, "angular momentum");
    pp_cmd->add_option("--duration", pp.duration, "integration time")->check(CLI::PositiveNumber);
    pp_cmd->add_option("--step", pp.step, "time step")->check(CLI::PositiveNumber);
    add_common(pp_cmd, pp.cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (delay_cmd->parsed() && (delay.samples < 64 || (delay.samples & (delay.samples - 1)) != 0)) {
        std::cerr << "--samples must be a power of two >= 64\n";
        return kExitUsage;
    }

    try {
        if (spec_cmd->parsed()) return run_spectrum(spectrum);
        if (orbit_cmd->parsed()) return run_orbit(orbit);
        if (action_cmd->parsed()) return run_action(action);
        if (delay_cmd->parsed()) return run_delay(delay);
        if (pp_cmd->parsed()) return run_pp(pp);
    } catch (const weber::Error& e) {
        std::cerr << "error (" << weber::to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitUsage;
}
