#include "cca/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cca/bath.hpp"
#include "cca/core.hpp"
#include "cca/hamiltonian.hpp"
#include "cca/io.hpp"
#include "cca/overlap.hpp"
#include "cca/scattering.hpp"
#include "cca/transport.hpp"

namespace cca::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Array-parameter flags shared by the transport-side subcommands. Flags
// override config-file values; --alpha and --xi conflict.
struct ArrayOpts {
    std::string config;
    std::optional<int> n;
    std::optional<double> omega_c, alpha, xi, q, period;
};

void add_array_options(CLI::App* cmd, ArrayOpts& o) {
    cmd->add_option("--config", o.config, "key=value parameter file");
    cmd->add_option("--n", o.n, "number of cavities N");
    cmd->add_option("--omega-c", o.omega_c, "cavity frequency (default 1)");
    cmd->add_option("--alpha", o.alpha, "overlap integral alpha");
    cmd->add_option("--xi", o.xi, "hopping bandwidth xi = 2*alpha*omega_c");
    cmd->add_option("--q", o.q, "quality factor Q = 2*omega_c/gamma");
    cmd->add_option("--period", o.period, "array period L (default 1)");
}

ArrayParams resolve_params(const ArrayOpts& o) {
    if (o.alpha && o.xi)
        throw UsageError("--alpha and --xi are mutually exclusive");
    ConfigFile cfg;
    if (!o.config.empty()) {
        try {
            cfg = parse_config(o.config);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (o.n) cfg.n_cavities = o.n;
    if (o.omega_c) cfg.omega_c = o.omega_c;
    if (o.q) cfg.q_factor = o.q;
    if (o.period) cfg.period = o.period;
    if (o.alpha) {
        cfg.alpha = o.alpha;
        cfg.xi.reset();
    }
    if (o.xi) {
        cfg.xi = o.xi;
        cfg.alpha.reset();
    }
    try {
        return params_from_config(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file_atomic(out_path, content);
}

std::string param_label(const ArrayParams& p) {
    const DerivedRates r = derive_rates(p);
    return "N=" + io::format_sig(p.n_cavities) + "  Q=" + io::format_sig(p.q_factor) +
           "  xi=" + io::format_sig(r.xi);
}

void run_dispersion(const ArrayOpts& opts, const std::string& out) {
    const ArrayParams p = resolve_params(opts);
    const DerivedRates r = derive_rates(p);
    io::CsvBuilder csv({"n", "k_n_L", "omega_re", "omega_im"});
    for (const BandMode& m : hamiltonian::mode_wavevectors(p)) {
        // complex mode frequency omega_eff*(1 + 2 alpha cos kL)
        const double band = m.frequency / p.omega_c;
        csv.add_row_raw({std::to_string(m.index), io::format_sig(m.wavevector * p.period),
                         io::format_sig(m.frequency), io::format_sig(-r.gamma * band)});
    }
    emit(out, csv.str());
}

void run_spectrum(const ArrayOpts& opts, const std::string& kind, int points,
                  const std::string& out, const std::string& svg) {
    const ArrayParams p = resolve_params(opts);
    const auto k = kind == "discrete" ? transport::SpectrumKind::discrete_modes
                                      : transport::SpectrumKind::continuous_envelope;
    const transport::TransmissionCurve curve = transport::spectrum(p, k, points);
    io::CsvBuilder csv({"omega", "T"});
    for (const auto& [omega, T] : curve.points) csv.add_row({omega, T});
    emit(out, csv.str());
    if (!svg.empty())
        io::write_file_atomic(svg, io::svg_line_chart("transmission spectrum  " + param_label(p),
                                                      "omega", "T", curve.points));
}

void run_tmax(const ArrayOpts& opts, const std::string& out) {
    const ArrayParams p = resolve_params(opts);
    const transport::TmaxResult t = transport::t_max(p);
    io::CsvBuilder csv({"exact", "first_order", "zeta"});
    csv.add_row({t.exact, t.first_order, derive_rates(p).zeta});
    emit(out, csv.str());
}

void run_oracle_compare(const ArrayOpts& opts, int points, const std::string& out) {
    const ArrayParams p = resolve_params(opts);
    const scattering::DeviationTable table = scattering::deviation_sweep(p, points);
    io::CsvBuilder csv({"omega", "T_exact", "T_product", "deviation"});
    for (const auto& row : table.rows)
        csv.add_row({row.omega, row.t_exact, row.t_product, row.deviation});
    emit(out, csv.str());
    std::cout << "max mid-band deviation = " << io::format_sig(table.max_midband_deviation)
              << " (full-band max = " << io::format_sig(table.max_deviation) << ")\n";
}

struct BathOpts {
    std::string shape = "flat";
    double gamma = 1e-3;
    double omega_c = 1.0;
    double band_width = 200.0;  // in units of gamma
    int modes = 4000;
    int samples = 60;
    int quad_points = 10000;
    std::string table_file;
    std::string out;
};

void run_bath_validate(const BathOpts& o) {
    if (!(o.gamma > 0.0)) throw UsageError("--gamma must be positive");
    bath::BathSpec spec;
    spec.omega_c = o.omega_c;
    spec.coupling = bath::ShapeFn::flat(1.0);
    const double s0 = o.gamma / std::numbers::pi;
    if (o.shape == "flat") {
        spec.density = bath::ShapeFn::flat(s0);
    } else if (o.shape == "tilt") {
        spec.density = bath::ShapeFn::linear_tilt(0.0, s0 / o.omega_c);
    } else if (o.shape == "file") {
        if (o.table_file.empty())
            throw UsageError("--shape file requires --file");
        std::ifstream in(o.table_file);
        if (!in) throw std::runtime_error("cannot open table file: " + o.table_file);
        std::vector<std::pair<double, double>> pts;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream row(line);
            std::string a, b;
            if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
                throw std::runtime_error("table rows must be omega,value");
            try {
                pts.emplace_back(std::stod(a), std::stod(b));
            } catch (const std::exception&) {
                if (pts.empty()) continue;  // header row
                throw std::runtime_error("invalid number in table file");
            }
        }
        spec.density = bath::ShapeFn::tabulated(std::move(pts));
    } else {
        throw UsageError("--shape must be flat, tilt or file");
    }
    const double width = o.band_width * o.gamma;
    spec.band_lo = o.omega_c - width / 2.0;
    spec.band_hi = o.omega_c + width / 2.0;

    const bath::DiscreteBath discrete = bath::discretize(spec, o.modes);
    std::vector<double> ts(o.samples);
    const double t_lo = 0.1 / o.gamma, t_hi = 3.0 / o.gamma;
    for (int i = 0; i < o.samples; ++i)
        ts[i] = t_lo + i * (t_hi - t_lo) / (o.samples - 1);
    const auto samples = bath::survival_probability(spec.omega_c, discrete, ts);
    const double gamma_fit = bath::fit_decay(samples);
    const double gamma_golden = bath::golden_rule(spec);
    const double shift = bath::lamb_shift(spec, o.quad_points);

    // intercept of the same least-squares line, for the residual column
    double tbar = 0.0, ybar = 0.0;
    for (const auto& [t, pp] : samples) { tbar += t; ybar += std::log(pp); }
    tbar /= samples.size();
    ybar /= samples.size();
    const double slope = -2.0 * gamma_fit;
    io::CsvBuilder csv({"t", "P", "fit_residual"});
    for (const auto& [t, pp] : samples)
        csv.add_row({t, pp, std::log(pp) - (ybar + slope * (t - tbar))});
    if (!o.out.empty()) io::write_file_atomic(o.out, csv.str());

    std::cout << "gamma_fit = " << io::format_sig(gamma_fit) << "\n"
              << "gamma_golden = " << io::format_sig(gamma_golden) << "\n"
              << "gamma_fit/gamma_golden = " << io::format_sig(gamma_fit / gamma_golden)
              << " (relative error " << io::format_sig(std::abs(gamma_fit / gamma_golden - 1.0))
              << ")\n"
              << "delta_omega_c = " << io::format_sig(shift) << " ("
              << io::format_sig(std::abs(shift) / o.gamma) << " gamma)\n";
}

void run_overlap(const std::string& profile_path, double period, const std::string& out) {
    const overlap::DielectricProfile1D profile =
        overlap::read_profile_csv(profile_path, period);
    const overlap::LocalizedMode mode = overlap::solve_defect_mode(profile);
    const overlap::LocalizedMode shifted = overlap::shifted_by_period(mode, profile);
    const double alpha = overlap::overlap_alpha(profile, mode, shifted);
    io::CsvBuilder csv({"omega_c", "participation_ratio", "alpha"});
    csv.add_row({mode.frequency, mode.participation_ratio, alpha});
    emit(out, csv.str());
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"coupled-cavity array transport and dissipation toolkit"};
    app.require_subcommand(1);

    ArrayOpts aopt;
    std::string out, svg, kind = "continuous";
    int points = 801;

    auto* dispersion = app.add_subcommand("dispersion", "discrete modes of the cosine band");
    add_array_options(dispersion, aopt);
    dispersion->add_option("--out", out, "output CSV path (default: stdout)");
    dispersion->callback([&] { run_dispersion(aopt, out); });

    auto* spectrum = app.add_subcommand("spectrum", "single-photon transmission spectrum");
    add_array_options(spectrum, aopt);
    spectrum->add_option("--points", points, "grid points for the continuous envelope");
    spectrum->add_option("--kind", kind, "discrete | continuous")
        ->check(CLI::IsMember({"discrete", "continuous"}));
    spectrum->add_option("--out", out, "output CSV path (default: stdout)");
    spectrum->add_option("--svg", svg, "also write an SVG line chart");
    spectrum->callback([&] { run_spectrum(aopt, kind, points, out, svg); });

    auto* tmax = app.add_subcommand("tmax", "peak transmission (exact and first order)");
    add_array_options(tmax, aopt);
    tmax->add_option("--out", out, "output CSV path (default: stdout)");
    tmax->callback([&] { run_tmax(aopt, out); });

    auto* zeta = app.add_subcommand("zeta", "array quality factor zeta = alpha*Q/N");
    add_array_options(zeta, aopt);
    zeta->add_option("--out", out, "output CSV path (default: stdout)");
    zeta->callback([&] { run_tmax(aopt, out); });

    auto* oracle = app.add_subcommand("oracle-compare",
                                      "exact chain scattering versus the product formula");
    add_array_options(oracle, aopt);
    oracle->add_option("--points", points, "sweep points across the band");
    oracle->add_option("--out", out, "output CSV path (default: stdout)");
    oracle->callback([&] { run_oracle_compare(aopt, points, out); });

    BathOpts bopt;
    auto* bathv = app.add_subcommand("bath-validate",
                                     "discretized-bath decay versus the golden rule");
    bathv->add_option("--shape", bopt.shape, "flat | tilt | file")
        ->check(CLI::IsMember({"flat", "tilt", "file"}));
    bathv->add_option("--gamma", bopt.gamma, "target decay rate (default 1e-3)");
    bathv->add_option("--omega-c", bopt.omega_c, "cavity frequency (default 1)");
    bathv->add_option("--band-width", bopt.band_width, "band width in units of gamma");
    bathv->add_option("--modes", bopt.modes, "number of discretized bath modes");
    bathv->add_option("--samples", bopt.samples, "survival samples in the fit window");
    bathv->add_option("--quad-points", bopt.quad_points, "principal-value quadrature points");
    bathv->add_option("--file", bopt.table_file, "omega,value table for --shape file");
    bathv->add_option("--out", bopt.out, "survival CSV path");
    bathv->callback([&] { run_bath_validate(bopt); });

    std::string profile_path;
    double period = 0.0;
    auto* ovl = app.add_subcommand("overlap", "1D defect mode and overlap integral");
    ovl->add_option("--profile", profile_path, "CSV with columns x,eps_single,eps_periodic")
        ->required();
    ovl->add_option("--period", period, "array period L")->required();
    ovl->add_option("--out", out, "output CSV path (default: stdout)");
    ovl->callback([&] { run_overlap(profile_path, period, out); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cca::cli
