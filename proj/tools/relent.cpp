// Command-line front end: Wigner-angle evaluation, entanglement grid scans
// over the two-particle state parameters, and CHSH evaluation/maximization
// with the relativistic spin observable.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "relent/bell.hpp"
#include "relent/scan.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& out_target, const std::string& payload) {
    if (out_target == "stdout") {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_target, std::ios::binary);
    if (!file) {
        throw relent::error("cannot open output file '" + out_target + "'");
    }
    file << payload;
}

relent::Direction parse_direction(const std::string& text) {
    std::array<double, 3> c{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = i < 2 ? text.find(',', pos) : text.size();
        if (comma == std::string::npos) {
            throw relent::error("direction needs three comma-separated components");
        }
        try {
            c[i] = std::stod(text.substr(pos, comma - pos));
        } catch (const std::exception&) {
            throw relent::error("malformed direction component in '" + text + "'");
        }
        pos = comma + 1;
    }
    return relent::Direction::normalized(c[0], c[1], c[2]);
}

struct WignerAngleArgs {
    std::string eta;
    std::string xi;
};

int run_wigner_angle(const WignerAngleArgs& args) {
    const double eta = relent::parse_angle(args.eta);
    const double xi = relent::parse_angle(args.xi);
    const double delta = relent::wigner_angle(relent::Rapidity{eta}, relent::Rapidity{xi});
    std::cout << "delta = " << fmt12(delta) << " rad (" << fmt12(delta * 180.0 / M_PI)
              << " deg)\n";
    return exit_ok;
}

struct ScanArgs {
    std::string family = "bell";
    std::string partition = "one-vs-three-diff";
    std::string alpha = "0:pi:21";
    std::string beta;
    std::string theta;
    std::string phi = "0";
    std::string delta;
    std::string eta;
    std::string xi;
    std::string format = "csv";
    std::string out = "stdout";
};

int run_scan(const ScanArgs& args) {
    relent::ScanConfig cfg;
    cfg.family = relent::parse_family(args.family);
    cfg.partition = relent::parse_partition(args.partition);
    cfg.alpha = relent::parse_angle_range(args.alpha);

    const bool triplet = cfg.family == relent::Family::triplet;
    if (triplet) {
        if (!args.beta.empty()) {
            throw relent::error("--beta applies to the bell family only; use --theta/--phi");
        }
        cfg.beta_or_theta = relent::parse_angle_range(args.theta.empty() ? "0:pi:21" : args.theta);
        cfg.phi = relent::parse_angle_range(args.phi);
    } else {
        if (!args.theta.empty() || args.phi != "0") {
            throw relent::error("--theta/--phi apply to the triplet family only; use --beta");
        }
        cfg.beta_or_theta = relent::parse_angle_range(args.beta.empty() ? "0:pi:21" : args.beta);
    }

    if (!args.delta.empty() && (!args.eta.empty() || !args.xi.empty())) {
        throw relent::error("give either --delta or the rapidity pair --eta/--xi, not both");
    }
    if (!args.eta.empty() || !args.xi.empty()) {
        if (args.eta.empty() || args.xi.empty()) {
            throw relent::error("--eta and --xi must be given together");
        }
        cfg.delta = relent::wigner_angle(relent::Rapidity{relent::parse_angle(args.eta)},
                                         relent::Rapidity{relent::parse_angle(args.xi)});
    } else if (!args.delta.empty()) {
        cfg.delta = relent::parse_angle(args.delta);
    }

    if (args.format == "csv") {
        cfg.format = relent::OutputFormat::csv;
    } else if (args.format == "json") {
        cfg.format = relent::OutputFormat::json;
    } else {
        throw relent::error("unknown format '" + args.format + "' (expected csv|json)");
    }

    const std::vector<relent::ScanRow> rows = relent::run_scan(cfg);
    write_output(args.out, cfg.format == relent::OutputFormat::csv ? relent::to_csv(rows)
                                                                   : relent::to_json(rows));
    return exit_ok;
}

struct ChshArgs {
    std::string family = "bell";
    std::string alpha = "pi/4";
    std::string beta = "-pi/4"; // singlet
    std::string theta = "pi/4";
    std::string phi = "0";
    std::string eta = "0";
    std::string xi = "0";
    std::optional<std::string> dir_a;
    std::optional<std::string> dir_alpha;
    std::optional<std::string> dir_b;
    std::optional<std::string> dir_beta;
    bool transform = false;
    bool optimize = false;
    std::uint64_t seed = 0;
    int restarts = 16;
};

int run_chsh(const ChshArgs& args) {
    if (args.family != "bell" && args.family != "triplet") {
        throw relent::error("unknown family '" + args.family + "' (expected bell|triplet)");
    }
    const relent::SpinFamily spin =
        args.family == "triplet"
            ? relent::SpinFamily(relent::Triplet{relent::parse_angle(args.theta),
                                                 relent::parse_angle(args.phi)})
            : relent::SpinFamily(relent::BellPsi{relent::parse_angle(args.beta)});

    const relent::FrameDescriptor frame{relent::Rapidity{relent::parse_angle(args.eta)},
                                        relent::Rapidity{relent::parse_angle(args.xi)}};
    const relent::Scenario scenario{relent::parse_angle(args.alpha), spin, frame.delta()};
    const relent::PureState state = scenario.boosted();

    std::cout << "frame: eta=" << fmt12(frame.eta.value) << " xi=" << fmt12(frame.xi.value)
              << " delta=" << fmt12(frame.delta()) << "\n";

    if (args.optimize) {
        const relent::ChshOptimum best =
            relent::chsh_maximize(state, frame, args.seed, args.restarts);
        static constexpr const char* labels[4] = {"a", "alpha'", "b", "beta'"};
        std::cout << "best setup angles (polar, azimuth):\n";
        for (int i = 0; i < 4; ++i) {
            std::cout << "  " << labels[i] << " = (" << fmt12(best.angles[2 * i]) << ", "
                      << fmt12(best.angles[2 * i + 1]) << ")\n";
        }
        std::cout << "S = " << fmt12(best.value) << "\n";
        return exit_ok;
    }

    relent::MeasurementSetup setup = relent::MeasurementSetup::optimal_planar();
    const bool have_custom = args.dir_a || args.dir_alpha || args.dir_b || args.dir_beta;
    if (have_custom) {
        if (!(args.dir_a && args.dir_alpha && args.dir_b && args.dir_beta)) {
            throw relent::error("give all four of --dir-a --dir-alpha --dir-b --dir-beta");
        }
        setup = relent::MeasurementSetup::from_directions(
            parse_direction(*args.dir_a), parse_direction(*args.dir_alpha),
            parse_direction(*args.dir_b), parse_direction(*args.dir_beta));
    }
    if (args.transform) {
        setup = relent::transform_setup(setup, frame);
    }

    const double e_ab = relent::correlation(state, setup.a, setup.b, frame);
    const double e_abp = relent::correlation(state, setup.a, setup.beta_prime, frame);
    const double e_apbp = relent::correlation(state, setup.alpha_prime, setup.beta_prime, frame);
    const double e_apb = relent::correlation(state, setup.alpha_prime, setup.b, frame);
    std::cout << "E(a,b)          = " << fmt12(e_ab) << "\n"
              << "E(a,beta')      = " << fmt12(e_abp) << "\n"
              << "E(alpha',beta') = " << fmt12(e_apbp) << "\n"
              << "E(alpha',b)     = " << fmt12(e_apb) << "\n"
              << "S = " << fmt12(relent::chsh(state, setup, frame)) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two massive spin-1/2 particles as a 4-qubit system: Wigner-rotation "
                 "boosts, entanglement across Hilbert-space bipartitions, and CHSH "
                 "violation with the Pauli-Lubanski spin observable"};
    app.require_subcommand(1);

    WignerAngleArgs wa;
    CLI::App* cmd_wigner = app.add_subcommand("wigner-angle", "Rotation angle of a boost pair");
    cmd_wigner->add_option("--eta", wa.eta, "Particle rapidity (angle literal)")->required();
    cmd_wigner->add_option("--xi", wa.xi, "Observer rapidity (angle literal)")->required();

    ScanArgs sc;
    CLI::App* cmd_scan = app.add_subcommand("scan", "Parameter-grid entanglement scan");
    cmd_scan->add_option("--family", sc.family, "bell|triplet");
    cmd_scan->add_option("--partition", sc.partition,
                         "one-vs-three|one-vs-three-diff|spin-vs-mom|alice-bob|cross");
    cmd_scan->add_option("--alpha", sc.alpha, "Momentum angle range start:stop:steps or value");
    cmd_scan->add_option("--beta", sc.beta, "Bell spin angle range");
    cmd_scan->add_option("--theta", sc.theta, "Triplet polar angle range");
    cmd_scan->add_option("--phi", sc.phi, "Triplet azimuth range");
    cmd_scan->add_option("--delta", sc.delta, "Wigner angle");
    cmd_scan->add_option("--eta", sc.eta, "Particle rapidity (alternative to --delta)");
    cmd_scan->add_option("--xi", sc.xi, "Observer rapidity (alternative to --delta)");
    cmd_scan->add_option("--format", sc.format, "csv|json");
    cmd_scan->add_option("--out", sc.out, "Output path or 'stdout'");

    ChshArgs ch;
    CLI::App* cmd_chsh = app.add_subcommand("chsh", "CHSH evaluation or maximization");
    cmd_chsh->add_option("--family", ch.family, "bell|triplet");
    cmd_chsh->add_option("--alpha", ch.alpha, "Momentum angle");
    cmd_chsh->add_option("--beta", ch.beta, "Bell spin angle (default: singlet)");
    cmd_chsh->add_option("--theta", ch.theta, "Triplet polar angle");
    cmd_chsh->add_option("--phi", ch.phi, "Triplet azimuth");
    cmd_chsh->add_option("--eta", ch.eta, "Particle rapidity");
    cmd_chsh->add_option("--xi", ch.xi, "Observer rapidity");
    cmd_chsh->add_option("--dir-a", ch.dir_a, "Alice direction 1 as x,y,z (normalized)");
    cmd_chsh->add_option("--dir-alpha", ch.dir_alpha, "Alice direction 2 as x,y,z");
    cmd_chsh->add_option("--dir-b", ch.dir_b, "Bob direction 1 as x,y,z");
    cmd_chsh->add_option("--dir-beta", ch.dir_beta, "Bob direction 2 as x,y,z");
    cmd_chsh->add_flag("--transform", ch.transform,
                       "Treat directions as source-frame choices and carry them to the "
                       "observer frame");
    cmd_chsh->add_flag("--optimize", ch.optimize, "Maximize S over the eight setup angles");
    cmd_chsh->add_option("--seed", ch.seed, "Optimizer seed");
    cmd_chsh->add_option("--restarts", ch.restarts, "Optimizer restarts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (cmd_wigner->parsed()) {
            return run_wigner_angle(wa);
        }
        if (cmd_scan->parsed()) {
            return run_scan(sc);
        }
        return run_chsh(ch);
    } catch (const relent::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
