#include "cli/run.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/repro.hpp"
#include "cqed/errors.hpp"
#include "cqed/parity.hpp"

#ifndef CQED_VERSION
#define CQED_VERSION "0.0.0"
#endif

namespace cqed::cli {

namespace {

struct Common {
    std::string config;
    std::optional<double> kappa_mhz;
    bool json = false;
    std::optional<std::string> out_dir;
    unsigned threads = 0;

    DeviceSpec device() const {
        DeviceSpec d = load_device_file(config);
        if (kappa_mhz) d.cavity.kappa_mhz = *kappa_mhz;
        validate(d);
        return d;
    }
    OutputOptions output() const { return {json, out_dir}; }
};

void add_output(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "Emit JSON instead of CSV");
    sub->add_option("--out-dir", c.out_dir, "Write one file per table plus manifest.json into this directory");
    sub->add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)")->capture_default_str();
}

void add_device(CLI::App* sub, Common& c, bool required) {
    auto* o = sub->add_option("--config", c.config, "Device config file");
    if (required) o->required();
    sub->add_option("--kappa-mhz", c.kappa_mhz, "Override the cavity decay rate (MHz)");
}

// Options in declaration order; defaults for the ones not given.
RunManifest manifest_for(const CLI::App* sub, const std::string& config) {
    RunManifest m;
    m.subcommand = sub->get_name();
    m.config_path = config;
    m.version = CQED_VERSION;
    for (const CLI::Option* o : sub->get_options()) {
        const std::string name = o->get_single_name();
        if (name == "help" || name == "config" || name == "out-dir" || name == "threads" || name == "json") continue;
        if (o->count() == 0 && o->get_default_str().empty()) continue;
        std::string value;
        if (o->count() == 0) {
            value = o->get_default_str();
        } else {
            for (const auto& r : o->results()) value += (value.empty() ? "" : " ") + r;
        }
        m.set(name, value);
    }
    return m;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dispersive readout and parity measurement toolkit for multi-level qubits in a driven cavity",
                 "cqed-readout"};
    app.set_version_flag("--version", CQED_VERSION);
    app.require_subcommand(1);

    std::function<int()> action;
    Common common;

    auto* spectrum = app.add_subcommand("spectrum", "Transformed frequencies, detunings, lambdas and bare shifts");
    add_device(spectrum, common, true);
    add_output(spectrum, common);
    spectrum->callback([&] {
        action = [&] {
            emit(spectrum_tables(common.device()), manifest_for(spectrum, common.config), common.output(), out);
            return kExitOk;
        };
    });

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Hysteresis sweep of the steady-state photon number");
    add_device(sweep, common, true);
    sweep->add_option("--state", sweep_opts.states, "Logical state label(s), or 'all'")->capture_default_str();
    sweep->add_option("--delta-c", sweep_opts.delta_c_mhz, "Cavity minus drive frequency (MHz)")->capture_default_str();
    sweep->add_option("--start", sweep_opts.start, "First grid value (dB re 1 MHz, or MHz with --linear)")
        ->capture_default_str();
    sweep->add_option("--stop", sweep_opts.stop, "Last grid value")->capture_default_str();
    sweep->add_option("--points", sweep_opts.points, "Grid points")->capture_default_str();
    sweep->add_flag("--linear", sweep_opts.linear, "Linear grid in MHz instead of dB");
    sweep->add_option("--direction", sweep_opts.direction, "up, down or both")
        ->check(CLI::IsMember({"up", "down", "both"}))
        ->capture_default_str();
    add_output(sweep, common);
    sweep->callback([&] {
        action = [&] {
            emit(sweep_tables(common.device(), sweep_opts, common.threads), manifest_for(sweep, common.config),
                 common.output(), out);
            return kExitOk;
        };
    });

    double bif_dc = 0.0;
    auto* bif = app.add_subcommand("bifurcation", "Bifurcation points of every logical state");
    add_device(bif, common, true);
    bif->add_option("--delta-c", bif_dc, "Cavity minus drive frequency (MHz)")->capture_default_str();
    add_output(bif, common);
    bif->callback([&] {
        action = [&] {
            emit({bifurcation_table(common.device(), bif_dc)}, manifest_for(bif, common.config), common.output(), out);
            return kExitOk;
        };
    });

    BorderGrid grid;
    auto* borders = app.add_subcommand("borders", "epsilon_2 against delta_c and the existence borders");
    add_device(borders, common, true);
    borders->add_option("--dc-start", grid.start_mhz, "First delta_c (MHz)")->capture_default_str();
    borders->add_option("--dc-stop", grid.stop_mhz, "Last delta_c (MHz)")->capture_default_str();
    borders->add_option("--dc-points", grid.points, "Grid points")->capture_default_str();
    add_output(borders, common);
    borders->callback([&] {
        action = [&] {
            emit(borders_tables(common.device(), grid, common.threads), manifest_for(borders, common.config),
                 common.output(), out);
            return kExitOk;
        };
    });

    bool check = false;
    auto* parity = app.add_subcommand("parity-plan", "Drive frequencies and strength window for a parity readout");
    add_device(parity, common, true);
    parity->add_flag("--check", check, "Verify the plan with full-model hysteresis sweeps");
    add_output(parity, common);
    parity->callback([&] {
        action = [&] {
            const DeviceSpec d = common.device();
            const ParityPlan plan = parity_plan(d);
            std::optional<PlanCheck> pc;
            if (check) pc = check_plan(plan, d, 400, common.threads);
            const PlanCheck* p = pc ? &*pc : nullptr;
            if (!common.json && !common.out_dir)
                out << parity_text(plan, p);
            else
                emit(parity_tables(plan, p), manifest_for(parity, common.config), common.output(), out);
            return kExitOk;
        };
    });

    DecoherenceOptions deco;
    std::size_t deco_qubit = 1;
    auto* decoherence = app.add_subcommand("decoherence", "Transformed channel coefficients and leakage dephasing");
    add_device(decoherence, common, true);
    decoherence->add_option("--qubit", deco_qubit, "Qubit (1-based)")->capture_default_str();
    decoherence->add_option("--n-min", deco.n_min, "Smallest positive photon number")->capture_default_str();
    decoherence->add_option("--n-max", deco.n_max, "Largest photon number")->capture_default_str();
    decoherence->add_option("--points", deco.points, "Log-spaced photon numbers")->capture_default_str();
    decoherence->add_option("--delta-c", deco.delta_c_mhz, "delta_c values (MHz)")->capture_default_str();
    decoherence->add_option("--epsilon", deco.epsilon_mhz, "Drive strengths (MHz)")->capture_default_str();
    decoherence->add_option("--kappa", deco.kappa_mhz, "Cavity decay rates (MHz)")->capture_default_str();
    add_output(decoherence, common);
    decoherence->callback([&] {
        action = [&] {
            if (deco_qubit == 0) throw ValidationError("qubit index is 1-based");
            deco.qubit = deco_qubit - 1;
            emit(decoherence_tables(common.device(), deco), manifest_for(decoherence, common.config),
                 common.output(), out);
            return kExitOk;
        };
    });

    OracleCheckOptions oracle_opts;
    std::size_t oracle_qubit = 1;
    auto* oracle = app.add_subcommand("oracle-check", "Compare against a truncated-Fock Lindblad steady state");
    add_device(oracle, common, true);
    oracle->add_option("--qubit", oracle_qubit, "Qubit used in the single-qubit comparison (1-based)")
        ->capture_default_str();
    oracle->add_option("--cutoff", oracle_opts.cutoff, "Fock cutoff")->capture_default_str();
    oracle->add_option("--delta-c", oracle_opts.delta_c_mhz, "Cavity minus drive frequency (MHz)")
        ->capture_default_str();
    oracle->add_option("--epsilon", oracle_opts.epsilon_mhz, "Drive strengths (MHz)")->capture_default_str();
    add_output(oracle, common);
    oracle->callback([&] {
        action = [&] {
            if (oracle_qubit == 0) throw ValidationError("qubit index is 1-based");
            oracle_opts.qubit = oracle_qubit - 1;
            bool pass = false;
            Table t = oracle_table(common.device(), oracle_opts, common.threads, pass);
            emit({t}, manifest_for(oracle, common.config), common.output(), out);
            if (!pass) err << "oracle-check: at least one check failed\n";
            return pass ? kExitOk : kExitNumeric;
        };
    });

    std::string figure;
    bool calibrate = false;
    auto* repro = app.add_subcommand("repro", "Data behind a figure or table");
    repro->add_option("figure", figure, "fig2, fig3, fig4, fig5, table1 or gamma-phi")
        ->required()
        ->check(CLI::IsMember(kReproIds));
    add_device(repro, common, false);
    repro->add_flag("--calibrate", calibrate, "table1: pick kappa in [0.5, 5] MHz by a minimax scan");
    add_output(repro, common);
    repro->callback([&] {
        action = [&] {
            ReproOptions r;
            if (!common.config.empty()) r.device = load_device_file(common.config);
            r.kappa_mhz = common.kappa_mhz;
            r.calibrate = calibrate;
            r.threads = common.threads;
            RunManifest m = manifest_for(repro, common.config.empty() ? "built-in" : common.config);
            auto tables = repro_tables(figure, r, m);
            emit(tables, std::move(m), common.output(), out);
            return kExitOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        return action();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace cqed::cli
