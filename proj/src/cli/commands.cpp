#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cqed/decoherence.hpp"
#include "cqed/errors.hpp"
#include "cqed/oracle.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/stability.hpp"
#include "cqed/steadystate.hpp"
#include "detail/parallel.hpp"

namespace cqed::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

std::string join_outcomes(const std::vector<Outcome>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + to_string(v[i]);
    return s;
}

}  // namespace

std::vector<LogicalState> parse_states(const std::vector<std::string>& labels, int num_qubits) {
    if (labels.empty()) throw ValidationError("no state given");
    std::vector<LogicalState> out;
    for (const auto& l : labels) {
        if (l == "all") {
            for (auto& s : all_states(num_qubits)) out.push_back(s);
            continue;
        }
        LogicalState s = LogicalState::parse(l);
        if (static_cast<int>(s.bits.size()) != num_qubits)
            throw ValidationError("state " + l + " has " + std::to_string(s.bits.size()) + " qubits, device has " +
                                  std::to_string(num_qubits));
        out.push_back(s);
    }
    return out;
}

std::vector<Table> spectrum_tables(const DeviceSpec& device) {
    const SpectralParams sp = detunings_and_lambdas(device);
    Table q{"spectrum",
            {{"qubit", "1"},
             {"transition", "1"},
             {"omega_ghz", "GHz"},
             {"tilde_omega_ghz", "GHz"},
             {"delta_ghz", "GHz"},
             {"g_ghz", "GHz"},
             {"lambda", "1"}},
            {}};
    for (std::size_t j = 0; j < sp.qubits.size(); ++j) {
        const auto& s = sp.qubits[j];
        for (Eigen::Index i = 0; i < s.transitions_ghz.size(); ++i)
            q.add({static_cast<long long>(j + 1), static_cast<long long>(i + 1), s.transitions_ghz(i),
                   s.tilde_omega_ghz(i), s.delta_ghz(i), s.g_ghz(i), s.lambda(i)});
    }
    Table chi{"chi", {{"state", "-"}, {"chi_bare_mhz", "MHz"}, {"chi_n0_mhz", "MHz"}}, {}};
    for (const auto& s : all_states(device.num_qubits()))
        chi.add({s.label(), bare_chi_shift(s, sp), chi_shift(0.0, s, sp)});
    return {q, chi};
}

std::vector<Table> sweep_tables(const DeviceSpec& device, const SweepOptions& opts, unsigned threads) {
    if (opts.points < 2) throw ValidationError("sweep needs at least 2 points");
    std::vector<SweepDirection> dirs;
    if (opts.direction == "up" || opts.direction == "both") dirs.push_back(SweepDirection::up);
    if (opts.direction == "down" || opts.direction == "both") dirs.push_back(SweepDirection::down);
    if (dirs.empty()) throw ValidationError("direction must be up, down or both");
    if (!(opts.stop > opts.start)) throw ValidationError("sweep stop must exceed start");
    if (opts.linear && !(opts.start >= 0)) throw ValidationError("linear sweep needs start >= 0 MHz");

    const SpectralParams sp = detunings_and_lambdas(device);
    const auto states = parse_states(opts.states, device.num_qubits());
    const auto grid = opts.linear ? linear_grid(opts.start, opts.stop, opts.points)
                                  : db_grid(opts.start, opts.stop, opts.points);

    std::vector<Table> out;
    for (SweepDirection d : dirs) {
        auto g = grid;
        if (d == SweepDirection::down) std::reverse(g.begin(), g.end());
        std::vector<SweepResult> results(states.size());
        detail::parallel_for(states.size(), threads, [&](std::size_t i) {
            results[i] = sweep_drive(g, d, states[i], sp, device.cavity.kappa_mhz, opts.delta_c_mhz);
        });
        Table t{opts.name + "_" + to_string(d),
                {{"epsilon_mhz", "MHz"},
                 {"epsilon_db", "dB re 1 MHz"},
                 {"n", "photons"},
                 {"chi_mhz", "MHz"},
                 {"eff_freq_minus_bare_mhz", "MHz"},
                 {"branch", "-"},
                 {"state", "-"},
                 {"delta_c_mhz", "MHz"},
                 {"jump", "-"}},
                {}};
        for (std::size_t i = 0; i < states.size(); ++i) {
            const auto& r = results[i];
            for (std::size_t k = 0; k < r.points.size(); ++k) {
                const auto& p = r.points[k];
                const double shift = (p.result.effective_frequency_ghz - device.cavity.omega_c_ghz) * kMHzPerGHz;
                t.add({p.epsilon_mhz, epsilon_to_db(p.epsilon_mhz), p.result.n, p.result.chi_mhz, shift,
                       to_string(p.result.branch), states[i].label(), opts.delta_c_mhz,
                       r.jump_index && *r.jump_index == k});
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

Table bifurcation_table(const DeviceSpec& device, double delta_c_mhz) {
    const SpectralParams sp = detunings_and_lambdas(device);
    Table t{"bifurcation",
            {{"state", "-"},
             {"exists", "-"},
             {"n1", "photons"},
             {"n2", "photons"},
             {"epsilon1_mhz", "MHz"},
             {"epsilon2_mhz", "MHz"},
             {"epsilon1_db", "dB re 1 MHz"},
             {"epsilon2_db", "dB re 1 MHz"},
             {"delta_omega_mhz", "MHz"},
             {"chi_nl_mhz", "MHz"}},
            {}};
    for (const auto& s : all_states(device.num_qubits())) {
        const auto r = bifurcation(s, sp, device.cavity.kappa_mhz, delta_c_mhz);
        t.add({s.label(), r.exists, or_nan(r.n1), or_nan(r.n2), or_nan(r.epsilon1), or_nan(r.epsilon2),
               r.epsilon1 ? epsilon_to_db(*r.epsilon1) : kNaN, r.epsilon2 ? epsilon_to_db(*r.epsilon2) : kNaN,
               r.delta_omega_mhz, r.chi_nl_mhz});
    }
    return t;
}

std::vector<Table> borders_tables(const DeviceSpec& device, const BorderGrid& grid, unsigned threads) {
    if (grid.points < 2) throw ValidationError("border grid needs at least 2 points");
    if (!(grid.stop_mhz > grid.start_mhz)) throw ValidationError("border grid stop must exceed start");
    const SpectralParams sp = detunings_and_lambdas(device);
    const double kappa = device.cavity.kappa_mhz;
    const auto states = all_states(device.num_qubits());
    const auto dcs = linear_grid(grid.start_mhz, grid.stop_mhz, grid.points);

    Table scan{grid.name,
               {{"delta_c_mhz", "MHz"},
                {"state", "-"},
                {"exists", "-"},
                {"epsilon1_mhz", "MHz"},
                {"epsilon2_mhz", "MHz"},
                {"epsilon2_db", "dB re 1 MHz"}},
               {}};
    for (double dc : dcs)
        for (const auto& s : states) {
            const auto r = bifurcation(s, sp, kappa, dc);
            scan.add({dc, s.label(), r.exists, or_nan(r.epsilon1), or_nan(r.epsilon2),
                      r.epsilon2 ? epsilon_to_db(*r.epsilon2) : kNaN});
        }

    std::vector<StabilityBorder> borders(states.size());
    detail::parallel_for(states.size(), threads,
                         [&](std::size_t i) { borders[i] = stability_border(states[i], sp, kappa); });
    Table b{grid.name + "_edges",
            {{"state", "-"},
             {"excitations", "1"},
             {"border_delta_c_mhz", "MHz"},
             {"bare_proxy_mhz", "MHz"},
             {"occupied_proxy_mhz", "MHz"}},
            {}};
    for (std::size_t i = 0; i < states.size(); ++i)
        b.add({states[i].label(), static_cast<long long>(states[i].excitations()), borders[i].delta_c_mhz,
               borders[i].proxy_mhz, borders[i].occupied_proxy_mhz});
    return {scan, b};
}

std::vector<Table> parity_tables(const ParityPlan& plan, const PlanCheck* check) {
    Table drives{"parity_drives",
                 {{"drive", "1"},
                  {"odd_class", "excitations"},
                  {"drive_frequency_ghz", "GHz"},
                  {"delta_c_mhz", "MHz"},
                  {"border_low_mhz", "MHz"},
                  {"border_high_mhz", "MHz"}},
                 {}};
    for (std::size_t k = 0; k < plan.drives.size(); ++k) {
        const auto& d = plan.drives[k];
        drives.add({static_cast<long long>(k + 1), static_cast<long long>(d.odd_class), d.drive_frequency_ghz,
                    d.delta_c_mhz, d.border_low_mhz, or_nan(d.border_high_mhz)});
    }
    Table window{"parity_window",
                 {{"kappa_mhz", "MHz"},
                  {"epsilon_low_mhz", "MHz"},
                  {"epsilon_high_mhz", "MHz"},
                  {"epsilon_low_db", "dB re 1 MHz"},
                  {"epsilon_high_db", "dB re 1 MHz"},
                  {"operating_epsilon_mhz", "MHz"},
                  {"operating_epsilon_db", "dB re 1 MHz"}},
                 {}};
    window.add({plan.kappa_mhz, plan.window.low_mhz, plan.window.high_mhz, epsilon_to_db(plan.window.low_mhz),
                epsilon_to_db(plan.window.high_mhz), plan.operating_epsilon_mhz,
                epsilon_to_db(plan.operating_epsilon_mhz)});

    std::vector<Column> cols{{"state", "-"}, {"parity", "-"}, {"predicted", "-"}, {"predicted_parity", "-"}};
    for (std::size_t k = 0; k < plan.drives.size(); ++k)
        cols.push_back({"epsilon2_drive" + std::to_string(k + 1) + "_mhz", "MHz"});
    if (check) {
        cols.push_back({"observed_parity", "-"});
        for (std::size_t k = 0; k < plan.drives.size(); ++k)
            cols.push_back({"n_drive" + std::to_string(k + 1), "photons"});
    }
    Table states{"parity_states", cols, {}};
    for (const auto& [s, pred] : plan.predicted) {
        std::vector<Cell> row{s.label(), to_string(s.odd() ? Parity::odd : Parity::even), join_outcomes(pred),
                              to_string(plan.overall.at(s))};
        for (const auto& r : plan.reports.at(s)) row.push_back(or_nan(r.epsilon2));
        if (check) {
            row.push_back(to_string(check->observed.at(s)));
            for (double n : check->photons.at(s)) row.push_back(n);
        }
        states.add(std::move(row));
    }
    std::vector<Table> out{drives, window, states};
    if (check) {
        Table summary{"parity_check",
                      {{"min_bright_n", "photons"},
                       {"max_dark_n", "photons"},
                       {"contrast", "1"},
                       {"outcomes_match", "-"},
                       {"sound", "-"}},
                      {}};
        summary.add({check->min_bright, check->max_dark, check->contrast(), check->outcomes_match, check->sound()});
        out.push_back(std::move(summary));
    }
    return out;
}

std::string parity_text(const ParityPlan& plan, const PlanCheck* check) {
    std::ostringstream os;
    os << "parity plan: " << plan.drives.size() << " drive(s), kappa = " << format_number(plan.kappa_mhz)
       << " MHz\n";
    for (std::size_t k = 0; k < plan.drives.size(); ++k) {
        const auto& d = plan.drives[k];
        os << "  drive " << k + 1 << ": odd class " << d.odd_class << ", omega_d = " << format_number(d.drive_frequency_ghz)
           << " GHz, delta_c = " << format_number(d.delta_c_mhz) << " MHz, borders [" << format_number(d.border_low_mhz)
           << ", " << (d.border_high_mhz ? format_number(*d.border_high_mhz) : std::string("open")) << "] MHz\n";
    }
    os << "epsilon window: (" << format_number(plan.window.low_mhz) << ", " << format_number(plan.window.high_mhz)
       << ") MHz = (" << format_number(epsilon_to_db(plan.window.low_mhz)) << ", "
       << format_number(epsilon_to_db(plan.window.high_mhz)) << ") dB\n";
    os << "operating epsilon: " << format_number(plan.operating_epsilon_mhz) << " MHz ("
       << format_number(epsilon_to_db(plan.operating_epsilon_mhz)) << " dB)\n";
    os << "state  parity  predicted";
    if (check) os << "  observed";
    os << '\n';
    for (const auto& [s, pred] : plan.predicted) {
        os << "  " << s.label() << "  " << to_string(s.odd() ? Parity::odd : Parity::even) << "  "
           << join_outcomes(pred) << " -> " << to_string(plan.overall.at(s));
        if (check) os << "  " << to_string(check->observed.at(s));
        os << '\n';
    }
    if (check)
        os << "full-model check: contrast " << format_number(check->contrast()) << ", outcomes "
           << (check->outcomes_match ? "match" : "differ") << ", " << (check->sound() ? "sound" : "not sound")
           << '\n';
    return os.str();
}

std::vector<Table> decoherence_tables(const DeviceSpec& device, const DecoherenceOptions& opts) {
    if (opts.qubit >= device.qubits.size()) throw ValidationError("qubit index out of range");
    if (opts.points < 2 || !(opts.n_min > 0) || !(opts.n_max > opts.n_min))
        throw ValidationError("photon grid needs 0 < n_min < n_max and at least 2 points");
    DeviceSpec three = device;
    three.levels = std::max(3, device.levels);
    const SpectralParams sp = detunings_and_lambdas(three);
    const auto& q = sp.qubits[opts.qubit];
    const QubitSpec& spec = device.qubits[opts.qubit];
    const double l1 = q.lambda(0), l2 = q.lambda(1);

    Table coef{"decoherence_coefficients",
               {{"n", "photons"},
                {"gamma1_mhz", "MHz"},
                {"relax_sx1_mhz", "MHz"},
                {"relax_sx2_mhz", "MHz"},
                {"relax_sz1_mhz", "MHz"},
                {"relax_sz2_mhz", "MHz"},
                {"relax_s1s2_mhz", "MHz"},
                {"relax_s2_mhz", "MHz"},
                {"gamma_phi_mhz", "MHz"},
                {"dephase_z1_mhz", "MHz"},
                {"dephase_z2_mhz", "MHz"},
                {"dephase_x1_mhz", "MHz"},
                {"dephase_x2_mhz", "MHz"}},
               {}};
    std::vector<double> ns{0.0};
    for (double db : linear_grid(std::log10(opts.n_min), std::log10(opts.n_max), opts.points))
        ns.push_back(std::pow(10.0, db));
    for (double n : ns) {
        const auto c = channel_coefficients(n, l1, l2, spec.gamma1_mhz, spec.gamma_phi_mhz);
        const auto& r = c.relaxation;
        const auto& d = c.dephasing;
        coef.add({n, r.gamma1, r.sx1, r.sx2, r.sz1, r.sz2, r.s1s2, r.s2, d.gamma_phi, d.z1, d.z2, d.x1, d.x2});
    }

    Table rate{"gamma_phi",
               {{"delta_c_mhz", "MHz"},
                {"epsilon_mhz", "MHz"},
                {"kappa_mhz", "MHz"},
                {"chi1_mhz", "MHz"},
                {"chi2_mhz", "MHz"},
                {"gamma_phi_closed_khz", "kHz"},
                {"gamma_phi_definitional_khz", "kHz"}},
               {}};
    for (double dc : opts.delta_c_mhz)
        for (double eps : opts.epsilon_mhz)
            for (double k : opts.kappa_mhz) {
                DeviceSpec dk = three;
                dk.cavity.kappa_mhz = k;
                const auto p = leakage_params(dk, opts.qubit, eps, dc);
                const auto g = leakage_dephasing_rate(p);
                rate.add({dc, eps, k, p.chi1_mhz, p.chi2_mhz, g.closed_khz, g.definitional_khz});
            }
    return {coef, rate};
}

Table oracle_table(const DeviceSpec& device, const OracleCheckOptions& opts, unsigned threads, bool& all_pass) {
    if (opts.qubit >= device.qubits.size()) throw ValidationError("qubit index out of range");
    if (opts.epsilon_mhz.empty()) throw ValidationError("oracle check needs at least one drive strength");
    Table t{"oracle_check",
            {{"check", "-"}, {"case", "-"}, {"value", "1"}, {"tolerance", "1"}, {"pass", "-"}},
            {}};
    all_pass = true;
    auto row = [&](const std::string& check, const std::string& what, double value, double tol, bool pass) {
        all_pass = all_pass && pass;
        t.add({check, what, value, tol, pass});
    };

    for (const auto& e : commutator_check(device)) {
        const double rel = std::abs(e.coefficient_ghz - e.expected_ghz) / std::abs(e.expected_ghz);
        const std::string what = "qubit " + std::to_string(e.qubit + 1) + " transition " + std::to_string(e.transition);
        row("commutator_coefficient", what, rel, 1e-8, rel <= 1e-8);
        row("commutator_proportional", what, e.residual, 1e-8, e.residual <= 1e-8);
    }

    DeviceSpec single{device.cavity, {device.qubits[opts.qubit]}, 3};
    OracleOptions oo;
    oo.fock_cutoff = opts.cutoff;
    const auto cmp = compare_low_branch(single, opts.delta_c_mhz, opts.epsilon_mhz, oo, threads);
    for (const auto& c : cmp) {
        const std::string what = "epsilon " + format_number(c.epsilon_mhz) + " MHz";
        row("low_branch_photons", what, c.relative_deviation(), 0.1, c.relative_deviation() <= 0.1);
        row("linear_regime", what, c.oracle_photons, 0.5, c.oracle_photons <= 0.5);
    }

    const double eps_max = *std::max_element(opts.epsilon_mhz.begin(), opts.epsilon_mhz.end());
    const DriveSpec drive{eps_max, opts.delta_c_mhz};
    OracleOptions doubled = oo;
    doubled.fock_cutoff = 2 * opts.cutoff;
    SteadyState base, fine;
    detail::parallel_for(2, threads, [&](std::size_t i) {
        if (i == 0)
            base = steady_state(build_system(single, drive, oo));
        else
            fine = steady_state(build_system(single, drive, doubled));
    });
    const std::string what = "epsilon " + format_number(eps_max) + " MHz";
    const double change = std::abs(fine.photons - base.photons) / base.photons;
    row("cutoff_doubling", what, change, 1e-3, change < 1e-3);
    row("hermiticity", what, base.hermiticity_error, 1e-8, base.hermiticity_error <= 1e-8);
    row("positivity", what, -base.min_eigenvalue, 1e-8, base.min_eigenvalue >= -1e-8);
    row("trace", what, base.trace_error, 1e-8, base.trace_error <= 1e-8);
    return t;
}

}  // namespace cqed::cli
