#include "cqed/parity.hpp"

#include <algorithm>
#include <cmath>

#include "cqed/errors.hpp"
#include "detail/parallel.hpp"

namespace cqed {

std::string to_string(Outcome o) { return o == Outcome::bright ? "bright" : "dark"; }
std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

double EpsilonWindow::centre() const { return std::sqrt(low_mhz * high_mhz); }

ChiTable bare_chi_table(const DeviceSpec& device) {
    const SpectralParams params = detunings_and_lambdas(device);
    ChiTable out;
    for (const auto& s : all_states(device.num_qubits())) out[s] = bare_chi_shift(s, params);
    return out;
}

namespace {

double border_bisect(const LogicalState& state, const SpectralParams& params, double kappa, double chi) {
    auto exists = [&](double dc) { return bifurcation(state, params, kappa, dc).exists; };
    // Borders sit within a few kappa of -chi; scan a generous symmetric range.
    const double span = 2.0 * std::abs(chi) + 20.0 * kappa + 100.0;
    const int steps = 4000;
    double a = -span;
    bool ea = exists(a);
    for (int k = 1; k <= steps; ++k) {
        const double b = -span + 2.0 * span * k / steps;
        const bool eb = exists(b);
        if (eb != ea) {
            double lo = a, hi = b;
            for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++it) {
                const double m = 0.5 * (lo + hi);
                (exists(m) == ea ? lo : hi) = m;
            }
            return 0.5 * (lo + hi);
        }
        a = b;
        ea = eb;
    }
    throw NumericError("no stability border for state " + state.label() + " in delta_c range [" +
                       std::to_string(-span) + ", " + std::to_string(span) + "] MHz");
}

struct ClassChi {
    double min, max;
};

std::vector<ClassChi> class_extremes(const ChiTable& chi, int n) {
    std::vector<ClassChi> out(n + 1, {INFINITY, -INFINITY});
    for (const auto& [s, c] : chi) {
        auto& e = out[s.excitations()];
        e.min = std::min(e.min, c);
        e.max = std::max(e.max, c);
    }
    return out;
}

}  // namespace

StabilityBorder stability_border(const LogicalState& state, const DeviceSpec& device) {
    validate(device);
    return stability_border(state, detunings_and_lambdas(device), device.cavity.kappa_mhz);
}

StabilityBorder stability_border(const LogicalState& state, const SpectralParams& params, double kappa_mhz) {
    const double chi = bare_chi_shift(state, params);
    return {border_bisect(state, params, kappa_mhz, chi), -chi, -chi_shift(0.0, state, params)};
}

Parity classify(const std::vector<bool>& bright) {
    return std::any_of(bright.begin(), bright.end(), [](bool b) { return b; }) ? Parity::odd : Parity::even;
}

ParityPlan parity_plan(const DeviceSpec& device) {
    validate(device);
    const int n = device.num_qubits();
    if (n < 2) throw ValidationError("parity plan needs at least two qubits");
    const SpectralParams params = detunings_and_lambdas(device);
    const double kappa = device.cavity.kappa_mhz;
    const auto states = all_states(n);

    ChiTable chi;
    std::map<LogicalState, double> border;
    for (const auto& s : states) {
        chi[s] = bare_chi_shift(s, params);
        border[s] = border_bisect(s, params, kappa, chi[s]);
    }
    const auto cls = class_extremes(chi, n);

    ParityPlan plan;
    plan.kappa_mhz = kappa;
    for (int k = 1; k <= n; k += 2) {
        PlannedDrive d;
        d.odd_class = k;
        // Halfway between the bare shifts bracketing the class, or for the top
        // class half a class gap past its own shift.
        d.delta_c_mhz = k < n ? -(cls[k].min + cls[k + 1].max) / 2 : -cls[k].min + (cls[k - 1].min - cls[k].max) / 2;
        d.drive_frequency_ghz = device.cavity.omega_c_ghz - d.delta_c_mhz / kMHzPerGHz;
        d.border_low_mhz = -INFINITY;
        for (const auto& s : states)
            if (s.excitations() == k) d.border_low_mhz = std::max(d.border_low_mhz, border[s]);
        if (k < n) {
            double hi = INFINITY;
            for (const auto& s : states)
                if (s.excitations() == k + 1) hi = std::min(hi, border[s]);
            d.border_high_mhz = hi;
        }
        plan.drives.push_back(d);
    }

    double low = 0.0, high = INFINITY;
    for (const auto& s : states) {
        auto& reps = plan.reports[s];
        for (const auto& d : plan.drives) reps.push_back(bifurcation(s, params, kappa, d.delta_c_mhz));
        if (s.odd()) {
            double best = INFINITY;
            for (const auto& r : reps)
                if (r.exists) best = std::min(best, *r.epsilon2);
            if (!std::isfinite(best))
                throw ValidationError("empty drive window: odd state " + s.label() +
                                      " does not bifurcate at any planned drive");
            low = std::max(low, best);
        } else {
            for (const auto& r : reps)
                if (r.exists) high = std::min(high, *r.epsilon2);
        }
    }
    if (!(low < high))
        throw ValidationError("empty drive window: odd states need eps > " + std::to_string(low) +
                              " MHz but an even state bifurcates at " + std::to_string(high) + " MHz");
    plan.window = {low, high};
    plan.operating_epsilon_mhz = std::isfinite(high) ? plan.window.centre() : 2.0 * low;

    for (const auto& s : states) {
        std::vector<bool> flags;
        for (const auto& r : plan.reports[s]) {
            const bool bright = r.exists && *r.epsilon2 < plan.operating_epsilon_mhz;
            flags.push_back(bright);
            plan.predicted[s].push_back(bright ? Outcome::bright : Outcome::dark);
        }
        plan.overall[s] = classify(flags);
    }
    return plan;
}

TwoQubitParityPoint two_qubit_parity_point(const DeviceSpec& device) {
    if (device.num_qubits() != 2) throw ValidationError("two-qubit parity point needs exactly two qubits");
    const ParityPlan plan = parity_plan(device);
    const PlannedDrive& d = plan.drives.front();
    return {d.delta_c_mhz, d.drive_frequency_ghz, plan.window, d.border_low_mhz, *d.border_high_mhz};
}

PlanCheck check_plan(const ParityPlan& plan, const DeviceSpec& device, int sweep_points, unsigned threads) {
    const SpectralParams params = detunings_and_lambdas(device);
    const auto states = all_states(device.num_qubits());
    const double eps = plan.operating_epsilon_mhz;
    // Start four decades below the operating point: deep in the linear regime.
    const auto grid = db_grid(epsilon_to_db(eps) - 80.0, epsilon_to_db(eps), sweep_points);

    std::vector<std::vector<double>> photons(states.size());
    std::vector<std::vector<bool>> jumped(states.size());
    detail::parallel_for(states.size(), threads, [&](std::size_t i) {
        for (const auto& d : plan.drives) {
            auto sweep = sweep_drive(grid, SweepDirection::up, states[i], params, plan.kappa_mhz, d.delta_c_mhz);
            photons[i].push_back(sweep.points.back().result.n);
            jumped[i].push_back(sweep.jump_index.has_value());
        }
    });

    PlanCheck out;
    out.min_bright = INFINITY;
    out.outcomes_match = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        out.photons[s] = photons[i];
        out.observed[s] = classify(jumped[i]);
        const auto& pred = plan.predicted.at(s);
        for (std::size_t j = 0; j < pred.size(); ++j) {
            if (pred[j] == Outcome::bright)
                out.min_bright = std::min(out.min_bright, photons[i][j]);
            else
                out.max_dark = std::max(out.max_dark, photons[i][j]);
            if ((pred[j] == Outcome::bright) != jumped[i][j]) out.outcomes_match = false;
        }
    }
    return out;
}

}  // namespace cqed
