#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/stability.hpp"
#include "cqed/steadystate.hpp"

namespace cqed {

enum class Outcome { dark, bright };
enum class Parity { even, odd };

std::string to_string(Outcome o);
std::string to_string(Parity p);

using ChiTable = std::map<LogicalState, double>;

// n -> 0 shift of every logical state, MHz.
ChiTable bare_chi_table(const DeviceSpec& device);

// delta_c at which the existence of a bifurcation flips for `state`, found by
// bisection on the sign/threshold condition. The bare-shift rule -chi is kept
// alongside as a diagnostic.
struct StabilityBorder {
    double delta_c_mhz;
    double proxy_mhz;           // -chi_state from the bare table
    double occupied_proxy_mhz;  // -chi(0) with the level occupations kept
};
StabilityBorder stability_border(const LogicalState& state, const DeviceSpec& device);
StabilityBorder stability_border(const LogicalState& state, const SpectralParams& params, double kappa_mhz);

struct EpsilonWindow {
    double low_mhz = 0.0;
    double high_mhz = 0.0;

    double width() const { return high_mhz - low_mhz; }
    bool contains(double eps) const { return eps > low_mhz && eps < high_mhz; }
    // Geometric centre; the window spans several dB in practice.
    double centre() const;
};

struct TwoQubitParityPoint {
    double delta_c_opt_mhz;
    double drive_frequency_ghz;
    EpsilonWindow window;
    double odd_border_mhz;   // border of the odd state closest to the even one
    double even_border_mhz;  // border of |11>
    double border_width_mhz() const { return even_border_mhz - odd_border_mhz; }
};

// Single-drive operating point for N = 2: drive halfway between the bare
// shifts of |10> and |11>, window bounded by the bifurcation drive strengths of
// the odd states (below) and of the bifurcating even states (above).
TwoQubitParityPoint two_qubit_parity_point(const DeviceSpec& device);

struct PlannedDrive {
    int odd_class;  // excitation count this drive lights up
    double drive_frequency_ghz;
    double delta_c_mhz;
    // delta_c interval in which the odd class bifurcates and the class above
    // does not; open above when the odd class is the top class.
    double border_low_mhz;
    std::optional<double> border_high_mhz;
};

struct ParityPlan {
    double kappa_mhz;
    std::vector<PlannedDrive> drives;
    EpsilonWindow window;  // intersected over drives
    double operating_epsilon_mhz;
    std::map<LogicalState, std::vector<BifurcationReport>> reports;  // per drive
    std::map<LogicalState, std::vector<Outcome>> predicted;          // per drive
    std::map<LogicalState, Parity> overall;
};

// One drive per odd excitation class, ceil(N/2) in total. Throws
// ValidationError for N < 2 or when no drive strength separates the classes.
ParityPlan parity_plan(const DeviceSpec& device);

Parity classify(const std::vector<bool>& bright);

// Full-model check of a plan: each state is swept up from a weak drive to the
// operating drive strength at every planned detuning.
struct PlanCheck {
    std::map<LogicalState, std::vector<double>> photons;  // per drive
    std::map<LogicalState, Parity> observed;              // jump seen at any drive
    double min_bright = 0.0;
    double max_dark = 0.0;
    double contrast() const { return max_dark > 0 ? min_bright / max_dark : INFINITY; }
    bool outcomes_match = false;
    bool sound(double required_contrast = 1e4) const { return outcomes_match && contrast() >= required_contrast; }
};
PlanCheck check_plan(const ParityPlan& plan, const DeviceSpec& device, int sweep_points = 400,
                     unsigned threads = 0);

}  // namespace cqed
