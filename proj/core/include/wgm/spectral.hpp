#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "wgm/coupling.hpp"

namespace wgm {

/// Coherent drive in the mean-field picture. The reservoir noise has zero
/// expectation and is dropped.
struct DriveSpec {
  double omega_drive = 0.0;  // rad/s
  double amplitude = 0.0;    // |b_in|, sqrt(photons/s)
};

struct SteadyState {
  std::complex<double> a_plus;  // slowly varying amplitude, frame of omega_drive
  double transmission = 1.0;    // |b_out/b_in|^2
  double intracavity_flux_loss = 0.0;  // (κ0 + 2κ_R)|a+|^2, photons/s
};

struct SpectrumPoint {
  double omega = 0.0;
  double detuning = 0.0;  // omega - omega_eff
  double transmission = 0.0;
};

/// Raised when the time-domain run has not settled by the end of the horizon.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// t(ω) = b_out/b_in = 1 + 2κ_in / [i(ω − ω_eff) − κ_total].
std::complex<double> transmission_amplitude(const CouplingRates& rates,
                                            double omega);

/// [(2κ_in − κ0 − 2κ_R) / (2κ_in + κ0 + 2κ_R)]², the on-resonance dip.
double t_min(const CouplingRates& rates);

/// η = 1 − |t(ω_eff)|², evaluated from the amplitude.
double excitation_efficiency(const CouplingRates& rates);

/// Throws std::invalid_argument for an empty or unsorted grid.
std::vector<SpectrumPoint> transmission_spectrum(const CouplingRates& rates,
                                                 std::span<const double> omega_grid);

/// Integrates da+/dt = −iω_eff a+ − κ_total a+ − √(2κ_in) b_in with RK4 in
/// the frame rotating at the drive frequency, starting from `initial`.
///
/// Preconditions (std::invalid_argument otherwise):
///   step < 0.1 / max(|ω_drive − ω_eff|, κ_total) and horizon > 10 / κ_total.
/// Throws ConvergenceError if |a+| still moves by more than 1e-9 (relative)
/// over the final tenth of the run.
SteadyState langevin_time_domain(const CouplingRates& rates,
                                 const DriveSpec& drive, double horizon,
                                 double step,
                                 std::complex<double> initial = {});

/// Alternative closed-form efficiency expressions next to the
/// amplitude-derived value, so their disagreement can be quantified.
struct EfficiencyForms {
  double from_amplitude = 0.0;     // 1 − |t(ω_eff)|²
  double single_rate_form = 0.0;   // 4κ_in(κ0+κ_R)/(κ0+κ_in+κ_R)²
  double doubled_rate_form = 0.0;  // 4κ_in(κ0+2κ_R)/(κ0+2κ_in+2κ_R)²
  double from_t_min = 0.0;         // 8κ_in(κ0+2κ_R)/(κ0+2κ_in+2κ_R)²
};

EfficiencyForms efficiency_forms(const CouplingRates& rates);

}  // namespace wgm
