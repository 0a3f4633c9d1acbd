#pragma once

#include "wgm/params.hpp"

namespace wgm {

/// Scattering-induced rates for one standing-mode pair, all in rad/s.
///
/// The scatterer splits the CW/CCW degenerate pair into standing modes
/// a± = (a_CW ± a_CCW)/√2. Only a+ couples to the scatterer; it sits at
/// `omega_eff = omega - 2*g_self`. a- is dark and does not appear here.
///
/// For the excitation mode `kappa_reservoir` is the free-space decay κ_R.
/// For the lasing mode it is the out-coupling κ_out and `kappa_in` is zero.
struct CouplingRates {
  double g_self = 0.0;
  double kappa_in = 0.0;
  double kappa_reservoir = 0.0;
  double kappa_0 = 0.0;
  double omega = 0.0;
  double omega_eff = 0.0;

  /// Amplitude decay rate of a+: κ0/2 + κ_in + κ_R.
  double kappa_total() const { return 0.5 * kappa_0 + kappa_in + kappa_reservoir; }

  bool operator==(const CouplingRates&) const = default;
};

/// g = α ω f(0)² / (2 ε_c V).
double mode_shift(double alpha, double omega, double f0, double eps_c,
                  double volume);

/// κ_in = α² f(0)² ω (ω − 2g) / (4 ε_c c V A_s). Throws for A_s <= 0.
double kappa_in(double alpha, double f0, double omega, double omega_eff,
                double eps_c, double volume, double mode_area);

/// κ_R = (n⁵+1) α² ω (ω − 2g)³ f(0)² / (12 π c³ ε_c V).
double kappa_reservoir(double alpha, double f0, double omega, double omega_eff,
                       double eps_c, double volume, double index);

/// Input-to-WGM coupling coefficient g_in(ω) (sign dropped). Only κ_in is
/// used downstream; 2π g_in(ω_eff)² reproduces it.
double input_coupling(double alpha, double f0, double omega, double omega_probe,
                      double eps_c, double volume, double mode_area);

/// Rates for the pumped mode. `mode_area` is A_s at the scatterer.
CouplingRates excitation_rates(const SystemParams& params, double mode_area);

/// Rates for the lasing mode; κ_in = 0, κ_reservoir = κ_out.
CouplingRates lasing_rates(const SystemParams& params);

}  // namespace wgm
