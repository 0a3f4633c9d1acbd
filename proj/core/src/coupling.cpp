#include "wgm/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "wgm/constants.hpp"

namespace wgm {

double mode_shift(double alpha, double omega, double f0, double eps_c,
                  double volume) {
  return alpha * omega * f0 * f0 / (2.0 * eps_c * volume);
}

double kappa_in(double alpha, double f0, double omega, double omega_eff,
                double eps_c, double volume, double mode_area) {
  if (!(mode_area > 0.0))
    throw std::invalid_argument("mode area must be positive");
  return alpha * alpha * f0 * f0 * omega * omega_eff /
         (4.0 * eps_c * kSpeedOfLight * volume * mode_area);
}

double kappa_reservoir(double alpha, double f0, double omega, double omega_eff,
                       double eps_c, double volume, double index) {
  const double c = kSpeedOfLight;
  const double n5 = std::pow(index, 5);
  return (n5 + 1.0) * alpha * alpha * omega * omega_eff * omega_eff *
         omega_eff * f0 * f0 / (12.0 * kPi * c * c * c * eps_c * volume);
}

double input_coupling(double alpha, double f0, double omega, double omega_probe,
                      double eps_c, double volume, double mode_area) {
  if (!(mode_area > 0.0))
    throw std::invalid_argument("mode area must be positive");
  return 0.5 * alpha * f0 *
         std::sqrt(omega * omega_probe /
                   (2.0 * kPi * eps_c * kSpeedOfLight * volume * mode_area));
}

namespace {

CouplingRates rates_for(const SystemParams& p, const ModeSpec& mode,
                        double omega, double volume) {
  const auto& d = p.derived;
  CouplingRates r;
  r.omega = omega;
  r.g_self = mode_shift(d.polarizability, omega, mode.field_at_scatterer,
                        d.cavity_permittivity, volume);
  r.omega_eff = omega - 2.0 * r.g_self;
  if (!(r.omega_eff > 0.0))
    throw std::domain_error("scatterer shift exceeds the mode frequency");
  r.kappa_reservoir =
      kappa_reservoir(d.polarizability, mode.field_at_scatterer, omega,
                      r.omega_eff, d.cavity_permittivity, volume, p.sphere.index);
  r.kappa_0 = omega / p.sphere.q0;
  return r;
}

}  // namespace

CouplingRates excitation_rates(const SystemParams& p, double mode_area) {
  auto r = rates_for(p, p.pump, p.derived.omega_pump, p.derived.volume_pump);
  r.kappa_in = kappa_in(p.derived.polarizability, p.pump.field_at_scatterer,
                        r.omega, r.omega_eff, p.derived.cavity_permittivity,
                        p.derived.volume_pump, mode_area);
  return r;
}

CouplingRates lasing_rates(const SystemParams& p) {
  return rates_for(p, p.lasing, p.derived.omega_lasing, p.derived.volume_lasing);
}

}  // namespace wgm
