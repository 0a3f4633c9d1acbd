#include "wgm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace wgm {

std::complex<double> transmission_amplitude(const CouplingRates& rates,
                                            double omega) {
  using namespace std::complex_literals;
  const std::complex<double> denom =
      1i * (omega - rates.omega_eff) - rates.kappa_total();
  return 1.0 + 2.0 * rates.kappa_in / denom;
}

double t_min(const CouplingRates& rates) {
  const double loss = rates.kappa_0 + 2.0 * rates.kappa_reservoir;
  const double ratio =
      (2.0 * rates.kappa_in - loss) / (2.0 * rates.kappa_in + loss);
  return ratio * ratio;
}

double excitation_efficiency(const CouplingRates& rates) {
  return 1.0 - std::norm(transmission_amplitude(rates, rates.omega_eff));
}

std::vector<SpectrumPoint> transmission_spectrum(
    const CouplingRates& rates, std::span<const double> omega_grid) {
  if (omega_grid.empty())
    throw std::invalid_argument("frequency grid is empty");
  if (!std::is_sorted(omega_grid.begin(), omega_grid.end()))
    throw std::invalid_argument("frequency grid must be sorted");

  std::vector<SpectrumPoint> out;
  out.reserve(omega_grid.size());
  for (double w : omega_grid) {
    out.push_back({w, w - rates.omega_eff,
                   std::norm(transmission_amplitude(rates, w))});
  }
  return out;
}

SteadyState langevin_time_domain(const CouplingRates& rates,
                                 const DriveSpec& drive, double horizon,
                                 double step, std::complex<double> initial) {
  const double decay = rates.kappa_total();
  const double detuning = drive.omega_drive - rates.omega_eff;
  if (!(decay > 0.0))
    throw std::invalid_argument("total decay rate must be positive");
  if (!(drive.amplitude >= 0.0))
    throw std::invalid_argument("drive amplitude must be non-negative");
  if (!(step > 0.0) ||
      !(step < 0.1 / std::max(std::abs(detuning), decay)))
    throw std::invalid_argument(
        "step must be below 0.1 / max(|detuning|, kappa_total)");
  if (!(horizon > 10.0 / decay))
    throw std::invalid_argument("horizon must exceed 10 / kappa_total");

  // Rotating frame at omega_drive: a' = (iΔ − κ) a − √(2κ_in) b_in.
  const std::complex<double> lambda{-decay, detuning};
  const double coupling = std::sqrt(2.0 * rates.kappa_in);
  const std::complex<double> forcing = -coupling * drive.amplitude;
  auto rhs = [&](std::complex<double> a) { return lambda * a + forcing; };

  const auto steps = static_cast<std::size_t>(std::ceil(horizon / step));
  const std::size_t checkpoint = steps - std::max<std::size_t>(steps / 10, 1);

  std::complex<double> a = initial;
  std::complex<double> at_checkpoint = a;
  for (std::size_t i = 0; i < steps; ++i) {
    if (i == checkpoint) at_checkpoint = a;
    const auto k1 = rhs(a);
    const auto k2 = rhs(a + 0.5 * step * k1);
    const auto k3 = rhs(a + 0.5 * step * k2);
    const auto k4 = rhs(a + step * k3);
    a += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const double scale = std::max({std::abs(a), std::abs(initial),
                                 coupling * drive.amplitude / decay});
  if (scale > 0.0 && std::abs(a - at_checkpoint) > 1e-9 * scale)
    throw ConvergenceError("time-domain run did not settle; extend the horizon");

  SteadyState out;
  out.a_plus = a;
  out.intracavity_flux_loss =
      (rates.kappa_0 + 2.0 * rates.kappa_reservoir) * std::norm(a);
  if (drive.amplitude > 0.0) {
    const std::complex<double> b_out = drive.amplitude + coupling * a;
    out.transmission = std::norm(b_out) / (drive.amplitude * drive.amplitude);
  }
  return out;
}

EfficiencyForms efficiency_forms(const CouplingRates& r) {
  const double k0 = r.kappa_0, kin = r.kappa_in, kr = r.kappa_reservoir;
  EfficiencyForms f;
  f.from_amplitude = excitation_efficiency(r);
  const double s_den = k0 + kin + kr;
  f.single_rate_form = 4.0 * kin * (k0 + kr) / (s_den * s_den);
  const double d_den = k0 + 2.0 * kin + 2.0 * kr;
  f.doubled_rate_form = 4.0 * kin * (k0 + 2.0 * kr) / (d_den * d_den);
  f.from_t_min = 2.0 * f.doubled_rate_form;
  return f;
}

}  // namespace wgm
