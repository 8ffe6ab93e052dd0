#pragma once

#include <complex>
#include <vector>

#include "afc/comb.hpp"
#include "afc/response.hpp"

namespace afc::mb {

// Discretized atomic medium: detuning bins with comb-density weights
// C(D_k) dD, shared by every one of the n_z + 1 depth nodes of a unit-length
// medium. strength is the coupling product (beta g L) calibrated so that the
// narrowband intensity transmission at band center equals e^{-d0}.
struct AtomGrid {
  std::vector<double> detuning;
  std::vector<double> weight;
  int n_z = 200;
  double strength = 0.0;
  double cbar0 = 0.0;         // coarse-grained density at zero detuning
  double revival_time = 0.0;  // 2pi/delta for combs; 0 when not periodic

  static AtomGrid from_comb(const CombSpec& spec, int n_teeth_half = 15, int bins_per_b = 8,
                            int n_z = 200);
  static AtomGrid from_line(const LineShape& line, double half_span, int n_bins, int n_z = 200);

  // Two Lorentzian side lines, finely binned near the cores with coarse wing
  // bins carrying the tail mass out to +/- wing_span around each center.
  void add_sidelines(const MafcDesign& design, double wing_span = 1.5);

  // Strength that would reproduce d0 in the continuum limit; calibration
  // starts from here.
  double analytic_strength(double d0) const;

  double max_abs_detuning() const;
  double total_weight() const;
};

// Transform-limited Gaussian input pulse, |A(t)|^2 FWHM = zeta / delta_p.
struct PulseSpec {
  double delta_p = 0.5;
  double t_center = 0.0;

  double duration() const;  // intensity FWHM
  std::complex<double> amplitude(double t) const;
};

// Field histories plus the final coherence state; time in units of the
// inverse envelope width, z scaled to [0, 1].
struct FieldRecord {
  double t_start = 0.0;
  double dt = 0.0;
  std::vector<std::complex<double>> a_in;        // input at z = 0
  std::vector<std::complex<double>> a_out;       // transmitted at z = 1
  std::vector<std::complex<double>> coherence;   // S at final time, k-major
  double t_end = 0.0;
  double energy_in = 0.0;
  double energy_out = 0.0;
  double energy_stored = 0.0;  // (beta/g) sum w |S|^2 dz at t_end

  std::vector<double> times() const;
};

struct RetrievalRecord {
  double t_start = 0.0;
  double dt = 0.0;
  std::vector<std::complex<double>> a_back;  // retrieved field at z = 0
  double energy_back = 0.0;
  double energy_stored_end = 0.0;

  std::vector<double> times() const;
};

// March the storage phase over [t_start, t_end]. The coherence equation
// dS_k/dt = -i D_k S_k + i g A is integrated with an exact rotation plus
// trapezoidal drive; the field obeys dA/dz = i beta <S> with a semi-implicit
// trapezoid in z. Second order in dt and dz. Throws StabilityError when
// dt > 1/(10 max|D_k|).
FieldRecord simulate_storage(const AtomGrid& atoms, const PulseSpec& pulse, double t_start,
                             double t_end, double dt);

// Continue from a stored record: idealized counterpropagating pi-pulse pair
// at t1 = record.t_end (the pair flips the coherence sign), then march the
// backward field from z = 1 (where it vanishes) to z = 0 until t_end.
// Throws ProtocolError unless t1 falls after the input pulse has fully
// entered and before the first revival.
RetrievalRecord simulate_backward_retrieval(const AtomGrid& atoms, const PulseSpec& pulse,
                                            const FieldRecord& record, double t_end);

// Fix atoms.strength so the measured -ln T(0) of a narrowband probe matches
// d0 within 1e-4, by bisection seeded at the analytic strength. Returns the
// number of simulation runs spent.
int calibrate_strength(AtomGrid& atoms, double d0, double dt);

struct GammaProbe {
  std::vector<double> omega;
  std::vector<std::complex<double>> gamma;
  std::vector<uint8_t> resolved;  // probe spectrum above 1% of its peak
};

// Echo run + spectral division: Gamma_emp(w) = FT[A_r](w) e^{-i w t_rev} /
// (kappa~ FT[A_p](w)) on resolved bins, with t_rev the comb revival time.
GammaProbe empirical_gamma(const AtomGrid& atoms, const PulseSpec& pulse,
                           std::complex<double> kappa_tilde, double t_start, double t_switch,
                           double t_end, double dt);

// Frequency-domain z-ODE oracle for the retrieval efficiency at one (d, r):
// forward-attenuated source integrated along the backward pass, RK4 with
// n_z steps. Independent of the closed-form Gamma expression.
std::complex<double> zode_gamma(double d, double r, int n_z = 2000);

}  // namespace afc::mb
