#pragma once

#include <vector>

#include "ddlab/sequence.hpp"

namespace ddlab {

enum class FilterVariant { delta_pulse, finite_pulse };

// Sampled filter function F(omega*tau) for one sequence.
struct FilterEvaluation {
    PulseSequence sequence;
    std::vector<double> omega_tau;
    std::vector<double> F;
    FilterVariant variant = FilterVariant::finite_pulse;
};

// Closed-form filter function
//   F(x) = |1 + (-1)^{n+1} e^{ix} + 2 sum_j (-1)^j e^{i delta_j x} cos(phi_pi x / 2)|^2
// with x = omega*tau and phi_pi = tau_pi/tau. Evaluated with a single complex
// accumulator in double precision; falls back to __float128 wherever the
// double result drops below 1e-8, where cancellation noise would dominate.
double filter_function(const PulseSequence& seq, double omega_tau);

// Same sequence with the pulses treated as instantaneous (tau_pi = 0 in the
// cosine factor).
double filter_function_delta(const PulseSequence& seq, double omega_tau);

FilterEvaluation evaluate_filter(const PulseSequence& seq, std::vector<double> omega_tau,
                                 FilterVariant variant);

// Independent route: omega^2 |FT of the rendered time-domain filter|^2 with
// each piecewise-constant segment integrated exactly. Oracle for
// filter_function; shares only the escalation rule, not the algebra.
std::vector<double> filter_via_fft_oracle(const PulseSequence& seq,
                                          const std::vector<double>& omega_tau);

// Taylor expansion of F about omega*tau = 0, built from the moments of the
// rendered time-domain filter. Moments below 1e-12 are treated as exact zeros,
// which evaluates the sequence's ideal suppression order free of the
// cancellation that kills direct evaluation at small arguments.
class FilterSeries {
public:
    FilterSeries(const PulseSequence& seq, FilterVariant variant);

    double operator()(double omega_tau) const;   // F(x)
    double reduced(double omega_tau) const;      // F(x) / x^2
    int suppression_order() const { return 2 * (k0_ + 1); } // F ~ x^order
    // Truncation stays below 1e-12 relative for arguments up to this.
    static constexpr double valid_limit = 1.0;

private:
    std::vector<double> coeff_; // nu_k / k! for k = k0 .. k0+extra
    int k0_ = 0;
};

// Log-spaced grid helper shared by the CLI and tests.
std::vector<double> log_spaced(double lo, double hi, int points);

} // namespace ddlab
