#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddlab/sequence.hpp"
#include "ddlab/spectrum.hpp"

namespace ddlab {

// Coherence decay at one total duration: chi is the decay exponent,
// W = exp(-chi) the surviving coherence, p = (1 - W)/2 the error probability
// (normalized counts, saturating at 0.5).
struct CoherenceResult {
    double tau = 0.0;
    double chi = 0.0;
    double W = 1.0;
    double p = 0.0;
    double quadrature_error = 0.0;
    long evaluations = 0;
};

struct ChiOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int max_panels = 60000;
    // omega*tau below which the integrand uses the series expansion of F
    double series_below = 1e-4;
};

// chi = (2/pi) * int_0^inf S(w)/w^2 * F(w tau) dw by adaptive panel quadrature.
// Sharp cutoffs and spur edges are mandatory panel boundaries; panels are
// capped at pi/4 in omega*tau where the filter oscillates. Throws
// numeric_error if the tolerance cannot be met.
CoherenceResult chi(const PulseSequence& seq, const NoiseSpectrum& spectrum,
                    const ChiOptions& options = {});

struct DecayPoint {
    double tau = 0.0;
    std::optional<CoherenceResult> result;
    std::string error; // per-point validation failure, empty on success
};

// One CoherenceResult per tau, same fractional positions and tau_pi
// throughout. Points that fail sequence validation are reported, not fatal.
std::vector<DecayPoint> decay_curve(const std::vector<double>& deltas, double tau_pi,
                                    const NoiseSpectrum& spectrum,
                                    const std::vector<double>& tau_grid,
                                    const ChiOptions& options = {}, int threads = 0);

} // namespace ddlab
