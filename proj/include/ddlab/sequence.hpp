#pragma once

#include <string>
#include <vector>

namespace ddlab {

// A dynamical-decoupling pulse sequence: n pi pulses with fractional centers
// delta_j in (0,1) of the total duration tau (free precession plus pulse time).
// Immutable by convention once built through make_sequence.
struct PulseSequence {
    std::vector<double> deltas; // strictly increasing pulse centers, fractions of tau
    double tau = 0.0;           // total sequence duration [s]
    double tau_pi = 0.0;        // pi-pulse duration [s]
    std::string label;

    int n() const { return static_cast<int>(deltas.size()); }
    double phi_pi() const { return n() == 0 && tau_pi == 0.0 ? 0.0 : tau_pi / tau; }
};

// Fractional pulse positions for the standard families. n >= 1.
std::vector<double> cpmg_positions(int n); // (2j-1)/(2n)
std::vector<double> udd_positions(int n);  // sin^2(pi j / (2n+2))
std::vector<double> pdd_positions(int n);  // j/(n+1)

// Validated construction. Throws validation_error with a distinct diagnostic per
// failure: ordering, overlap, pulse outside [0, tau], bad tau/tau_pi.
// Empty deltas with tau_pi = 0 gives free evolution (Ramsey).
PulseSequence make_sequence(std::vector<double> deltas, double tau, double tau_pi,
                            std::string label = {});

// Sum of constraint deficits in fractions of tau; zero iff the layout is valid.
// Used as the optimizer's penalty measure.
double sequence_violation(const std::vector<double>& deltas, double tau, double tau_pi);

// Largest tau_pi the validator accepts for these fractional positions at duration tau.
double max_tau_pi(const std::vector<double>& deltas, double tau);

struct FilterSegment {
    double t0 = 0.0; // [s]
    double t1 = 0.0; // [s]
    int value = 0;   // +1, 0, -1
};

// Piecewise-constant time-domain filter y(t) covering [0, tau]: +1 until the
// first pulse, 0 during each pulse window of width tau_pi, sign flip across
// each pulse, ending at (-1)^n.
struct TimeDomainFilter {
    std::vector<FilterSegment> segments;
    double tau = 0.0;
    double tau_pi = 0.0;
};

// resolution > 0 snaps pulse centers onto that timing grid before rendering
// (hardware-style quantization); stored fractions are never modified.
TimeDomainFilter render_time_domain(const PulseSequence& seq, double resolution = 0.0);

} // namespace ddlab
