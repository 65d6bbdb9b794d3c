#include "ddlab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"

namespace ddlab {

std::vector<double> cpmg_positions(int n) {
    if (n < 1)
        throw validation_error("cpmg_positions: n must be >= 1 (use make_sequence with "
                               "empty deltas for free evolution)");
    std::vector<double> d(n);
    for (int j = 1; j <= n; ++j)
        d[j - 1] = (2.0 * j - 1.0) / (2.0 * n);
    return d;
}

std::vector<double> udd_positions(int n) {
    if (n < 1)
        throw validation_error("udd_positions: n must be >= 1 (use make_sequence with "
                               "empty deltas for free evolution)");
    std::vector<double> d(n);
    for (int j = 1; j <= n; ++j) {
        const double s = std::sin(std::numbers::pi * j / (2.0 * n + 2.0));
        d[j - 1] = s * s;
    }
    return d;
}

std::vector<double> pdd_positions(int n) {
    if (n < 1)
        throw validation_error("pdd_positions: n must be >= 1 (use make_sequence with "
                               "empty deltas for free evolution)");
    std::vector<double> d(n);
    for (int j = 1; j <= n; ++j)
        d[j - 1] = static_cast<double>(j) / (n + 1.0);
    return d;
}

PulseSequence make_sequence(std::vector<double> deltas, double tau, double tau_pi,
                            std::string label) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw validation_error("make_sequence: tau must be positive and finite");
    if (!(tau_pi >= 0.0) || !std::isfinite(tau_pi))
        throw validation_error("make_sequence: tau_pi must be nonnegative and finite");

    const int n = static_cast<int>(deltas.size());
    for (int j = 0; j < n; ++j) {
        if (!std::isfinite(deltas[j]) || deltas[j] <= 0.0 || deltas[j] >= 1.0)
            throw validation_error("make_sequence: pulse center " + std::to_string(j + 1) +
                                   " lies outside (0, 1)");
    }
    for (int j = 0; j + 1 < n; ++j) {
        if (!(deltas[j] < deltas[j + 1]))
            throw validation_error("make_sequence: pulse centers not strictly increasing at "
                                   "index " + std::to_string(j + 1));
    }
    if (n > 0) {
        if (!(deltas.front() * tau - tau_pi / 2.0 >= 0.0))
            throw validation_error("make_sequence: first pulse extends before t = 0");
        if (!(deltas.back() * tau + tau_pi / 2.0 <= tau))
            throw validation_error("make_sequence: last pulse extends beyond t = tau");
        for (int j = 0; j + 1 < n; ++j) {
            if (!((deltas[j + 1] - deltas[j]) * tau >= tau_pi))
                throw validation_error("make_sequence: pulses " + std::to_string(j + 1) +
                                       " and " + std::to_string(j + 2) + " overlap");
        }
    } else if (tau_pi > 0.0) {
        throw validation_error("make_sequence: tau_pi > 0 is meaningless with no pulses");
    }

    PulseSequence seq;
    seq.deltas = std::move(deltas);
    seq.tau = tau;
    seq.tau_pi = tau_pi;
    seq.label = std::move(label);
    return seq;
}

double sequence_violation(const std::vector<double>& deltas, double tau, double tau_pi) {
    const int n = static_cast<int>(deltas.size());
    const double phi = tau > 0.0 ? tau_pi / tau : 0.0;
    double v = 0.0;
    for (int j = 0; j < n; ++j) {
        if (!std::isfinite(deltas[j])) return 1e9;
        v += std::max(0.0, -deltas[j]) + std::max(0.0, deltas[j] - 1.0);
    }
    if (n > 0) {
        v += std::max(0.0, phi / 2.0 - deltas.front());
        v += std::max(0.0, deltas.back() + phi / 2.0 - 1.0);
        for (int j = 0; j + 1 < n; ++j)
            v += std::max(0.0, phi - (deltas[j + 1] - deltas[j]));
    }
    return v;
}

double max_tau_pi(const std::vector<double>& deltas, double tau) {
    if (deltas.empty()) return 0.0;
    double limit = std::min(2.0 * deltas.front(), 2.0 * (1.0 - deltas.back()));
    for (size_t j = 0; j + 1 < deltas.size(); ++j)
        limit = std::min(limit, deltas[j + 1] - deltas[j]);
    return limit * tau;
}

TimeDomainFilter render_time_domain(const PulseSequence& seq, double resolution) {
    std::vector<double> centers(seq.deltas.size());
    for (size_t j = 0; j < seq.deltas.size(); ++j) {
        double t = seq.deltas[j] * seq.tau;
        if (resolution > 0.0)
            t = std::round(t / resolution) * resolution;
        centers[j] = t;
    }
    if (resolution > 0.0) {
        // re-check layout after snapping; quantization can merge close pulses
        for (size_t j = 0; j < centers.size(); ++j) {
            if (centers[j] - seq.tau_pi / 2.0 < 0.0 || centers[j] + seq.tau_pi / 2.0 > seq.tau)
                throw validation_error("render_time_domain: quantized pulse extends outside "
                                       "[0, tau]");
            if (j + 1 < centers.size() && centers[j + 1] - centers[j] < seq.tau_pi)
                throw validation_error("render_time_domain: quantized pulses overlap");
        }
    }

    TimeDomainFilter f;
    f.tau = seq.tau;
    f.tau_pi = seq.tau_pi;
    int sign = +1;
    double t = 0.0;
    for (double c : centers) {
        f.segments.push_back({t, c - seq.tau_pi / 2.0, sign});
        if (seq.tau_pi > 0.0)
            f.segments.push_back({c - seq.tau_pi / 2.0, c + seq.tau_pi / 2.0, 0});
        t = c + seq.tau_pi / 2.0;
        sign = -sign;
    }
    f.segments.push_back({t, seq.tau, sign});
    return f;
}

} // namespace ddlab
