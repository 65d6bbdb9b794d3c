#include "ddlab/filter.hpp"

#include <cmath>
#include <complex>

#include <quadmath.h>

#include "ddlab/errors.hpp"

namespace ddlab {

namespace {

// Below this the double-precision result is cancellation noise, not signal.
constexpr double kEscalateBelowF = 1e-8;

double filter_direct(const std::vector<double>& deltas, double phi_pi, double x) {
    const int n = static_cast<int>(deltas.size());
    const double cosf = std::cos(0.5 * phi_pi * x);
    const double sb = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
    double re = 1.0 + sb * std::cos(x);
    double im = sb * std::sin(x);
    double sign = -1.0;
    for (int j = 0; j < n; ++j) {
        re += 2.0 * sign * cosf * std::cos(deltas[j] * x);
        im += 2.0 * sign * cosf * std::sin(deltas[j] * x);
        sign = -sign;
    }
    return re * re + im * im;
}

double filter_direct_f128(const std::vector<double>& deltas, double phi_pi, double x_in) {
    const int n = static_cast<int>(deltas.size());
    const __float128 x = x_in;
    __float128 s, c;
    sincosq(__float128(0.5) * __float128(phi_pi) * x, &s, &c);
    const __float128 cosf = c;
    const __float128 sb = (n % 2 == 0) ? -1 : 1;
    sincosq(x, &s, &c);
    __float128 re = 1 + sb * c;
    __float128 im = sb * s;
    __float128 sign = -1;
    for (int j = 0; j < n; ++j) {
        sincosq(__float128(deltas[j]) * x, &s, &c);
        re += 2 * sign * cosf * c;
        im += 2 * sign * cosf * s;
        sign = -sign;
    }
    return static_cast<double>(re * re + im * im);
}

double filter_eval(const std::vector<double>& deltas, double phi_pi, double x) {
    if (x < 0.0 || !std::isfinite(x))
        throw validation_error("filter_function: omega*tau must be nonnegative and finite");
    if (x == 0.0) return 0.0;
    const double f = filter_direct(deltas, phi_pi, x);
    if (f < kEscalateBelowF)
        return filter_direct_f128(deltas, phi_pi, x);
    return f;
}

struct UnitSegment {
    double u0, u1; // fractions of tau
    double s;      // +1 or -1
};

std::vector<UnitSegment> unit_segments(const PulseSequence& seq) {
    const TimeDomainFilter td = render_time_domain(seq);
    std::vector<UnitSegment> segs;
    for (const auto& sg : td.segments)
        if (sg.value != 0 && sg.t1 > sg.t0)
            segs.push_back({sg.t0 / seq.tau, sg.t1 / seq.tau, static_cast<double>(sg.value)});
    return segs;
}

// |sum_seg s (e^{i x u1} - e^{i x u0})|^2 == omega^2 |FT of y|^2 at x = omega tau
double oracle_direct(const std::vector<UnitSegment>& segs, double x) {
    double re = 0.0, im = 0.0;
    for (const auto& sg : segs) {
        re += sg.s * (std::cos(x * sg.u1) - std::cos(x * sg.u0));
        im += sg.s * (std::sin(x * sg.u1) - std::sin(x * sg.u0));
    }
    return re * re + im * im;
}

double oracle_f128(const std::vector<UnitSegment>& segs, double x_in) {
    const __float128 x = x_in;
    __float128 re = 0, im = 0, s, c, s0, c0;
    for (const auto& sg : segs) {
        sincosq(x * __float128(sg.u1), &s, &c);
        sincosq(x * __float128(sg.u0), &s0, &c0);
        re += __float128(sg.s) * (c - c0);
        im += __float128(sg.s) * (s - s0);
    }
    return static_cast<double>(re * re + im * im);
}

} // namespace

double filter_function(const PulseSequence& seq, double omega_tau) {
    return filter_eval(seq.deltas, seq.phi_pi(), omega_tau);
}

double filter_function_delta(const PulseSequence& seq, double omega_tau) {
    return filter_eval(seq.deltas, 0.0, omega_tau);
}

FilterEvaluation evaluate_filter(const PulseSequence& seq, std::vector<double> omega_tau,
                                 FilterVariant variant) {
    FilterEvaluation out;
    out.sequence = seq;
    out.variant = variant;
    out.F.reserve(omega_tau.size());
    const double phi = variant == FilterVariant::finite_pulse ? seq.phi_pi() : 0.0;
    for (double x : omega_tau)
        out.F.push_back(filter_eval(seq.deltas, phi, x));
    out.omega_tau = std::move(omega_tau);
    return out;
}

std::vector<double> filter_via_fft_oracle(const PulseSequence& seq,
                                          const std::vector<double>& omega_tau) {
    const auto segs = unit_segments(seq);
    std::vector<double> F;
    F.reserve(omega_tau.size());
    for (double x : omega_tau) {
        if (x < 0.0 || !std::isfinite(x))
            throw validation_error("filter_via_fft_oracle: omega*tau must be nonnegative");
        double f = oracle_direct(segs, x);
        if (x != 0.0 && f < kEscalateBelowF)
            f = oracle_f128(segs, x);
        F.push_back(f);
    }
    return F;
}

FilterSeries::FilterSeries(const PulseSequence& seq, FilterVariant variant) {
    PulseSequence s = seq;
    if (variant == FilterVariant::delta_pulse) s.tau_pi = 0.0;
    const auto segs = unit_segments(s);

    constexpr double kMomentTol = 1e-12;
    constexpr int kMaxLead = 80; // beyond this every moment is treated as zero
    constexpr int kExtra = 28;   // terms kept past the leading one

    // nu_k = int_0^1 y(u) u^k du over the +-1 segments
    std::vector<double> lead_pow0(segs.size(), 1.0), lead_pow1(segs.size(), 1.0);
    int k = 0;
    k0_ = -1;
    std::vector<double> nus;
    while (k <= kMaxLead + kExtra) {
        double nu = 0.0;
        for (size_t i = 0; i < segs.size(); ++i) {
            lead_pow0[i] *= segs[i].u0;
            lead_pow1[i] *= segs[i].u1;
            nu += segs[i].s * (lead_pow1[i] - lead_pow0[i]) / (k + 1);
        }
        if (k0_ < 0) {
            if (std::abs(nu) >= kMomentTol) {
                k0_ = k;
                nus.push_back(nu);
            } else if (k == kMaxLead) {
                break; // fully suppressed beyond representable interest
            }
        } else {
            nus.push_back(nu);
            if (static_cast<int>(nus.size()) > kExtra) break;
        }
        ++k;
    }

    if (k0_ < 0) { // F is zero to machine precision near x = 0
        k0_ = kMaxLead;
        coeff_.assign(1, 0.0);
        return;
    }
    coeff_.resize(nus.size());
    double inv_fact = 1.0;
    for (int m = 1; m <= k0_; ++m) inv_fact /= m;
    for (size_t m = 0; m < nus.size(); ++m) {
        coeff_[m] = nus[m] * inv_fact;
        inv_fact /= (k0_ + static_cast<int>(m) + 1);
    }
}

double FilterSeries::reduced(double x) const {
    if (x < 0.0 || !std::isfinite(x))
        throw validation_error("FilterSeries: omega*tau must be nonnegative and finite");
    // H(z) = sum_m coeff[m] z^m at z = ix, by complex Horner
    double hre = 0.0, him = 0.0;
    for (size_t m = coeff_.size(); m-- > 0;) {
        const double tre = -x * him + coeff_[m];
        him = x * hre;
        hre = tre;
    }
    const double mag2 = hre * hre + him * him;
    // |(ix)^{k0}|^2 = x^{2 k0}
    return std::pow(x, 2 * k0_) * mag2;
}

double FilterSeries::operator()(double x) const { return x * x * reduced(x); }

std::vector<double> log_spaced(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw validation_error("log_spaced: require 0 < lo < hi and points >= 2");
    std::vector<double> g(points);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace ddlab
