#include "ddlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"

namespace ddlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Preset scale anchors. Unit alpha pins the bare-qubit decay to the paper's
// laboratory timescales: ambient gives a 1 ms Ramsey 1/e time, the injected
// spectra give a 1 ms Hahn-echo 1/e time. Computed once by quadrature of
// chi(tau = 1 ms) = 1 and frozen here.
constexpr double kAmbientAmplitude = 1.1665792801326788e3;   // S = A/omega^4 above 2*pi*0.01
constexpr double kOhmicAmplitude = 6.674345600937201e-2;     // S = A*omega below 2*pi*500
constexpr double kOneOverOmegaAmplitude = 1.3013764000394347e2; // S = A/omega on the band

// Peak of the 153 Hz spur at gamma = 1, relative to the ambient broadband
// level at the spur center. Sized so the paper's gamma = 0.23 fit reproduces
// a clear plateau in the n <= 10 decay curves.
constexpr double kAmbientSpurGain = 2.0e4;
constexpr double kSpurFractionalWidth = 0.01; // Gaussian sigma / center

} // namespace

NoiseSpectrum NoiseSpectrum::power_law(double exponent, double amplitude, double omega_lo,
                                       double omega_hi, CutoffStyle cutoff) {
    if (!std::isfinite(exponent))
        throw validation_error("power_law: exponent must be finite");
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
        throw validation_error("power_law: amplitude must be nonnegative and finite");
    if (!(omega_lo >= 0.0) || !std::isfinite(omega_lo))
        throw validation_error("power_law: omega_lo must be nonnegative and finite");
    if (cutoff == CutoffStyle::sharp) {
        if (!(omega_hi > omega_lo) || !std::isfinite(omega_hi))
            throw validation_error("power_law: sharp cutoff requires omega_lo < omega_hi < inf");
    } else if (!(exponent < -1.0)) {
        throw validation_error("power_law: without a sharp high cutoff the exponent must be "
                               "< -1 to keep the spectrum integrable");
    }
    if (exponent <= -1.0 && !(omega_lo > 0.0))
        throw validation_error("power_law: exponent <= -1 requires omega_lo > 0");

    NoiseSpectrum s;
    s.kind_ = Kind::power_law;
    s.exponent_ = exponent;
    s.amplitude_ = amplitude;
    s.omega_lo_ = omega_lo;
    s.omega_hi_ = cutoff == CutoffStyle::sharp ? omega_hi
                                               : std::numeric_limits<double>::infinity();
    s.cutoff_ = cutoff;
    return s;
}

NoiseSpectrum NoiseSpectrum::tabulated(std::vector<double> omega, std::vector<double> value) {
    if (omega.size() != value.size())
        throw validation_error("tabulated: frequency and value counts differ");
    if (omega.size() < 2)
        throw validation_error("tabulated: need at least 2 rows");
    for (size_t i = 0; i < omega.size(); ++i) {
        if (!std::isfinite(omega[i]) || omega[i] < 0.0)
            throw validation_error("tabulated: frequencies must be finite and nonnegative");
        if (!std::isfinite(value[i]) || value[i] < 0.0)
            throw validation_error("tabulated: values must be finite and nonnegative");
        if (i > 0 && !(omega[i] > omega[i - 1]))
            throw validation_error("tabulated: frequencies must be strictly increasing");
    }
    NoiseSpectrum s;
    s.kind_ = Kind::tabulated;
    s.tab_omega_ = std::move(omega);
    s.tab_value_ = std::move(value);
    return s;
}

NoiseSpectrum NoiseSpectrum::composite(std::vector<NoiseSpectrum> parts) {
    if (parts.empty())
        throw validation_error("composite: need at least one part");
    NoiseSpectrum s;
    s.kind_ = Kind::composite_sum;
    s.parts_ = std::move(parts);
    return s;
}

NoiseSpectrum NoiseSpectrum::ohmic_preset(double alpha, double cutoff_hz) {
    auto s = power_law(1.0, kOhmicAmplitude, 0.0, kTwoPi * cutoff_hz, CutoffStyle::sharp);
    s.set_alpha(alpha).set_label("ohmic");
    return s;
}

NoiseSpectrum NoiseSpectrum::one_over_omega_preset(double alpha, double cutoff_hz) {
    auto s = power_law(-1.0, kOneOverOmegaAmplitude, kTwoPi * 0.01, kTwoPi * cutoff_hz,
                       CutoffStyle::sharp);
    s.set_alpha(alpha).set_label("one-over-omega");
    return s;
}

NoiseSpectrum NoiseSpectrum::ambient_preset(double alpha, double gamma) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw validation_error("ambient_preset: gamma must be nonnegative and finite");
    auto s = power_law(-4.0, kAmbientAmplitude, kTwoPi * 0.01,
                       std::numeric_limits<double>::infinity(), CutoffStyle::none);
    const double center = kTwoPi * 153.0;
    const double base_at_center = kAmbientAmplitude * std::pow(center, -4.0);
    s.add_spur(center, kSpurFractionalWidth * center,
               gamma * kAmbientSpurGain * base_at_center, gamma);
    s.set_alpha(alpha).set_label("ambient");
    return s;
}

NoiseSpectrum& NoiseSpectrum::set_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("set_alpha: alpha must be nonnegative and finite");
    alpha_ = alpha;
    return *this;
}

NoiseSpectrum& NoiseSpectrum::add_spur(double center, double sigma, double height,
                                       double gamma) {
    if (!(center > 0.0) || !(sigma > 0.0) || !(height >= 0.0))
        throw validation_error("add_spur: require center > 0, sigma > 0, height >= 0");
    spurs_.push_back({center, sigma, height, gamma});
    return *this;
}

NoiseSpectrum& NoiseSpectrum::set_label(std::string label) {
    label_ = std::move(label);
    return *this;
}

double NoiseSpectrum::base_value(double omega) const {
    switch (kind_) {
    case Kind::power_law:
        if (omega < omega_lo_) return 0.0;
        if (cutoff_ == CutoffStyle::sharp && omega > omega_hi_) return 0.0;
        return amplitude_ * std::pow(omega, exponent_);
    case Kind::tabulated: {
        if (omega < tab_omega_.front() || omega > tab_omega_.back()) return 0.0;
        auto it = std::upper_bound(tab_omega_.begin(), tab_omega_.end(), omega);
        if (it == tab_omega_.end()) return tab_value_.back();
        size_t hi = static_cast<size_t>(it - tab_omega_.begin());
        if (hi == 0) return tab_value_.front();
        size_t lo = hi - 1;
        const double w0 = tab_omega_[lo], w1 = tab_omega_[hi];
        const double s0 = tab_value_[lo], s1 = tab_value_[hi];
        if (w0 > 0.0 && s0 > 0.0 && s1 > 0.0) {
            const double t = (std::log(omega) - std::log(w0)) / (std::log(w1) - std::log(w0));
            return std::exp(std::log(s0) + t * (std::log(s1) - std::log(s0)));
        }
        const double t = (omega - w0) / (w1 - w0);
        return s0 + t * (s1 - s0);
    }
    case Kind::composite_sum: {
        double sum = 0.0;
        for (const auto& p : parts_) sum += p.evaluate(omega);
        return sum;
    }
    }
    return 0.0;
}

double NoiseSpectrum::evaluate(double omega) const {
    if (omega < 0.0 || !std::isfinite(omega))
        throw validation_error("evaluate: omega must be nonnegative and finite");
    double v = base_value(omega);
    for (const auto& sp : spurs_) {
        const double d = omega - sp.center;
        if (std::abs(d) <= 5.0 * sp.sigma)
            v += sp.height * std::exp(-0.5 * d * d / (sp.sigma * sp.sigma));
    }
    return alpha_ * v;
}

double NoiseSpectrum::evaluate_broadband(double omega) const {
    if (omega < 0.0 || !std::isfinite(omega))
        throw validation_error("evaluate_broadband: omega must be nonnegative and finite");
    if (kind_ == Kind::composite_sum) {
        double sum = 0.0;
        for (const auto& p : parts_) sum += p.evaluate_broadband(omega);
        return alpha_ * sum;
    }
    return alpha_ * base_value(omega);
}

void NoiseSpectrum::collect_spurs_into(double mult, std::vector<GaussianSpur>& out) const {
    const double m = mult * alpha_;
    for (const auto& sp : spurs_)
        out.push_back({sp.center, sp.sigma, m * sp.height, sp.gamma});
    for (const auto& p : parts_)
        p.collect_spurs_into(m, out);
}

std::vector<GaussianSpur> NoiseSpectrum::collect_spurs() const {
    std::vector<GaussianSpur> out;
    collect_spurs_into(1.0, out);
    return out;
}

double NoiseSpectrum::min_support() const {
    double lo = std::numeric_limits<double>::infinity();
    switch (kind_) {
    case Kind::power_law: lo = omega_lo_; break;
    case Kind::tabulated: lo = tab_omega_.front(); break;
    case Kind::composite_sum:
        for (const auto& p : parts_) lo = std::min(lo, p.min_support());
        break;
    }
    for (const auto& sp : spurs_)
        lo = std::min(lo, std::max(0.0, sp.center - 5.0 * sp.sigma));
    return lo;
}

double NoiseSpectrum::max_support() const {
    double hi = 0.0;
    switch (kind_) {
    case Kind::power_law:
        hi = cutoff_ == CutoffStyle::sharp ? omega_hi_
                                           : std::numeric_limits<double>::infinity();
        break;
    case Kind::tabulated: hi = tab_omega_.back(); break;
    case Kind::composite_sum:
        for (const auto& p : parts_) hi = std::max(hi, p.max_support());
        break;
    }
    for (const auto& sp : spurs_)
        hi = std::max(hi, sp.center + 5.0 * sp.sigma);
    return hi;
}

void NoiseSpectrum::collect_breakpoints_into(std::vector<double>& out) const {
    switch (kind_) {
    case Kind::power_law:
        out.push_back(omega_lo_);
        if (cutoff_ == CutoffStyle::sharp) out.push_back(omega_hi_);
        break;
    case Kind::tabulated:
        out.push_back(tab_omega_.front());
        out.push_back(tab_omega_.back());
        break;
    case Kind::composite_sum:
        for (const auto& p : parts_) p.collect_breakpoints_into(out);
        break;
    }
    for (const auto& sp : spurs_) {
        out.push_back(std::max(0.0, sp.center - 5.0 * sp.sigma));
        out.push_back(sp.center);
        out.push_back(sp.center + 5.0 * sp.sigma);
    }
}

std::vector<double> NoiseSpectrum::breakpoints() const {
    std::vector<double> out;
    collect_breakpoints_into(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<NoiseSpectrum::FineInterval> NoiseSpectrum::fine_intervals() const {
    std::vector<FineInterval> out;
    for (const auto& sp : collect_spurs())
        out.push_back({std::max(0.0, sp.center - 5.0 * sp.sigma), sp.center + 5.0 * sp.sigma,
                       sp.sigma / 2.0});
    return out;
}

NoiseSpectrum load_tabulated(const std::vector<std::pair<double, double>>& rows,
                             FrequencyUnit unit) {
    std::vector<double> omega(rows.size()), value(rows.size());
    const double scale = unit == FrequencyUnit::hz ? kTwoPi : 1.0;
    for (size_t i = 0; i < rows.size(); ++i) {
        omega[i] = rows[i].first * scale;
        value[i] = rows[i].second;
    }
    return NoiseSpectrum::tabulated(std::move(omega), std::move(value));
}

} // namespace ddlab
