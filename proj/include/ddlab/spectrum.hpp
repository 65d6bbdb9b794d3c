#pragma once

#include <limits>
#include <string>
#include <vector>

namespace ddlab {

enum class CutoffStyle { sharp, none };
enum class FrequencyUnit { hz, rad_per_s };

// Narrow additive Gaussian peak on top of a broadband spectrum. Support is
// truncated at |omega - center| > 5 sigma so quadrature breakpoints are exact.
struct GaussianSpur {
    double center = 0.0; // rad/s
    double sigma = 0.0;  // rad/s
    double height = 0.0; // peak PSD before the global alpha scale
    double gamma = 0.0;  // the scaling knob the height was derived from
};

// One-sided noise power spectral density S(omega) of the dephasing variable,
// under the convention in which the autocovariance is
// C(d) = (4/pi) * int_0^inf S(w) cos(w d) dw. Angular frequency everywhere.
class NoiseSpectrum {
public:
    enum class Kind { power_law, tabulated, composite_sum };

    // S = amplitude * omega^exponent on [omega_lo, omega_hi]. A sharp high
    // cutoff zeroes S beyond omega_hi; style none requires exponent < -1.
    // exponent <= -1 requires omega_lo > 0. Throws validation_error otherwise.
    static NoiseSpectrum power_law(double exponent, double amplitude, double omega_lo,
                                   double omega_hi, CutoffStyle cutoff);

    // Ordered samples, interpolated log-log (linear fallback across zero values).
    // Queries outside the table span evaluate to 0.
    static NoiseSpectrum tabulated(std::vector<double> omega, std::vector<double> value);

    static NoiseSpectrum composite(std::vector<NoiseSpectrum> parts);

    // The paper's three environments. alpha rescales the whole spectrum,
    // gamma the 153 Hz spur. Amplitude anchors are documented in the README.
    static NoiseSpectrum ohmic_preset(double alpha, double cutoff_hz = 500.0);
    static NoiseSpectrum one_over_omega_preset(double alpha, double cutoff_hz = 500.0);
    static NoiseSpectrum ambient_preset(double alpha, double gamma);

    NoiseSpectrum& set_alpha(double alpha);
    NoiseSpectrum& add_spur(double center, double sigma, double height, double gamma = 0.0);
    NoiseSpectrum& set_label(std::string label);

    // Full PSD (broadband + spurs) scaled by alpha. omega < 0 is rejected.
    double evaluate(double omega) const;
    // Broadband part only, alpha applied; used by split synthesis.
    double evaluate_broadband(double omega) const;

    double alpha() const { return alpha_; }
    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    double exponent() const { return exponent_; }
    double amplitude() const { return amplitude_; }
    double omega_lo() const { return omega_lo_; }
    double omega_hi() const { return omega_hi_; }
    CutoffStyle cutoff() const { return cutoff_; }
    const std::vector<GaussianSpur>& spurs() const { return spurs_; }
    const std::vector<NoiseSpectrum>& parts() const { return parts_; }
    const std::vector<double>& table_omega() const { return tab_omega_; }
    const std::vector<double>& table_value() const { return tab_value_; }

    // Spurs from all nesting levels with enclosing alphas folded into height.
    std::vector<GaussianSpur> collect_spurs() const;

    // Support bounds: S is identically zero below/above these.
    double min_support() const;
    double max_support() const; // +inf when no sharp high cutoff

    // Frequencies where S is non-smooth (cutoffs, table ends, spur edges);
    // quadrature and synthesis treat them as mandatory panel boundaries.
    std::vector<double> breakpoints() const;

    // Intervals needing a panel width cap (narrow spurs): {lo, hi, max_width}.
    struct FineInterval { double lo, hi, max_width; };
    std::vector<FineInterval> fine_intervals() const;

private:
    NoiseSpectrum() = default;

    Kind kind_ = Kind::power_law;
    double alpha_ = 1.0;
    std::string label_;

    double exponent_ = 0.0;
    double amplitude_ = 0.0;
    double omega_lo_ = 0.0;
    double omega_hi_ = std::numeric_limits<double>::infinity();
    CutoffStyle cutoff_ = CutoffStyle::none;

    std::vector<double> tab_omega_, tab_value_;
    std::vector<NoiseSpectrum> parts_;
    std::vector<GaussianSpur> spurs_;

    double base_value(double omega) const;
    void collect_spurs_into(double mult, std::vector<GaussianSpur>& out) const;
    void collect_breakpoints_into(std::vector<double>& out) const;
};

// Build a tabulated spectrum from (frequency, value) rows. Requires >= 2 rows,
// strictly increasing frequency, nonnegative values.
NoiseSpectrum load_tabulated(const std::vector<std::pair<double, double>>& rows,
                             FrequencyUnit unit);

} // namespace ddlab
