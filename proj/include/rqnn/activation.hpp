#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rqnn {

enum class ActivationKind { Sigmoid, GaussianTail, Heaviside, UserTable };

/// Scalar activation with derivative evaluators through order 2.
///
/// Heaviside is admitted only for indicator-style networks (phantom module);
/// it reports smoothness_order 0 and refuses derivative queries, so any
/// derivative-consuming path fails loudly instead of silently returning
/// garbage.
class ActivationProfile {
public:
    using Evaluator = std::function<double(double)>;

    static ActivationProfile sigmoid();
    static ActivationProfile gaussian_tail(); ///< standard normal CDF
    static ActivationProfile heaviside();     ///< 1{s >= 0}; closed at 0

    /// Piecewise-linear interpolant of tabulated values; constant outside
    /// the table range. Order-1 returns the segment slope, order-2 zero.
    static ActivationProfile from_table(std::vector<double> s, std::vector<double> values);

    /// Arbitrary C^2 profile from explicit evaluators.
    static ActivationProfile custom(std::string name, Evaluator f0, Evaluator f1, Evaluator f2);

    ActivationKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int smoothness_order() const { return smoothness_order_; }

    double operator()(double s) const { return f_[0](s); }

    /// sigma^(order)(s); throws DerivativeUnavailable when order exceeds
    /// the smoothness order.
    double eval(double s, int order) const;

    /// Empirical decay constant C_sigma; NaN until a kernel system (or the
    /// caller) has certified one via verify_decay.
    double decay_constant() const { return c_sigma_; }
    void set_decay_constant(double c) { c_sigma_ = c; }

private:
    ActivationProfile(ActivationKind kind, std::string name, int smoothness, Evaluator f0,
                      Evaluator f1, Evaluator f2);

    ActivationKind kind_;
    std::string name_;
    int smoothness_order_;
    double c_sigma_;
    Evaluator f_[3];
};

/// Sampled verification of the kernel decay condition
/// |sigma^(i)(r^2 - t^2)| <= C (1 + |t|^n)^(1 + (2i+1)/n).
struct DecayReport {
    bool holds = false;
    double empirical_C = 0.0; ///< max over samples of the weighted magnitude
    double argmax_t = 0.0;    ///< sample attaining the max
    std::size_t samples = 0;
};

/// empirical_C = max over t_samples of |sigma^(i)(r^2-t^2)| (1+|t|^n)^{1+(2i+1)/n}.
/// holds requires the max to be finite and to stabilize: samples in the last
/// 10% of the covered range must not raise it by more than 1e-12.
/// Precondition: samples reach T with (1+T^n)^{-1-(2i+1)/n} < 1e-9.
DecayReport verify_decay(const ActivationProfile& act, double r, int n, int order,
                         std::span<const double> t_samples);

/// Default sample set for verify_decay: dense near the origin where the
/// weighted magnitude peaks, geometric out to the required tail.
std::vector<double> default_decay_samples(double r, int n, int order);

/// Decay constant refined to the continuum supremum: iteratively densifies
/// samples around the running argmax until the max stops moving.
DecayReport refine_decay_constant(const ActivationProfile& act, double r, int n, int order);

} // namespace rqnn
