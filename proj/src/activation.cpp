#include "rqnn/activation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "rqnn/errors.hpp"

namespace rqnn {

namespace {

double sigmoid0(double s) {
    if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
    const double e = std::exp(s);
    return e / (1.0 + e);
}

double sigmoid1(double s) {
    const double v = sigmoid0(s);
    return v * (1.0 - v);
}

double sigmoid2(double s) {
    const double v = sigmoid0(s);
    return v * (1.0 - v) * (1.0 - 2.0 * v);
}

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double normal_cdf(double s) { return 0.5 * std::erfc(-s / std::numbers::sqrt2); }
double normal_pdf(double s) { return inv_sqrt_2pi * std::exp(-0.5 * s * s); }

} // namespace

ActivationProfile::ActivationProfile(ActivationKind kind, std::string name, int smoothness,
                                     Evaluator f0, Evaluator f1, Evaluator f2)
    : kind_(kind),
      name_(std::move(name)),
      smoothness_order_(smoothness),
      c_sigma_(std::numeric_limits<double>::quiet_NaN()),
      f_{std::move(f0), std::move(f1), std::move(f2)} {}

ActivationProfile ActivationProfile::sigmoid() {
    return ActivationProfile(ActivationKind::Sigmoid, "sigmoid", 2, sigmoid0, sigmoid1, sigmoid2);
}

ActivationProfile ActivationProfile::gaussian_tail() {
    return ActivationProfile(ActivationKind::GaussianTail, "gaussian-tail", 2, normal_cdf,
                             normal_pdf, [](double s) { return -s * normal_pdf(s); });
}

ActivationProfile ActivationProfile::heaviside() {
    return ActivationProfile(
        ActivationKind::Heaviside, "heaviside", 0,
        [](double s) { return s >= 0.0 ? 1.0 : 0.0; }, nullptr, nullptr);
}

ActivationProfile ActivationProfile::from_table(std::vector<double> s, std::vector<double> values) {
    if (s.size() != values.size() || s.size() < 2)
        throw std::invalid_argument("from_table: need at least two matching samples");
    if (!std::is_sorted(s.begin(), s.end()))
        throw std::invalid_argument("from_table: abscissae must be sorted");
    auto nodes = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>(
        std::move(s), std::move(values));
    auto segment = [nodes](double x) {
        const auto& t = nodes->first;
        auto it = std::upper_bound(t.begin(), t.end(), x);
        std::size_t i = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
        i = std::min(i, t.size() - 2);
        return i;
    };
    auto f0 = [nodes, segment](double x) {
        const auto& t = nodes->first;
        const auto& v = nodes->second;
        if (x <= t.front()) return v.front();
        if (x >= t.back()) return v.back();
        const std::size_t i = segment(x);
        const double w = (x - t[i]) / (t[i + 1] - t[i]);
        return v[i] + w * (v[i + 1] - v[i]);
    };
    auto f1 = [nodes, segment](double x) {
        const auto& t = nodes->first;
        const auto& v = nodes->second;
        if (x < t.front() || x > t.back()) return 0.0;
        const std::size_t i = segment(x);
        return (v[i + 1] - v[i]) / (t[i + 1] - t[i]);
    };
    auto f2 = [](double) { return 0.0; };
    return ActivationProfile(ActivationKind::UserTable, "user-table", 2, f0, f1, f2);
}

ActivationProfile ActivationProfile::custom(std::string name, Evaluator f0, Evaluator f1,
                                            Evaluator f2) {
    const int smoothness = f1 && f2 ? 2 : 0;
    return ActivationProfile(ActivationKind::UserTable, std::move(name), smoothness, std::move(f0),
                             std::move(f1), std::move(f2));
}

double ActivationProfile::eval(double s, int order) const {
    if (order < 0 || order > 2) throw std::invalid_argument("eval: order must be 0, 1 or 2");
    if (order > smoothness_order_)
        throw DerivativeUnavailable(name_ + ": derivative of order " + std::to_string(order) +
                                    " unavailable (smoothness_order " +
                                    std::to_string(smoothness_order_) + ")");
    return f_[order](s);
}

namespace {

double decay_weight(double t, int n, int order) {
    return std::pow(1.0 + std::pow(std::abs(t), n), 1.0 + (2.0 * order + 1.0) / n);
}

double weighted_magnitude(const ActivationProfile& act, double r, int n, int order, double t) {
    return std::abs(act.eval(r * r - t * t, order)) * decay_weight(t, n, order);
}

} // namespace

DecayReport verify_decay(const ActivationProfile& act, double r, int n, int order,
                         std::span<const double> t_samples) {
    if (t_samples.empty()) throw std::invalid_argument("verify_decay: empty sample set");
    double t_max = 0.0;
    for (double t : t_samples) t_max = std::max(t_max, std::abs(t));
    if (1.0 / decay_weight(t_max, n, order) >= 1e-9)
        throw std::invalid_argument("verify_decay: sample range too short for the tail test");

    DecayReport rep;
    rep.samples = t_samples.size();
    double head_max = 0.0;
    const double head_end = 0.9 * t_max;
    for (double t : t_samples) {
        const double m = weighted_magnitude(act, r, n, order, t);
        if (m > rep.empirical_C) {
            rep.empirical_C = m;
            rep.argmax_t = t;
        }
        if (std::abs(t) <= head_end) head_max = std::max(head_max, m);
    }
    rep.holds = std::isfinite(rep.empirical_C) && (rep.empirical_C - head_max) <= 1e-12;
    return rep;
}

std::vector<double> default_decay_samples(double r, int n, int order) {
    // Tail requirement: (1 + T^n)^{-1-(2i+1)/n} < 1e-9, with margin 2.
    const double exponent = 1.0 + (2.0 * order + 1.0) / n;
    const double T_needed = std::pow(std::pow(1e9, 1.0 / exponent), 1.0 / n);
    const double t_dense = std::max(3.0 * r + 3.0, 6.0);
    const double T = std::max(2.0 * T_needed, 2.0 * t_dense);

    std::vector<double> out;
    const double step = 5e-4;
    out.reserve(static_cast<std::size_t>(t_dense / step) + 600);
    for (double t = 0.0; t <= t_dense; t += step) out.push_back(t);
    for (double t = t_dense * 1.02; t < T; t *= 1.02) out.push_back(t);
    out.push_back(T);
    return out;
}

DecayReport refine_decay_constant(const ActivationProfile& act, double r, int n, int order) {
    const auto coarse = default_decay_samples(r, n, order);
    DecayReport rep = verify_decay(act, r, n, order, coarse);
    if (!rep.holds) return rep;

    // Collect local maxima of the sampled objective, then shrink a window
    // around each until the supremum stops moving. The coarse grid resolves
    // every hump of the smooth objective, so window refinement converges to
    // the continuum supremum.
    std::vector<double> magnitudes(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        magnitudes[i] = weighted_magnitude(act, r, n, order, coarse[i]);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        const bool left_ok = i == 0 || magnitudes[i] >= magnitudes[i - 1];
        const bool right_ok = i + 1 == coarse.size() || magnitudes[i] >= magnitudes[i + 1];
        if (left_ok && right_ok) candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return magnitudes[a] > magnitudes[b]; });
    if (candidates.size() > 8) candidates.resize(8);

    for (std::size_t ci : candidates) {
        double center = coarse[ci];
        double halfwidth = ci + 1 < coarse.size() ? coarse[ci + 1] - coarse[ci] : 1e-3;
        for (int round = 0; round < 24; ++round) {
            double best_t = center;
            double best_m = weighted_magnitude(act, r, n, order, center);
            for (int j = 0; j <= 32; ++j) {
                const double t = std::max(0.0, center - halfwidth + 2.0 * halfwidth * j / 32.0);
                const double m = weighted_magnitude(act, r, n, order, t);
                if (m > best_m) {
                    best_m = m;
                    best_t = t;
                }
            }
            center = best_t;
            halfwidth /= 4.0;
            if (best_m > rep.empirical_C) {
                rep.empirical_C = best_m;
                rep.argmax_t = best_t;
            }
        }
    }
    return rep;
}

} // namespace rqnn
