#pragma once

#include <stdexcept>
#include <string>

namespace rqnn {

/// Derivative of an order the activation cannot provide (e.g. heaviside).
struct DerivativeUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Completion of the square requires xi != 0.
struct ZeroCurvature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Kernel normalization integral did not converge.
struct NonIntegrable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid spacing does not resolve the finest wavelet scale.
struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field does not live on the operator's domain grid.
struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DictionaryEmpty : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FixtureMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResolutionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rqnn
