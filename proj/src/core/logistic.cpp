#include "ddmap/logistic.hpp"

#include <cmath>
#include <string>

#include "ddmap/error.hpp"

namespace ddmap {

LogisticParams::LogisticParams(double r) : r_(r) {
    if (!(r > 0.0) || !(r <= 4.0)) {
        throw DomainError("LogisticParams: r must lie in (0, 4], got " + std::to_string(r));
    }
}

double logistic_step(double E, const LogisticParams& p) {
    if (!(E >= 0.0) || !(E <= 1.0)) {
        throw DomainError("logistic_step: E must lie in [0, 1], got " + std::to_string(E));
    }
    return p.r() * E * (1.0 - E);
}

double logistic_derivative(double E, const LogisticParams& p) {
    return p.r() * (1.0 - 2.0 * E);
}

double logistic_gain(double E, const LogisticParams& p) {
    if (!(E >= 0.0)) {
        throw DomainError("logistic_gain: input must be nonnegative, got " + std::to_string(E));
    }
    return p.r() * E * E;
}

double logistic_loss(double E, const LogisticParams& p) {
    if (!(E >= 0.0)) {
        throw DomainError("logistic_loss: input must be nonnegative, got " + std::to_string(E));
    }
    return std::sqrt(p.r() * E) - E;
}

}  // namespace ddmap
