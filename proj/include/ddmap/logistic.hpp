#pragma once

namespace ddmap {

/// Growth rate of the logistic map; valid on (0, 4].
class LogisticParams {
public:
    explicit LogisticParams(double r);
    double r() const noexcept { return r_; }

private:
    double r_;
};

/// r E (1 - E) for E in [0, 1].
double logistic_step(double E, const LogisticParams& p);
double logistic_derivative(double E, const LogisticParams& p);

/// Two-step form: gain G(E) = r E^2, loss T(E) = sqrt(r E) - E, with
/// T(G(E)) = r E - r E^2 on [0, 1].
double logistic_gain(double E, const LogisticParams& p);
double logistic_loss(double E, const LogisticParams& p);

}  // namespace ddmap
