#include "ddmap/kick.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <string>

#include "ddmap/error.hpp"

namespace ddmap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResonanceTol = 1e-12;

void require_energy(double E, const char* where) {
    if (!(E >= 0.0) || !std::isfinite(E)) {
        throw DomainError(std::string(where) + ": energy must be finite and nonnegative, got " +
                          std::to_string(E));
    }
}

// log|K| for K = -pi exp(nu pi^2) / sin(pi omega); the sine is checked by the caller.
double log_abs_kick_strength(double nu, double sine) {
    return std::log(kPi) + nu * kPi * kPi - std::log(std::abs(sine));
}

// sin(omega v) / v, continuous through v = 0.
double sine_over_arg(double omega, double v) {
    if (v == 0.0) {
        return omega;
    }
    return std::sin(omega * v) / v;
}

}  // namespace

double kick_strength(double omega, double nu) {
    if (!std::isfinite(omega) || !std::isfinite(nu)) {
        throw DomainError("kick_strength: omega and nu must be finite");
    }
    const double sine = std::sin(kPi * omega);
    if (std::abs(sine) <= kResonanceTol) {
        throw ResonanceError("kick_strength: sin(pi*omega) vanishes for omega = " +
                             std::to_string(omega) + "; K is undefined");
    }
    const double log_abs = log_abs_kick_strength(nu, sine);
    if (log_abs > std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("kick_strength: |K| = exp(" + std::to_string(log_abs) +
                            ") is not representable");
    }
    return -kPi * std::exp(nu * kPi * kPi) / sine;
}

double KickParams::default_nu() {
    return default_omega * default_omega / (8.4 * kPi * kPi);
}

KickParams KickParams::paper_defaults(double C) {
    return KickParams(C, default_omega, default_nu());
}

KickParams KickParams::paper_defaults_fraction(double c_times_K) {
    const double K = kick_strength(default_omega, default_nu());
    return paper_defaults(c_times_K / K);
}

KickParams::KickParams(double C, double omega, double nu)
    : C_(C), omega_(omega), nu_(nu), K_(kick_strength(omega, nu)) {
    if (!(C > 0.0) || !(C <= 1.0)) {
        throw DomainError("KickParams: damping factor C must lie in (0, 1], got " +
                          std::to_string(C));
    }
    const double sine = std::sin(kPi * omega);
    log_abs_K_ = log_abs_kick_strength(nu, sine);
    sign_K_ = K_ < 0.0 ? -1.0 : 1.0;
}

double KickParams::kick_envelope(double x) const noexcept {
    return sign_K_ * std::exp(log_abs_K_ - nu_ * x);
}

double kick_velocity_step(double v, const KickParams& p) {
    return p.C() * (v + p.kick_envelope(v * v) * std::sin(p.omega() * v));
}

double kick_velocity_derivative(double v, const KickParams& p) {
    const double e = p.kick_envelope(v * v);
    const double arg = p.omega() * v;
    return p.C() * (1.0 + p.omega() * std::cos(arg) * e - 2.0 * p.nu() * v * std::sin(arg) * e);
}

double energy_cycle(double E, const KickParams& p, EnergyVariant variant) {
    require_energy(E, "energy_cycle");
    const double v = std::sqrt(E);
    if (variant == EnergyVariant::exact_square) {
        const double w = kick_velocity_step(v, p);
        return w * w;
    }
    const double s = std::sin(p.omega() * v);
    const double e = p.kick_envelope(E);
    const double C2 = p.C() * p.C();
    return C2 * (E + (e * s) * (e * s) + v * s * e);
}

double energy_cycle_derivative(double E, const KickParams& p, EnergyVariant variant) {
    require_energy(E, "energy_cycle_derivative");
    const double v = std::sqrt(E);
    const double e = p.kick_envelope(E);
    const double q = sine_over_arg(p.omega(), v);
    if (variant == EnergyVariant::exact_square) {
        // d/dE f(sqrt E)^2 = (f(v) / v) f'(v)
        return p.C() * (1.0 + e * q) * kick_velocity_derivative(v, p);
    }
    const double s = std::sin(p.omega() * v);
    const double c = std::cos(p.omega() * v);
    const double w = p.omega();
    const double C2 = p.C() * p.C();
    return C2 * (1.0 + e * e * (w * c * q - 2.0 * p.nu() * s * s) +
                 0.5 * e * (q + w * c - 2.0 * p.nu() * v * s));
}

double kick_loss_curve(double E, const KickParams& p) {
    require_energy(E, "kick_loss_curve");
    return p.C() * p.C() * E;
}

double kick_gain_curve(double E, const KickParams& p, EnergyVariant variant) {
    require_energy(E, "kick_gain_curve");
    const double C = p.C();
    const double u = std::sqrt(E) / C;
    const double x = E / (C * C);
    // Past this point exp(log|K| - nu x) underflows and both kick terms vanish.
    constexpr double kUnderflowExponent = 745.0;
    if (!std::isfinite(u) || !std::isfinite(x) ||
        p.nu() * x - std::log(std::abs(p.K())) > kUnderflowExponent) {
        return E;
    }
    const double s = std::sin(p.omega() * u);
    const double e = p.kick_envelope(x);
    const double cross = variant == EnergyVariant::exact_square ? 2.0 : 1.0;
    return E + C * C * (e * s) * (e * s) + cross * C * std::sqrt(E) * s * e;
}

const char* to_string(EnergyVariant variant) noexcept {
    return variant == EnergyVariant::exact_square ? "exact-square" : "paper-literal";
}

EnergyVariant parse_energy_variant(const char* text) {
    if (std::strcmp(text, "exact-square") == 0) {
        return EnergyVariant::exact_square;
    }
    if (std::strcmp(text, "paper-literal") == 0) {
        return EnergyVariant::paper_literal;
    }
    throw DomainError(std::string("unknown energy variant '") + text +
                      "' (expected exact-square or paper-literal)");
}

}  // namespace ddmap
