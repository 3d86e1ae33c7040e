#pragma once

// The kick-type velocity map for a walker on an annulus and its energy-domain
// decomposition into a damping (loss) curve and a driving (gain) curve.
//
//   v' = C [v + K sin(omega v) exp(-nu v^2)]
//
// All evaluators are pure; KickParams is an immutable value.

namespace ddmap {

/// How the squared velocity map is written in energy form.
///
/// exact_square keeps the cross term 2 C^2 K v sin(omega v) exp(-nu v^2) that
/// squaring the velocity map produces, so energy iterates are exactly the
/// squares of velocity iterates. paper_literal drops the factor 2.
enum class EnergyVariant { exact_square, paper_literal };

/// Returns -pi exp(nu pi^2) / sin(pi omega).
///
/// Throws ResonanceError when |sin(pi omega)| <= 1e-12 and OverflowError when
/// the result is not representable.
double kick_strength(double omega, double nu);

class KickParams {
public:
    /// omega = 31/2 and nu = omega^2 / (8.4 pi^2), K from kick_strength.
    static KickParams paper_defaults(double C);

    /// C is given as a fraction of 1/K for the default omega and nu:
    /// from_fraction(1.0/6.0) is the regime usually written C = 1/6K.
    static KickParams paper_defaults_fraction(double c_times_K);

    KickParams(double C, double omega, double nu);

    double C() const noexcept { return C_; }
    double omega() const noexcept { return omega_; }
    double nu() const noexcept { return nu_; }
    double K() const noexcept { return K_; }

    /// K exp(-nu x) evaluated as sign(K) exp(log|K| - nu x), which stays
    /// finite for any x >= 0 even when K itself is huge.
    double kick_envelope(double x) const noexcept;

    static constexpr double default_omega = 31.0 / 2.0;
    static double default_nu();

private:
    double C_;
    double omega_;
    double nu_;
    double K_;
    double log_abs_K_;
    double sign_K_;
};

double kick_velocity_step(double v, const KickParams& p);
double kick_velocity_derivative(double v, const KickParams& p);

/// One full damping-plus-driving cycle in kinetic energy E = v^2.
double energy_cycle(double E, const KickParams& p,
                    EnergyVariant variant = EnergyVariant::exact_square);
/// d(energy_cycle)/dE; finite at E = 0 (the limit is taken analytically).
double energy_cycle_derivative(double E, const KickParams& p,
                               EnergyVariant variant = EnergyVariant::exact_square);

/// E_out^loss = C^2 E_in^loss.
double kick_loss_curve(double E, const KickParams& p);

/// E_out^gain as a function of E_in^gain (the post-loss energy). With the
/// exact_square variant kick_gain_curve(kick_loss_curve(E)) == energy_cycle(E).
/// No clamping is applied here.
double kick_gain_curve(double E, const KickParams& p,
                       EnergyVariant variant = EnergyVariant::exact_square);

const char* to_string(EnergyVariant variant) noexcept;
EnergyVariant parse_energy_variant(const char* text);

}  // namespace ddmap
