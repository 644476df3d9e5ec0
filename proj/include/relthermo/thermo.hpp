#ifndef RELTHERMO_THERMO_HPP
#define RELTHERMO_THERMO_HPP

#include <functional>

#include "relthermo/errors.hpp"

namespace relthermo {

// One evaluation point of the reduced thermal functions:
// F/mc^2, U/mc^2, S/k_B, C/k_B as functions of mubar = k_B T / mc^2.
struct ThermoPoint {
    double mubar = 0.0;
    double lnZ = 0.0;
    double fbar = 0.0;
    double ubar = 0.0;
    double sbar = 0.0;
    double cbar = 0.0;
};

// Relative finite-difference step used by the sweep layer: h = this * mubar.
inline constexpr double kFdStepScale = 1e-4;

// F / mc^2 = -mubar ln Z
double free_energy(double lnZ, double mubar);

// U / mc^2 = mubar^2 d(ln Z)/d(mubar), central difference, error O(h^2).
double mean_energy_numeric(const std::function<double(double)>& lnz_fn, double mubar, double h);

// S / k_B = ln Z + U / (mc^2 mubar)
double entropy(double lnZ, double ubar, double mubar);

// Alternate entropy route S = -dF/dmubar; must agree with the identity route.
double entropy_from_free_energy_slope(const std::function<double(double)>& lnz_fn, double mubar,
                                      double h);

// C / k_B = dU/dmubar, central difference, error O(h^2).
double specific_heat_numeric(const std::function<double(double)>& ubar_fn, double mubar,
                             double h);

// Positive real root of the denominator shared by the Klein-Gordon closed
// forms, -1 - 3m + 57m^2 + 360m^3 + 720m^4(1+m). The closed partition
// polynomial changes sign there, so the family is undefined at or below it.
inline constexpr double kKgDenominatorRoot = 0.11161327512881051;

struct KgClosedThermo {
    ThermoPoint point;
    double denominator = 0.0; // singularity diagnostics
};

// Closed-form Klein-Gordon thermal functions (a = 0, r = 1): the rational
// expressions for U, S, C over the shared denominator, ln Z from the order-2
// closed partition polynomial with the rederived constant (the rational
// expressions are the exact derivatives of that polynomial, so the set is
// internally consistent to rounding).
KgClosedThermo kg_closed_thermo(double mubar);

// Closed-form thermal functions of the strong-field Dirac spectrum, with
// a = 1/A. F, U, C are the published expressions built on Z = (mubar^2 + a)/(2a);
// the entropy is not part of that set and is filled in from the identity
// S = ln Z + U/mubar.
ThermoPoint dirac_closed_thermo(double mubar, double a);

enum class ModelKind { KgLinearScalar, DiracStrongField };

// Leading high-temperature behaviour: Z ~ z_coeff * mubar^2 (over a for the
// Dirac case), U ~ u_coeff * mubar, C -> c_limit.
struct HighTempLaws {
    double z_coeff;
    double u_coeff;
    double c_limit;
};

// The published asymptotics and the ones that follow from the closed forms.
// They disagree for the Dirac mean energy (published 4 mubar, derived 2 mubar);
// both are carried, neither is asserted as ground truth.
struct HighTempReport {
    HighTempLaws published;
    HighTempLaws derived;
};

HighTempReport high_temperature_limits(ModelKind kind);

} // namespace relthermo

#endif
