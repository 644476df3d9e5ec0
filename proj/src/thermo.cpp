#include "relthermo/thermo.hpp"

#include <cmath>
#include <sstream>

#include "relthermo/partition.hpp"

namespace relthermo {

namespace {

void check_mubar_step(double mubar, double h, const char* who) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError(std::string(who) + ": mubar must be positive");
    if (!(h > 0.0) || !(h < mubar))
        throw DomainError(std::string(who) + ": step must satisfy 0 < h < mubar");
}

double kg_denominator(double m) {
    return -1.0 - 3.0 * m + 57.0 * m * m + 360.0 * m * m * m +
           720.0 * m * m * m * m * (1.0 + m);
}

} // namespace

double free_energy(double lnZ, double mubar) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError("free_energy: mubar must be positive");
    return -mubar * lnZ;
}

double mean_energy_numeric(const std::function<double(double)>& lnz_fn, double mubar, double h) {
    check_mubar_step(mubar, h, "mean_energy_numeric");
    return mubar * mubar * (lnz_fn(mubar + h) - lnz_fn(mubar - h)) / (2.0 * h);
}

double entropy(double lnZ, double ubar, double mubar) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError("entropy: mubar must be positive");
    return lnZ + ubar / mubar;
}

double entropy_from_free_energy_slope(const std::function<double(double)>& lnz_fn, double mubar,
                                      double h) {
    check_mubar_step(mubar, h, "entropy_from_free_energy_slope");
    auto fbar = [&](double m) { return -m * lnz_fn(m); };
    return -(fbar(mubar + h) - fbar(mubar - h)) / (2.0 * h);
}

double specific_heat_numeric(const std::function<double(double)>& ubar_fn, double mubar,
                             double h) {
    check_mubar_step(mubar, h, "specific_heat_numeric");
    return (ubar_fn(mubar + h) - ubar_fn(mubar - h)) / (2.0 * h);
}

KgClosedThermo kg_closed_thermo(double mubar) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError("kg_closed_thermo: mubar must be positive");

    const double m = mubar;
    const double den = kg_denominator(m);
    if (m <= kKgDenominatorRoot) {
        std::ostringstream os;
        os << "kg_closed_thermo: closed forms undefined at mubar = " << m
           << " (partition polynomial non-positive at or below the denominator root "
           << kKgDenominatorRoot << ")";
        throw SingularityError(os.str(), den, kKgDenominatorRoot);
    }
    if (std::abs(den) < 1e-12) {
        std::ostringstream os;
        os << "kg_closed_thermo: denominator " << den << " within 1e-12 of zero near mubar = "
           << kKgDenominatorRoot;
        throw SingularityError(os.str(), den, kKgDenominatorRoot);
    }

    const double m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
    const double series = 1.0 + 2.0 * m - 19.0 * m2 + 240.0 * m4 + 480.0 * m5;
    const double heat_series =
        -1.0 - 4.0 * m - 6.0 * m2 - 606.0 * m3 - 5163.0 * m4 - 11520.0 * m5 +
        43200.0 * m3 * m3 + 309600.0 * m4 * m3 + 691200.0 * m4 * m4 * (1.0 + m) +
        345600.0 * m5 * m5;

    KgClosedThermo out;
    out.denominator = den;
    out.point.mubar = m;
    const double z = kg_closed_partition(ReducedTemperature(m), FormulaVariant::Rederived).z;
    out.point.lnZ = std::log(z);
    out.point.fbar = free_energy(out.point.lnZ, m);
    out.point.ubar = 3.0 * m * series / den;
    out.point.sbar = 3.0 * series / den + out.point.lnZ;
    out.point.cbar = 3.0 * heat_series / (den * den);
    return out;
}

ThermoPoint dirac_closed_thermo(double mubar, double a) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError("dirac_closed_thermo: mubar must be positive");
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("dirac_closed_thermo: inverse coupling a must be positive");

    const double m = mubar, m2 = mubar * mubar;
    ThermoPoint p;
    p.mubar = m;
    p.lnZ = std::log((m2 + a) / (2.0 * a));
    p.fbar = -m * p.lnZ;
    p.ubar = 2.0 * m2 * m / (m2 + a);
    p.cbar = 2.0 * m2 * (m2 + 3.0 * a) / ((m2 + a) * (m2 + a));
    p.sbar = entropy(p.lnZ, p.ubar, m); // identity route; not part of the published set
    return p;
}

HighTempReport high_temperature_limits(ModelKind kind) {
    if (kind == ModelKind::KgLinearScalar) {
        HighTempLaws laws{1.0, 2.0, 2.0};
        return {laws, laws};
    }
    // Dirac strong field: published U ~ 4 mubar, but the closed-form mean energy
    // 2 mubar^3 / (mubar^2 + a) tends to 2 mubar.
    return {HighTempLaws{0.5, 4.0, 2.0}, HighTempLaws{0.5, 2.0, 2.0}};
}

} // namespace relthermo
