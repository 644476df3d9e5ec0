#include "relthermo/spectra.hpp"

#include <cmath>
#include <sstream>

namespace relthermo {

namespace {

void check_kg(const KgLinear& m, ModelValidity& v) {
    if (!std::isfinite(m.a) || !std::isfinite(m.r)) {
        v.violations.push_back("kg-linear: couplings must be finite");
        return;
    }
    if (m.a * m.a > 1.0)
        v.violations.push_back("kg-linear: |a| > 1 gives a complex spectrum");
    else if (m.a * m.a == 1.0)
        v.violations.push_back("kg-linear: a^2 = 1 is the excluded Coulomb case");
    if (m.r <= 0.0)
        v.violations.push_back("kg-linear: frequency ratio r must be positive");
    if (m.a * m.a < 1.0 && m.r > 0.0) {
        // Ground level a + sqrt((1-a^2) r) must stay non-negative.
        if (m.a < 0.0 && (1.0 - m.a * m.a) * m.r < m.a * m.a)
            v.violations.push_back("kg-linear: ground level is negative for this (a, r)");
    }
}

void check_coupling(double A, const char* name, ModelValidity& v) {
    if (!std::isfinite(A))
        v.violations.push_back(std::string(name) + ": coupling must be finite");
    else if (A <= 0.0)
        v.violations.push_back(std::string(name) + ": coupling must be positive");
}

} // namespace

ModelValidity validate_model(const SpectrumModel& model) {
    ModelValidity v;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KgLinear>)
                check_kg(m, v);
            else if constexpr (std::is_same_v<T, DiracInverseLinear>)
                check_coupling(m.coupling, "dirac-exact", v);
            else
                check_coupling(m.coupling, "dirac-strong", v);
        },
        model);
    v.valid = v.violations.empty();
    return v;
}

void require_valid(const SpectrumModel& model) {
    ModelValidity v = validate_model(model);
    if (v.valid) return;
    std::ostringstream os;
    os << "invalid spectrum model:";
    for (const auto& s : v.violations)
        os << " " << s << ";";
    throw DomainError(os.str());
}

double reduced_energy(const SpectrumModel& model, std::int64_t n) {
    if (n < 0) throw DomainError("reduced_energy: level index must be >= 0");
    require_valid(model);
    return std::visit(
        [n](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            double x = static_cast<double>(n);
            if constexpr (std::is_same_v<T, KgLinear>) {
                return m.a + std::sqrt((1.0 - m.a * m.a) * m.r * (2.0 * x + 1.0));
            } else if constexpr (std::is_same_v<T, DiracInverseLinear>) {
                double q = m.coupling / (x + m.coupling);
                return std::sqrt(1.0 - q * q);
            } else {
                return std::sqrt(2.0 * x / m.coupling);
            }
        },
        model);
}

std::optional<SqrtProfile> sqrt_profile(const SpectrumModel& model) {
    return std::visit(
        [](const auto& m) -> std::optional<SqrtProfile> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KgLinear>) {
                double c = (1.0 - m.a * m.a) * m.r;
                return SqrtProfile{m.a, 2.0 * c, c};
            } else if constexpr (std::is_same_v<T, DiracStrongField>) {
                return SqrtProfile{0.0, 2.0 / m.coupling, 0.0};
            } else {
                return std::nullopt;
            }
        },
        model);
}

ReducedTemperature::ReducedTemperature(double mubar) : mubar_(mubar) {
    if (!std::isfinite(mubar) || mubar <= 0.0)
        throw DomainError("reduced temperature must be finite and positive");
}

} // namespace relthermo
