#ifndef RELTHERMO_SPECTRA_HPP
#define RELTHERMO_SPECTRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relthermo/errors.hpp"

namespace relthermo {

// All level formulas are in reduced units: energies divided by the rest
// energy m c^2, so no dimensional constant appears anywhere downstream.

// Klein-Gordon particle in a linear potential with vector and scalar parts.
//   E(n) = a + sqrt((1 - a^2) r (2n + 1))
// a is the vector-to-scalar coupling ratio, a^2 < 1 (a^2 = 1 degenerates to
// the Coulomb problem and is rejected). r is the frequency ratio
// h_bar omega / (m c^2), r > 0. Positive branch only; the ground level must
// be non-negative, which restricts negative a to (1 - a^2) r >= a^2.
struct KgLinear {
    double a = 0.0;
    double r = 1.0;
};

// Dirac particle in an inverse-linear Lorentz scalar potential.
//   E(n) = sqrt(1 - A^2 / (n + A)^2),  A > 0
// Levels start at zero, increase strictly, and accumulate below 1 (the rest
// energy), so Boltzmann sums over this spectrum do not converge.
struct DiracInverseLinear {
    double coupling;
};

// Strong-coupling limit of the inverse-linear spectrum (A >> 1):
//   E(n) = sqrt(2n / A)
struct DiracStrongField {
    double coupling;
};

using SpectrumModel = std::variant<KgLinear, DiracInverseLinear, DiracStrongField>;

struct ModelValidity {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks every model invariant; the report names each violated constraint.
ModelValidity validate_model(const SpectrumModel& model);

// Throws DomainError listing the violations of an invalid model.
void require_valid(const SpectrumModel& model);

// Reduced level energy E_n, positive branch, n >= 0.
double reduced_energy(const SpectrumModel& model, std::int64_t n);

// Decomposition E(n) = offset + sqrt(slope * n + intercept) where one exists.
// The Klein-Gordon and strong-field spectra have this form exactly; the exact
// inverse-linear spectrum does not (it is bounded), and yields nullopt.
struct SqrtProfile {
    double offset;
    double slope;
    double intercept;
};
std::optional<SqrtProfile> sqrt_profile(const SpectrumModel& model);

// Reduced temperature k_B T / (m c^2); must be finite and positive.
class ReducedTemperature {
public:
    explicit ReducedTemperature(double mubar);
    double value() const { return mubar_; }

private:
    double mubar_;
};

} // namespace relthermo

#endif
