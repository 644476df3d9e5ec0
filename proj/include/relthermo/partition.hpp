#ifndef RELTHERMO_PARTITION_HPP
#define RELTHERMO_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "relthermo/spectra.hpp"

namespace relthermo {

// Whether Boltzmann factors are taken relative to the ground level
// (first summand exactly 1) or from the bare energies.
enum class ShiftPolicy { GroundShifted, Absolute };

// Closed forms carry two constant sets: the published ones and the ones this
// implementation derives independently. The discrepancy report adjudicates
// between them against the direct sum.
enum class FormulaVariant { Published, Rederived };

struct DirectSumSpec {
    double tail_tol = 1e-12;            // relative tail tolerance
    std::int64_t max_terms = 10'000'000; // iteration cap
};

struct EulerMaclaurinSpec {
    int order = 2; // highest correction index i
    FormulaVariant variant = FormulaVariant::Rederived;
};

struct MellinResidueSpec {
    FormulaVariant variant = FormulaVariant::Rederived;
    bool extended_poles = false; // include Gamma poles at t = -2, -4
};

using EngineSpec = std::variant<DirectSumSpec, EulerMaclaurinSpec, MellinResidueSpec>;

struct PartitionResult {
    double z = 0.0;
    std::optional<std::int64_t> terms_summed; // direct sum only
    std::optional<double> tail_bound;         // direct sum only
    std::string notes;
};

// Exact value of the convergence integral
//   int_0^inf exp(-inv_temp * sqrt(slope * n + offset)) dn
//     = 2 / (slope * inv_temp^2) * (1 + inv_temp * sqrt(offset)) * exp(-inv_temp * sqrt(offset)).
// With a start offset substituted for `offset` it dominates the discarded
// tail of a truncated sum over a square-root spectrum.
double tail_integral(double inv_temp, double slope, double offset);

// Boltzmann sum over the spectrum, truncated once the integral tail bound
// drops below tail_tol times the running sum. The result is certified:
// 0 <= Z_true - z <= tail_bound <= tail_tol * z. This engine is the oracle
// all closed forms are judged against.
//
// The exact inverse-linear Dirac spectrum is bounded above, its Boltzmann
// terms do not vanish and the sum diverges; that model is rejected here.
PartitionResult direct_sum(const SpectrumModel& model, ReducedTemperature mubar,
                           ShiftPolicy shift, const DirectSumSpec& spec = {});

// sum_{m>=0} f(m) = f(0)/2 + int_0^inf f - sum_i B_2i/(2i)! f^(2i-1)(0),
// with i running over the supplied odd derivatives.
double euler_maclaurin_sum(double f0, double integral, std::span<const double> odd_derivs);

// Odd derivatives f^(2i-1)(0), i = 1..order, of the ground-shifted
// Klein-Gordon summand f(n) = exp(-(sqrt(2n+1) - 1) / mubar). The
// differentiation is carried out on exact rational polynomials and only the
// final evaluation at 1/mubar is floating point.
std::vector<double> kg_boltzmann_odd_derivatives(double mubar, int order);

// Closed-form Klein-Gordon partition function (scalar-only potential, a = 0,
// r = 1, ground-shifted sum):
//   Z = 1/2 + mubar(mubar + 1) + (19 mubar^2 - mubar - c) / (240 mubar^3)
// Published uses the constant c = 1; Rederived assembles the order-2
// Euler-MacLaurin sum from the symbolic derivatives (which yields c = 1/3).
// Orders other than 2 are available for the rederived variant only.
PartitionResult kg_closed_partition(ReducedTemperature mubar, FormulaVariant variant,
                                    int order = 2);

// Partition function of the strong-field spectrum E(n) = sqrt(2 a n) with
// a = 1/A, by residues of mubar^t (2a)^{-t/2} zeta(t/2) Gamma(t):
//   Published:  Z = mubar^2 / (2a) + 1/2  (published closed form)
//   Rederived:  Z = mubar^2 / a + 1/2     (zeta pole at t = 2 carries a
//               factor 2 from the half-argument; the n = 0 term enters as +1
//               and the Gamma pole at t = 0 as zeta(0) = -1/2)
// extended_poles adds the Gamma poles at t = -2 and t = -4, weighted by
// zeta(-1) and zeta(-2); it requires the rederived variant.
PartitionResult mellin_residue_partition(double a, ReducedTemperature mubar,
                                         FormulaVariant variant, bool extended_poles = false);

// Engine dispatch. The closed-form engines check that the model matches the
// spectrum their derivation assumes.
PartitionResult evaluate_partition(const SpectrumModel& model, ReducedTemperature mubar,
                                   ShiftPolicy shift, const EngineSpec& engine);

} // namespace relthermo

#endif
