#include "relthermo/partition.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "relthermo/special_functions.hpp"

namespace relthermo {

double tail_integral(double inv_temp, double slope, double offset) {
    if (!(inv_temp > 0.0) || !std::isfinite(inv_temp))
        throw DomainError("tail_integral: inverse temperature must be positive");
    if (!(slope > 0.0) || !std::isfinite(slope))
        throw DomainError("tail_integral: slope must be positive");
    if (!(offset >= 0.0) || !std::isfinite(offset))
        throw DomainError("tail_integral: offset must be non-negative");
    double s = std::sqrt(offset);
    return 2.0 / (slope * inv_temp * inv_temp) * (1.0 + inv_temp * s) * std::exp(-inv_temp * s);
}

PartitionResult direct_sum(const SpectrumModel& model, ReducedTemperature mubar,
                           ShiftPolicy shift, const DirectSumSpec& spec) {
    require_valid(model);
    if (!(spec.tail_tol > 0.0) || !std::isfinite(spec.tail_tol))
        throw DomainError("direct_sum: tail tolerance must be positive");
    if (spec.max_terms < 1)
        throw DomainError("direct_sum: iteration cap must be at least 1");

    auto profile = sqrt_profile(model);
    if (!profile)
        throw TruncationError(
            "direct_sum: Boltzmann sum over the exact inverse-linear spectrum diverges "
            "(levels accumulate below the rest energy, terms do not vanish)",
            std::numeric_limits<double>::infinity(), 0);

    const double beta = 1.0 / mubar.value();
    const double shift_energy =
        shift == ShiftPolicy::GroundShifted ? reduced_energy(model, 0) : 0.0;
    // term(n) = exp(log_pre - beta * sqrt(slope n + intercept)); the combined
    // exponent is <= 0 for every valid model, so nothing here can overflow.
    const double log_pre = -beta * (profile->offset - shift_energy);
    const double bound_pre = 2.0 / (profile->slope * beta * beta);

    double sum = 0.0;
    double comp = 0.0; // Neumaier compensation
    double first = 0.0;
    double bound = std::numeric_limits<double>::infinity();

    for (std::int64_t n = 0; n < spec.max_terms; ++n) {
        double s = std::sqrt(profile->slope * static_cast<double>(n) + profile->intercept);
        double term = std::exp(log_pre - beta * s);
        if (n == 0) first = term;

        double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;

        // Remainder over m > n is dominated by the integral from n on.
        bound = bound_pre * (1.0 + beta * s) * term;
        if (bound <= spec.tail_tol * (sum + comp)) {
            PartitionResult res;
            res.z = sum + comp;
            res.terms_summed = n + 1;
            res.tail_bound = bound;
            std::ostringstream os;
            os << "direct sum, "
               << (shift == ShiftPolicy::GroundShifted ? "ground-shifted" : "absolute")
               << ", tail certified to relative " << spec.tail_tol;
            res.notes = os.str();
            if (res.z < first) res.z = first; // cannot drop below the first summand
            return res;
        }
    }

    std::ostringstream os;
    os << "direct_sum: tail bound " << bound << " did not reach tolerance " << spec.tail_tol
       << " within " << spec.max_terms << " terms";
    throw TruncationError(os.str(), bound, spec.max_terms);
}

double euler_maclaurin_sum(double f0, double integral, std::span<const double> odd_derivs) {
    if (odd_derivs.empty())
        throw DomainError("euler_maclaurin_sum: at least one odd derivative is required");
    static const BernoulliTable table(16);
    if (2 * static_cast<int>(odd_derivs.size()) > table.max_index())
        throw DomainError("euler_maclaurin_sum: correction order exceeds the Bernoulli table");

    double result = 0.5 * f0 + integral;
    for (std::size_t i = 1; i <= odd_derivs.size(); ++i) {
        // B_2i / (2i)!, reduced incrementally so intermediates stay small.
        Rational factor = table.at(2 * static_cast<int>(i));
        for (std::size_t k = 2; k <= 2 * i; ++k)
            factor /= Rational(static_cast<std::int64_t>(k));
        result -= factor.to_double() * odd_derivs[i - 1];
    }
    return result;
}

namespace {

// Polynomial in u = (2n+1)^{-1/2} and beta with rational coefficients;
// poly[j][p] holds the coefficient of u^j beta^p. Differentiation w.r.t. n
// maps u^j -> -j u^{j+2}, and multiplying by the exponent slope -beta u
// closes the recursion for derivatives of exp(-beta(1/u - 1)).
using UBetaPoly = std::vector<std::vector<Rational>>;

UBetaPoly derivative_step(const UBetaPoly& q) {
    std::size_t ju = q.size(), pu = q.empty() ? 1 : q[0].size();
    UBetaPoly next(ju + 2, std::vector<Rational>(pu + 1, Rational(0)));
    for (std::size_t j = 0; j < ju; ++j)
        for (std::size_t p = 0; p < pu; ++p) {
            if (q[j][p] == Rational(0)) continue;
            next[j + 2][p] += Rational(-static_cast<std::int64_t>(j)) * q[j][p];
            next[j + 1][p + 1] -= q[j][p];
        }
    return next;
}

} // namespace

std::vector<double> kg_boltzmann_odd_derivatives(double mubar, int order) {
    if (!(mubar > 0.0) || !std::isfinite(mubar))
        throw DomainError("kg_boltzmann_odd_derivatives: mubar must be positive");
    if (order < 1 || order > 8)
        throw DomainError("kg_boltzmann_odd_derivatives: order must be in [1, 8]");

    // Q_1 = -beta u; f^(m) = Q_m(u) f(n); at n = 0 both u and f equal 1.
    UBetaPoly q(2, std::vector<Rational>(2, Rational(0)));
    q[1][1] = Rational(-1);

    const double beta = 1.0 / mubar;
    std::vector<double> derivs;
    for (int m = 1; m <= 2 * order - 1; ++m) {
        if (m % 2 == 1) {
            // Collapse u -> 1, then evaluate the beta polynomial by Horner.
            std::size_t pu = q[0].size();
            double value = 0.0;
            for (std::size_t p = pu; p-- > 0;) {
                Rational c(0);
                for (const auto& row : q)
                    c += row[p];
                value = value * beta + c.to_double();
            }
            derivs.push_back(value);
        }
        if (m < 2 * order - 1) q = derivative_step(q);
    }
    return derivs;
}

PartitionResult kg_closed_partition(ReducedTemperature mubar, FormulaVariant variant,
                                    int order) {
    const double mu = mubar.value();
    PartitionResult res;
    if (variant == FormulaVariant::Published) {
        if (order != 2)
            throw DomainError("kg_closed_partition: the published closed form is order 2");
        res.z = 0.5 + mu * (mu + 1.0) + (19.0 * mu * mu - mu - 1.0) / (240.0 * mu * mu * mu);
        res.notes = "euler-maclaurin closed form, order 2, published constant -1";
    } else {
        std::vector<double> derivs = kg_boltzmann_odd_derivatives(mu, order);
        res.z = euler_maclaurin_sum(1.0, mu + mu * mu, derivs);
        std::ostringstream os;
        os << "euler-maclaurin closed form, order " << order << ", rederived derivatives";
        res.notes = os.str();
    }
    return res;
}

PartitionResult mellin_residue_partition(double a, ReducedTemperature mubar,
                                         FormulaVariant variant, bool extended_poles) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("mellin_residue_partition: inverse coupling a must be positive");
    const double mu = mubar.value();

    PartitionResult res;
    if (variant == FormulaVariant::Published) {
        if (extended_poles)
            throw DomainError(
                "mellin_residue_partition: extended poles apply to the rederived residue sum");
        res.z = mu * mu / (2.0 * a) + 0.5;
        res.notes = "mellin residue closed form, published leading coefficient 1/(2a)";
        return res;
    }

    // n = 0 term enters as +1 since the zeta sum starts at n = 1; the pole of
    // zeta(t/2) at t = 2 contributes 2 Gamma(2) mu^2/(2a) = mu^2/a; the Gamma
    // pole at t = 0 contributes zeta(0). All coefficients exact until here.
    const Rational constant_term = Rational(1) + zeta_rational(0);
    res.z = mu * mu / a + constant_term.to_double();
    res.notes = "mellin residue sum, rederived leading coefficient 1/a";
    if (extended_poles) {
        const Rational c2 = zeta_rational(-1) / Rational(2);  // Gamma residue 1/2! at t = -2
        const Rational c4 = zeta_rational(-2) / Rational(24); // 1/4! at t = -4 (vanishes)
        const double x = 2.0 * a / (mu * mu);
        res.z += c2.to_double() * x + c4.to_double() * x * x;
        res.notes += ", extended poles t = -2, -4";
    }
    return res;
}

PartitionResult evaluate_partition(const SpectrumModel& model, ReducedTemperature mubar,
                                   ShiftPolicy shift, const EngineSpec& engine) {
    return std::visit(
        [&](const auto& spec) -> PartitionResult {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, DirectSumSpec>) {
                return direct_sum(model, mubar, shift, spec);
            } else if constexpr (std::is_same_v<T, EulerMaclaurinSpec>) {
                const auto* kg = std::get_if<KgLinear>(&model);
                if (!kg || kg->a != 0.0 || kg->r != 1.0)
                    throw DomainError(
                        "euler-maclaurin engine: closed form assumes the kg-linear spectrum "
                        "with a = 0 and r = 1");
                if (shift != ShiftPolicy::GroundShifted)
                    throw DomainError(
                        "euler-maclaurin engine: closed form assumes the ground-shifted sum");
                return kg_closed_partition(mubar, spec.variant, spec.order);
            } else {
                const auto* strong = std::get_if<DiracStrongField>(&model);
                if (!strong)
                    throw DomainError(
                        "mellin engine: closed form assumes the strong-field spectrum "
                        "E(n) = sqrt(2n/A)");
                require_valid(model);
                // Ground level is zero, so both shift policies give the same sum.
                return mellin_residue_partition(1.0 / strong->coupling, mubar, spec.variant,
                                                spec.extended_poles);
            }
        },
        engine);
}

} // namespace relthermo
