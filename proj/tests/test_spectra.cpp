#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "relthermo/spectra.hpp"

using namespace relthermo;

namespace {

// Deterministic sampler over the valid parameter space of all three models.
struct ModelGen {
    std::mt19937 rng{20240817};

    SpectrumModel next() {
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        switch (kind(rng)) {
        case 0: {
            // a in (-1, 1), r in (0.05, 20]; reject ground-sunk combinations
            for (;;) {
                double a = 2.0 * unit(rng) - 1.0;
                double r = 0.05 + 19.95 * unit(rng);
                KgLinear m{a, r};
                if (validate_model(m).valid) return m;
            }
        }
        case 1:
            return DiracInverseLinear{0.1 * std::pow(1e4, unit(rng))}; // A in [0.1, 1000]
        default:
            return DiracStrongField{0.1 * std::pow(1e4, unit(rng))};
        }
    }
};

} // namespace

TEST_CASE("kg levels at a = 0, r = 1 are sqrt(2n+1) exactly") {
    SpectrumModel m = KgLinear{0.0, 1.0};
    CHECK(reduced_energy(m, 0) == 1.0);
    CHECK(reduced_energy(m, 4) == 3.0);
    for (std::int64_t n = 0; n < 10000; n += 97)
        CHECK(reduced_energy(m, n) == std::sqrt(2.0 * static_cast<double>(n) + 1.0));
}

TEST_CASE("dirac exact levels") {
    CHECK(reduced_energy(DiracInverseLinear{0.7}, 0) == 0.0);
    CHECK(reduced_energy(DiracInverseLinear{123.0}, 0) == 0.0);
    CHECK(reduced_energy(DiracInverseLinear{1.0}, 1) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("dirac strong-field levels") {
    CHECK(reduced_energy(DiracStrongField{100.0}, 0) == 0.0);
    CHECK(reduced_energy(DiracStrongField{100.0}, 1) ==
          doctest::Approx(0.1414213562373095).epsilon(1e-15));
}

TEST_CASE("levels increase strictly for every sampled valid model") {
    std::vector<SpectrumModel> models = {
        KgLinear{0.0, 1.0},   KgLinear{0.5, 1.0},  KgLinear{0.9, 2.0},
        KgLinear{-0.5, 1.0},  KgLinear{0.3, 0.25}, DiracInverseLinear{0.1},
        DiracInverseLinear{1.0}, DiracInverseLinear{10.0}, DiracInverseLinear{1000.0},
        DiracStrongField{0.5},   DiracStrongField{1.0},    DiracStrongField{100.0},
    };
    for (const auto& m : models) {
        REQUIRE(validate_model(m).valid);
        double prev = reduced_energy(m, 0);
        CHECK(prev >= 0.0);
        for (std::int64_t n = 1; n < 10000; ++n) {
            double e = reduced_energy(m, n);
            CHECK(e > prev);
            prev = e;
        }
    }
}

TEST_CASE("property: random valid models have positive strictly rising levels") {
    ModelGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        SpectrumModel m = gen.next();
        CAPTURE(trial);
        double prev = reduced_energy(m, 0);
        REQUIRE(prev >= 0.0);
        for (std::int64_t n = 1; n <= 512; n = n < 16 ? n + 1 : n * 2) {
            double e = reduced_energy(m, n);
            REQUIRE(e > prev);
            REQUIRE(std::isfinite(e));
            prev = e;
        }
        if (std::holds_alternative<DiracInverseLinear>(m)) REQUIRE(prev < 1.0);
    }
}

TEST_CASE("dirac exact levels stay below the rest energy and approach it") {
    SpectrumModel m = DiracInverseLinear{2.5};
    double prev_gap = 1.0;
    for (std::int64_t n = 0; n < 5000; ++n) {
        double e = reduced_energy(m, n);
        CHECK(e < 1.0);
        double gap = 1.0 - e;
        CHECK(gap <= prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-6);
}

TEST_CASE("strong field approximates the exact spectrum to first order") {
    const double A = 1000.0;
    SpectrumModel exact = DiracInverseLinear{A};
    SpectrumModel strong = DiracStrongField{A};
    for (std::int64_t n = 1; n <= 10; ++n) {
        double ee = reduced_energy(exact, n);
        double es = reduced_energy(strong, n);
        CHECK(std::abs(ee - es) / es <= 2.0 * static_cast<double>(n) / A + 1e-6);
    }
}

TEST_CASE("validate_model names each violation") {
    CHECK(validate_model(KgLinear{0.5, 1.0}).valid);
    CHECK(validate_model(KgLinear{-0.3, 1.0}).valid);

    auto coulomb = validate_model(KgLinear{1.0, 1.0});
    REQUIRE_FALSE(coulomb.valid);
    CHECK(coulomb.violations.at(0).find("Coulomb") != std::string::npos);

    CHECK_FALSE(validate_model(KgLinear{-1.0, 1.0}).valid);
    CHECK_FALSE(validate_model(KgLinear{1.5, 1.0}).valid);
    CHECK_FALSE(validate_model(KgLinear{0.0, 0.0}).valid);
    CHECK_FALSE(validate_model(KgLinear{0.0, -2.0}).valid);
    CHECK_FALSE(validate_model(KgLinear{0.5, std::nan("")}).valid);

    // negative a is admitted only while the ground level stays non-negative
    CHECK(validate_model(KgLinear{-0.5, 1.0}).valid);
    auto sunk = validate_model(KgLinear{-0.9, 0.1});
    REQUIRE_FALSE(sunk.valid);
    CHECK(sunk.violations.at(0).find("ground level") != std::string::npos);

    CHECK_FALSE(validate_model(DiracInverseLinear{0.0}).valid);
    CHECK_FALSE(validate_model(DiracInverseLinear{-1.0}).valid);
    CHECK_FALSE(validate_model(DiracStrongField{0.0}).valid);
    CHECK(validate_model(DiracStrongField{1e-3}).valid);
}

TEST_CASE("reduced_energy rejects invalid inputs") {
    CHECK_THROWS_AS(reduced_energy(KgLinear{1.0, 1.0}, 0), DomainError);
    CHECK_THROWS_AS(reduced_energy(KgLinear{0.0, -1.0}, 0), DomainError);
    CHECK_THROWS_AS(reduced_energy(DiracInverseLinear{0.0}, 0), DomainError);
    CHECK_THROWS_AS(reduced_energy(KgLinear{0.0, 1.0}, -1), DomainError);
}

TEST_CASE("sqrt profile matches the level formulas where it exists") {
    auto kg = sqrt_profile(KgLinear{0.5, 2.0});
    REQUIRE(kg.has_value());
    for (std::int64_t n : {0, 1, 5, 40}) {
        double via = kg->offset + std::sqrt(kg->slope * static_cast<double>(n) + kg->intercept);
        CHECK(via == doctest::Approx(reduced_energy(KgLinear{0.5, 2.0}, n)).epsilon(1e-15));
    }
    auto strong = sqrt_profile(DiracStrongField{4.0});
    REQUIRE(strong.has_value());
    CHECK(strong->offset == 0.0);
    CHECK(strong->intercept == 0.0);
    CHECK(strong->slope == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_FALSE(sqrt_profile(DiracInverseLinear{1.0}).has_value());
}

TEST_CASE("reduced temperature must be positive and finite") {
    CHECK(ReducedTemperature(0.5).value() == 0.5);
    CHECK_THROWS_AS(ReducedTemperature(0.0), DomainError);
    CHECK_THROWS_AS(ReducedTemperature(-1.0), DomainError);
    CHECK_THROWS_AS(ReducedTemperature(std::nan("")), DomainError);
    CHECK_THROWS_AS(ReducedTemperature(std::numeric_limits<double>::infinity()), DomainError);
}
