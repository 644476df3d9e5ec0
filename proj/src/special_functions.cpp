#include "relthermo/special_functions.hpp"

#include <string>

namespace relthermo {

namespace {

// Binomial coefficients stay far below 64 bits for the indices used here.
Rational binomial(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i)
        r *= Rational(n - i, i + 1);
    return r;
}

} // namespace

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
    if (max_index < 2 || max_index % 2 != 0)
        throw DomainError("bernoulli table: max index must be a positive even integer");

    // Full table including odd indices; only B_1 = -1/2 is nonzero among them.
    std::vector<Rational> all;
    all.emplace_back(1);
    all.emplace_back(-1, 2);
    for (int k = 2; k <= max_index; ++k) {
        Rational acc(0);
        for (int j = 0; j < k; ++j)
            acc += binomial(k + 1, j) * all[j];
        all.push_back(-acc / Rational(k + 1));
    }
    for (int k = 2; k <= max_index; k += 2)
        even_.push_back(all[k]);
}

Rational BernoulliTable::at(int k) const {
    if (k % 2 != 0)
        throw DomainError("bernoulli: odd index " + std::to_string(k) +
                          " requested (odd Bernoulli numbers above B_1 vanish)");
    if (k < 2 || k > max_index_)
        throw DomainError("bernoulli: index " + std::to_string(k) + " outside table range [2, " +
                          std::to_string(max_index_) + "]");
    return even_[k / 2 - 1];
}

Rational bernoulli(int k) {
    static const BernoulliTable table(12);
    return table.at(k);
}

Rational zeta_rational(int s) {
    if (s == 1) throw DomainError("zeta: s = 1 is the pole");
    if (s > 0) throw DomainError("zeta: only non-positive integer arguments are supported");
    if (s == 0) return Rational(-1, 2);
    int k = -s;
    if (k % 2 == 0) return Rational(0); // trivial zeros
    int m = (k + 1) / 2;
    return -bernoulli(2 * m) / Rational(2 * m);
}

double zeta_at(int s) { return zeta_rational(s).to_double(); }

double gamma_int(int n) {
    if (n < 1) throw DomainError("gamma_int: argument must be a positive integer");
    double r = 1.0;
    for (int i = 2; i < n; ++i)
        r *= static_cast<double>(i);
    return r;
}

} // namespace relthermo
