#ifndef RELTHERMO_SPECIAL_FUNCTIONS_HPP
#define RELTHERMO_SPECIAL_FUNCTIONS_HPP

#include <vector>

#include "relthermo/rational.hpp"

namespace relthermo {

// Even-index Bernoulli numbers B_2, B_4, ..., built once from the defining
// recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0 in exact rational arithmetic.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_index = 12);

    // B_k for even k with 2 <= k <= max_index().
    Rational at(int k) const;

    int max_index() const { return max_index_; }

private:
    std::vector<Rational> even_; // even_[i] holds B_{2(i+1)}
    int max_index_;
};

// B_k from a shared table covering the default range (k up to 12).
Rational bernoulli(int k);

// Riemann zeta at non-positive integers, where it is rational:
//   zeta(0) = -1/2, zeta(-2m) = 0, zeta(-(2m-1)) = -B_2m / (2m).
// s = 1 (the pole) and s >= 1 are rejected.
Rational zeta_rational(int s);
double zeta_at(int s);

// Gamma at a positive integer: (n-1)!.
double gamma_int(int n);

} // namespace relthermo

#endif
