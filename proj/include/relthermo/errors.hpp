#ifndef RELTHERMO_ERRORS_HPP
#define RELTHERMO_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relthermo {

// Parameter outside the physical or numerical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Direct summation stopped at the iteration cap before the tail bound
// certified the requested tolerance. Carries the bound that was achieved.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double achieved_bound, std::int64_t terms)
        : std::runtime_error(what), achieved_bound_(achieved_bound), terms_(terms) {}

    double achieved_bound() const { return achieved_bound_; }
    std::int64_t terms_summed() const { return terms_; }

private:
    double achieved_bound_;
    std::int64_t terms_;
};

// Closed-form evaluation requested too close to a root of its denominator.
class SingularityError : public DomainError {
public:
    SingularityError(const std::string& what, double denominator, double root)
        : DomainError(what), denominator_(denominator), root_(root) {}

    double denominator() const { return denominator_; }
    double root_location() const { return root_; }

private:
    double denominator_;
    double root_;
};

// Malformed CLI arguments or configuration file.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Output destination could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relthermo

#endif
