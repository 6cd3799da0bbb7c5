#ifndef GENDOMAIN_ERRORS_HPP
#define GENDOMAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gendomain {

/// Coarse classification of failures, used by the CLI to pick exit codes.
enum class ErrorCategory {
    parse = 2,        ///< malformed input files / specs
    precondition = 3, ///< an operation's contract was violated by the caller
    verification = 4, ///< the computation ran but the result failed its checks
    numerical = 5     ///< a numerical routine did not converge
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), category_(cat), name_(std::move(name)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& name() const noexcept { return name_; }

private:
    ErrorCategory category_;
    std::string name_;
};

#define GENDOMAIN_DEFINE_ERROR(Name, Category)                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(ErrorCategory::Category, #Name, what) {}                   \
    }

GENDOMAIN_DEFINE_ERROR(EmptyDomain, precondition);
GENDOMAIN_DEFINE_ERROR(DimensionMismatch, precondition);
GENDOMAIN_DEFINE_ERROR(SamplingMismatch, precondition);
GENDOMAIN_DEFINE_ERROR(InvalidSpec, parse);
GENDOMAIN_DEFINE_ERROR(NotABox, precondition);
GENDOMAIN_DEFINE_ERROR(IndexOutOfRange, precondition);
GENDOMAIN_DEFINE_ERROR(DomainCoverage, precondition);
GENDOMAIN_DEFINE_ERROR(NumericalFailure, numerical);
GENDOMAIN_DEFINE_ERROR(NotPSD, precondition);
GENDOMAIN_DEFINE_ERROR(RankTooLarge, precondition);
GENDOMAIN_DEFINE_ERROR(NonUnimodularRoots, verification);
GENDOMAIN_DEFINE_ERROR(NegativeCoefficient, verification);
GENDOMAIN_DEFINE_ERROR(CandidateExplosion, verification);
GENDOMAIN_DEFINE_ERROR(VerificationFailed, verification);
GENDOMAIN_DEFINE_ERROR(RankDeficientSystem, numerical);

#undef GENDOMAIN_DEFINE_ERROR

} // namespace gendomain

#endif // GENDOMAIN_ERRORS_HPP
