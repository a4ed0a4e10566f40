#pragma once

#include <stdexcept>
#include <string>

namespace klforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define KLFORGE_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

KLFORGE_DEFINE_ERROR(InvalidArgument);
KLFORGE_DEFINE_ERROR(NotAQPolynomial);
KLFORGE_DEFINE_ERROR(EmptyInterval);
KLFORGE_DEFINE_ERROR(NotComparable);
KLFORGE_DEFINE_ERROR(NotLinked);
KLFORGE_DEFINE_ERROR(BelowSigma0);
KLFORGE_DEFINE_ERROR(Not213Avoiding);
KLFORGE_DEFINE_ERROR(NonGeneralPositionExchange);
KLFORGE_DEFINE_ERROR(UnsupportedFamily);
KLFORGE_DEFINE_ERROR(HypothesisFailed);
KLFORGE_DEFINE_ERROR(NotSquareIrreducible);
KLFORGE_DEFINE_ERROR(NotMonomialRatio);

#undef KLFORGE_DEFINE_ERROR

}  // namespace klforge
