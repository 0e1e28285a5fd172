#pragma once

#include <stdexcept>
#include <string>

namespace latmat {

// Exit-code buckets used by the CLI: input=1, singular=2, hypothesis=3, cap=4.
enum class ErrorCategory { input, singular, hypothesis, cap };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}
    ErrorCategory category() const noexcept { return cat_; }

private:
    ErrorCategory cat_;
};

#define LATMAT_DEFINE_ERROR(NAME, CATEGORY)                       \
    class NAME : public Error {                                   \
    public:                                                       \
        explicit NAME(const std::string& m)                       \
            : Error(ErrorCategory::CATEGORY, m) {}                \
    };

LATMAT_DEFINE_ERROR(ParseError, input)
LATMAT_DEFINE_ERROR(UnknownElementError, input)
LATMAT_DEFINE_ERROR(DuplicateElementError, input)
LATMAT_DEFINE_ERROR(CycleError, input)
LATMAT_DEFINE_ERROR(EmptySetError, input)
LATMAT_DEFINE_ERROR(MissingValueError, input)
LATMAT_DEFINE_ERROR(DimensionError, input)
LATMAT_DEFINE_ERROR(NotSquareError, input)
LATMAT_DEFINE_ERROR(BasisError, input)

LATMAT_DEFINE_ERROR(NoBoundError, hypothesis)
LATMAT_DEFINE_ERROR(HypothesisError, hypothesis)
LATMAT_DEFINE_ERROR(SemimultiplicativityError, hypothesis)
LATMAT_DEFINE_ERROR(ZeroValueError, hypothesis)

LATMAT_DEFINE_ERROR(SingularMatrixError, singular)
LATMAT_DEFINE_ERROR(ZeroPsiError, singular)

LATMAT_DEFINE_ERROR(CombinatorialBlowupError, cap)

#undef LATMAT_DEFINE_ERROR

inline int exit_code_for(ErrorCategory cat) {
    switch (cat) {
        case ErrorCategory::input: return 1;
        case ErrorCategory::singular: return 2;
        case ErrorCategory::hypothesis: return 3;
        case ErrorCategory::cap: return 4;
    }
    return 1;
}

}  // namespace latmat
