#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

/// Base class for all typed failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteEvaluation : Error {
    using Error::Error;
};
struct CoincidentPoints : Error {
    using Error::Error;
};
struct NegativeRatio : Error {
    using Error::Error;
};
struct TruncationTooSmall : Error {
    using Error::Error;
};
struct SmoothnessViolation : Error {
    using Error::Error;
};
struct TailUnbounded : Error {
    using Error::Error;
};
struct NotPeriodic : Error {
    using Error::Error;
};
struct EvaluationAtCenter : Error {
    using Error::Error;
};
struct SingularCell : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};

/// The 1-D reduction constant only exists for alpha < 1; for alpha >= 1 the
/// radial integral diverges and callers are expected to catch this and turn
/// it into the divergent certificate branch.
struct DivergentReduction : Error {
    using Error::Error;
};
struct MMaxExceeded : Error {
    using Error::Error;
};
struct ConfigInvalid : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};

}  // namespace fraclap
