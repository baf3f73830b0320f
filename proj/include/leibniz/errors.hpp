#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

// Base class for everything this library throws on bad input or bad state.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- scalar / matrix layer --------------------------------------------------

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct AmbientMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// -- polynomial layer --------------------------------------------------------

struct DivisionByZeroPoly : Error {
    using Error::Error;
};

struct BothZero : Error {
    using Error::Error;
};

struct InfiniteField : Error {
    using Error::Error;
};

struct GuardExceeded : Error {
    using Error::Error;
};

struct WrongModulus : Error {
    using Error::Error;
};

// -- algebra layer -----------------------------------------------------------

struct AlgebraMismatch : Error {
    using Error::Error;
};

struct BadSpec : Error {
    using Error::Error;
};

struct WrongType : Error {
    using Error::Error;
};

struct SingularOperator : Error {
    using Error::Error;
};

struct DependentOperators : Error {
    using Error::Error;
};

// -- endomorphism layer ------------------------------------------------------

struct NotAnEndomorphism : Error {
    using Error::Error;
};

struct NotAnAutomorphism : Error {
    using Error::Error;
};

struct NotInD : Error {
    using Error::Error;
};

struct IdealNotPreserved : Error {
    using Error::Error;
};

}  // namespace leibniz

#endif
