#pragma once

#include <stdexcept>
#include <string>

namespace gseries {

// Every failure raised by the library derives from Error so callers can catch
// the whole family in one place; the concrete types map onto the documented
// error conditions of each operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Leading exponent not a multiple of 1/24, or two series whose exponents do
// not differ by an integer.
class ExponentError : public Error {
public:
    using Error::Error;
};

class DivisorNotUnit : public Error {
public:
    using Error::Error;
};

class NotInSpan : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class PoleAtNonPositiveInteger : public Error {
public:
    using Error::Error;
};

class NotInUpperHalfPlane : public Error {
public:
    using Error::Error;
};

class NotInUnitDisk : public Error {
public:
    using Error::Error;
};

class NotFundamental : public Error {
public:
    using Error::Error;
};

class NotInField : public Error {
public:
    using Error::Error;
};

// Precondition violated by an argument (negative order, k = 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace gseries
