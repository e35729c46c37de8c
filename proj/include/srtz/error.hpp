#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srtz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

class NotPrimitive : public Error {
public:
    using Error::Error;
};

class DivideByZero : public Error {
public:
    DivideByZero() : Error("division by zero in GF(2^p)") {}
};

class NotARoot : public Error {
public:
    using Error::Error;
};

class IndexOutOfBounds : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace srtz
