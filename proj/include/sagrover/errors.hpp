#pragma once

#include <stdexcept>
#include <string>

namespace sagrover {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Assignment/operand length does not match the model.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Requested size exceeds an enumeration or simulation cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Malformed model file; message names the offending line.
class ParseError : public Error {
public:
    using Error::Error;
};

// Fixed/free indices do not partition the variable range.
class PartitionError : public Error {
public:
    using Error::Error;
};

// Model cannot be compiled to a reversible circuit.
class SynthesisError : public Error {
public:
    using Error::Error;
};

// Invalid gate application (bad or colliding qubit indices).
class GateError : public Error {
public:
    using Error::Error;
};

// Amplitude amplification asked for an empty marked set.
class MarkedSetError : public Error {
public:
    using Error::Error;
};

}  // namespace sagrover
