#pragma once

#include <stdexcept>
#include <string>

namespace lerchlab {

// Base of every error raised by the library. Callers that only need to know
// "evaluation failed" catch this; the subclasses carry the reason.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside an operation's domain (Re s <= 1 for the direct series,
// c <= 0, x outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A summation or acceleration scheme did not reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Integer-s degeneracies: gamma-factor poles, the s = 1 pole, vanishing
// basis members.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Evaluation requested on (or too close to) a discontinuity line.
class GridPointError : public Error {
public:
    using Error::Error;
};

// A numerically tested identity failed (characterization, J-split, ...).
class IdentityViolation : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace lerchlab
