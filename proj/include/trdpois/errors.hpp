// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_ERRORS_HPP
#define TRDPOIS_ERRORS_HPP

#include <stdexcept>

namespace trdpois {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A real-valued function was evaluated outside its domain of definition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The parameters describe no valid probability distribution.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// A series did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A computation was refused because it cannot be carried out in double
/// precision without overflow.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace trdpois

#endif  // TRDPOIS_ERRORS_HPP
