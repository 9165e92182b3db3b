// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file error.hpp
 * @brief Exception types raised by the qce1d library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qce1d {

/// Invalid argument or violated precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// First-order expansion produced a non-positive partition function.
class BreakdownError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qce1d
