// Copyright 2026 The qce1d Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qce1d.cpp
 * @brief Entry point of the qce1d command-line tool.
 */

#include <qce1d/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return qce1d::cli::main_entry(argc, argv, std::cout, std::cerr); }
