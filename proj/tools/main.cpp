// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "tanglekit_cli/commands.hpp"

int main(int argc, char** argv) { return tanglekit::cli::run(argc, argv, std::cout, std::cerr); }
