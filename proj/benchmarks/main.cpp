// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

// Own main: the distro libbenchmark_main.a ships LTO bytecode from another gcc.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
