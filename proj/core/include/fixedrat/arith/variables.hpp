// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fixedrat {

using VarId = std::uint32_t;

/// Interns `name` in the process-wide variable registry.  Ids are handed out
/// in first-seen order and never change, which fixes the monomial order.
/// Thread-safe.
VarId var_id(std::string_view name);

std::string var_name(VarId id);

}  // namespace fixedrat
