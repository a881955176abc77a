// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/arith/variables.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace fixedrat {

namespace {

struct Registry {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

VarId var_id(std::string_view name) {
  Registry& reg = registry();
  std::lock_guard lock(reg.mutex);
  std::string key(name);
  if (auto it = reg.ids.find(key); it != reg.ids.end()) return it->second;
  const auto id = static_cast<VarId>(reg.names.size());
  reg.names.push_back(key);
  reg.ids.emplace(std::move(key), id);
  return id;
}

std::string var_name(VarId id) {
  Registry& reg = registry();
  std::lock_guard lock(reg.mutex);
  if (id >= reg.names.size()) throw std::out_of_range("unknown variable id");
  return reg.names[id];
}

}  // namespace fixedrat
