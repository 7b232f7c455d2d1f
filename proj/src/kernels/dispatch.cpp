// Copyright 2026 The compind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <vector>

#include "variants.hpp"

namespace compind::kernels {
namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(COMPIND_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) tables.push_back(&avx2_kernels());
#endif
#if defined(COMPIND_HAVE_NEON)
  tables.push_back(&neon_kernels());
#endif
  return tables;
}

const std::vector<const KernelTable*>& tables() {
  static const std::vector<const KernelTable*> detected = detect();
  return detected;
}

const KernelTable* find(std::string_view name) {
  for (const auto* t : tables()) {
    if (t->name == name) return t;
  }
  return nullptr;
}

const KernelTable* initial() {
  if (const char* env = std::getenv("COMPIND_KERNEL")) {
    if (const auto* t = find(env)) return t;
  }
  return tables().back();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> active{initial()};
  return active;
}

}  // namespace

std::span<const KernelTable* const> available_kernels() { return tables(); }

const KernelTable& active_kernels() { return *current().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const auto* t = find(name);
  if (!t) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace compind::kernels
