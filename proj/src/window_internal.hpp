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

#pragma once

#include "compind/enterprise.hpp"

namespace compind::detail {

/// Raw copy of periods t-1 ... t-k after check_window.
WindowMatrix copy_window(const MappedSeries& series, std::size_t t, std::size_t k);

}  // namespace compind::detail
