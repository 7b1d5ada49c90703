// Copyright 2026 The finicode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "finicode/window.hpp"

#include <algorithm>

namespace finicode {

std::size_t CodedWindow::determined_count() const {
  return static_cast<std::size_t>(
      std::count_if(status.begin(), status.end(), [](const PositionStatus& s) { return s.determined; }));
}

}  // namespace finicode
