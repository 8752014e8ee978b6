// Copyright 2026 The qnet authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "qnet/pauli.hpp"

namespace qnet {

/// The pair of Heisenberg-picture operators attached to one wire. The
/// y-component is not tracked; it is derived as q_y = i q_x q_z.
struct Descriptor {
  PauliSum x;
  PauliSum z;
  std::size_t wire = 0;  // 1-indexed
  int time = 0;

  PauliSum y() const { return (Complex{0.0, 1.0} * (x * z)).pruned(); }
};

/// One descriptor per wire, all at the same time. Sets are immutable
/// snapshots; evolution returns new sets and leaves untouched wires'
/// descriptors bitwise identical.
struct DescriptorSet {
  std::vector<Descriptor> descriptors;  // index w-1 holds wire w
  std::size_t n = 0;
  int time = 0;

  const Descriptor& wire(std::size_t w) const { return descriptors[w - 1]; }
  Descriptor& wire(std::size_t w) { return descriptors[w - 1]; }
};

}  // namespace qnet
