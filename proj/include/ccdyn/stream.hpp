// Copyright 2026 The ccdyn Authors.
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

#ifndef CCDYN_STREAM_H_
#define CCDYN_STREAM_H_

#include <string>
#include <vector>

#include "ccdyn/graph_store.hpp"

namespace ccdyn {

enum class EventType { kInsert, kDelete };

struct UpdateEvent {
  EventType type;
  NodeId node;
};

// Node arrival order is a uniform shuffle. Each step inserts the next node
// with the given probability, otherwise deletes a uniformly random
// currently-present node; once every node has arrived, the rest are deleted.
// Every node is inserted exactly once and deleted exactly once: 2n events.
std::vector<UpdateEvent> generate_stream(int n, double insert_probability,
                                         Rng& rng);

// Checks the one-insert-one-delete discipline; on failure stores a message
// in `error` when non-null.
bool validate_stream(const std::vector<UpdateEvent>& events, int n,
                     std::string* error = nullptr);

}  // namespace ccdyn

#endif  // CCDYN_STREAM_H_
