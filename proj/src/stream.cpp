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

#include "ccdyn/stream.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccdyn {

std::vector<UpdateEvent> generate_stream(int n, double insert_probability,
                                         Rng& rng) {
  if (n < 0) throw std::invalid_argument("stream: negative node count");
  if (insert_probability <= 0.0 || insert_probability > 1.0) {
    throw std::invalid_argument("stream: insert probability must be in (0,1]");
  }

  std::vector<NodeId> arrival(n);
  std::iota(arrival.begin(), arrival.end(), 0);
  std::shuffle(arrival.begin(), arrival.end(), rng);

  std::vector<UpdateEvent> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  std::vector<NodeId> present;  // swap-and-pop set for uniform deletion
  std::bernoulli_distribution insert_coin(insert_probability);
  std::size_t next = 0;

  while (next < arrival.size() || !present.empty()) {
    bool can_insert = next < arrival.size();
    bool do_insert =
        can_insert && (present.empty() || insert_coin(rng));
    if (do_insert) {
      NodeId u = arrival[next++];
      events.push_back({EventType::kInsert, u});
      present.push_back(u);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
      std::size_t i = pick(rng);
      NodeId u = present[i];
      present[i] = present.back();
      present.pop_back();
      events.push_back({EventType::kDelete, u});
    }
  }
  return events;
}

bool validate_stream(const std::vector<UpdateEvent>& events, int n,
                     std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (events.size() != 2 * static_cast<std::size_t>(n)) {
    return fail("event count is not 2n");
  }
  std::vector<int> state(n, 0);  // 0 unseen, 1 present, 2 gone
  for (const UpdateEvent& e : events) {
    if (e.node < 0 || e.node >= n) return fail("event references unknown node");
    if (e.type == EventType::kInsert) {
      if (state[e.node] != 0) return fail("node inserted twice");
      state[e.node] = 1;
    } else {
      if (state[e.node] != 1) return fail("delete of a node not present");
      state[e.node] = 2;
    }
  }
  for (int s : state) {
    if (s != 2) return fail("node never fully cycled");
  }
  return true;
}

}  // namespace ccdyn
