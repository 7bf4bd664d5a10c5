// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_PARALLEL_HPP
#define HARDYLERAY_PARALLEL_HPP

#include <functional>

namespace hardyleray {

/// Worker count: min(hardware threads, HARDY_LERAY_THREADS when set).
/// A cap of 1 disables threading entirely.
int thread_budget();

/// Runs chunk(i) for i in [0, count) across the thread budget. Chunks must
/// only write to disjoint state; callers merge results in index order, so
/// output never depends on the schedule.
void parallel_chunks(int count, const std::function<void(int)>& chunk);

}  // namespace hardyleray

#endif  // HARDYLERAY_PARALLEL_HPP
