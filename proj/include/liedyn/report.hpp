// Copyright 2026 The liedyn Authors
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

#include <cstddef>
#include <string>
#include <utility>
#include <deque>
#include <vector>

namespace liedyn {

/// One verified property: how many cases were checked and which failed.
/// Informational items carry a verdict but never fail a report.
struct CheckItem {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> counterexamples;
    bool informational = false;
    std::string note;

    bool passed() const { return failed == 0; }
    void record(bool ok, const std::string& counterexample);
};

struct Report {
    std::string title;
    std::vector<std::pair<std::string, std::string>> header;
    std::deque<CheckItem> items;

    bool passed() const;
    CheckItem& add(std::string name, bool informational = false);
    /// Deterministic plain-text rendering; `color` wraps verdicts in ANSI.
    std::string render(bool color) const;
};

inline constexpr std::size_t kMaxCounterexamples = 3;

} // namespace liedyn
