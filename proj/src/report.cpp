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

#include "liedyn/report.hpp"

#include <sstream>

namespace liedyn {

void CheckItem::record(bool ok, const std::string& counterexample)
{
    ++checked;
    if (ok)
        return;
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples)
        counterexamples.push_back(counterexample);
}

bool Report::passed() const
{
    for (const auto& item : items)
        if (!item.informational && !item.passed())
            return false;
    return true;
}

CheckItem& Report::add(std::string name, bool informational)
{
    CheckItem item;
    item.name = std::move(name);
    item.informational = informational;
    items.push_back(std::move(item));
    return items.back();
}

std::string Report::render(bool color) const
{
    auto paint = [color](const std::string& s, const char* code) {
        return color ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
    };
    std::ostringstream out;
    out << "report: " << title << "\n";
    for (const auto& [k, v] : header)
        out << k << ": " << v << "\n";
    for (const auto& item : items) {
        std::string verdict;
        if (item.informational)
            verdict = paint(item.passed() ? "MATCH" : "MISMATCH", "33");
        else
            verdict = item.passed() ? paint("PASS", "32") : paint("FAIL", "31");
        out << "[" << verdict << "] " << item.name << " (" << item.checked - item.failed << "/" << item.checked
            << ")\n";
        if (!item.note.empty())
            out << "  note: " << item.note << "\n";
        for (const auto& ce : item.counterexamples)
            out << "  counterexample: " << ce << "\n";
    }
    out << "result: " << (passed() ? paint("PASS", "32") : paint("FAIL", "31")) << "\n";
    return out.str();
}

} // namespace liedyn
