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

// Command implementations behind the C API: evaluation, property suites,
// Cartan reports, structure-constant export and level inclusions.

#include "liedyn/expr.hpp"
#include "liedyn/report.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liedyn {

enum class OutputFormat { Text, Json };

std::string eval_command(const SpaceSpec& space, std::string_view expr, std::optional<Presentation> presentation,
                         OutputFormat format);

std::string bracket_command(const SpaceSpec& space, std::optional<Presentation> presentation, std::string_view a,
                            std::string_view b, OutputFormat format);

const std::vector<std::string>& suite_names();

/// Deterministic in (suite, space, samples, seed, window). `window` is the
/// grade window of the non-coboundary system.
Report run_suite(std::string_view suite, const SpaceSpec& space, std::size_t samples, std::uint64_t seed,
                 int window = 2);

std::string cartan_command(const SpaceSpec& space, OutputFormat format);

/// One JSON object per line for every ordered pair of basis elements
/// with a nonzero bracket: characters (char) or delta / Fourier monomials
/// (root), grades |n| <= grade_bound, torus frequencies |k_i| <= char_bound.
std::string export_records(const SpaceSpec& space, int grade_bound, int char_bound, Presentation presentation,
                           std::size_t* count = nullptr);

/// Writes export_records to `path`; returns the record count.
std::size_t export_structure_constants(const SpaceSpec& space, int grade_bound, int char_bound,
                                       Presentation presentation, const std::string& path);

/// Inclusion checks Z/p^n -> Z/p^(n+1) for n = 1 .. levels - 1, plus the
/// Cartan type of every level.
Report limit_report(int p, int levels, std::size_t samples, std::uint64_t seed);

} // namespace liedyn
