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

#include "liedyn/liedyn.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct SpaceHandle {
    liedyn_space* ptr = nullptr;
    ~SpaceHandle() { liedyn_space_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { liedyn_string_free(ptr); }
};

int report_error(liedyn_status status)
{
    std::cerr << "liedyn: error: " << liedyn_last_error() << "\n";
    return liedyn_status_exit_code(status);
}

bool color_enabled()
{
    const char* v = std::getenv("LIEDYN_COLOR");
    return v && std::string(v) == "1";
}

liedyn_presentation presentation_code(const std::string& name)
{
    if (name == "crossed")
        return LIEDYN_PRESENTATION_CROSSED;
    if (name == "root")
        return LIEDYN_PRESENTATION_ROOT;
    if (name == "char")
        return LIEDYN_PRESENTATION_CHAR;
    return LIEDYN_PRESENTATION_AUTO;
}

liedyn_format format_code(const std::string& name)
{
    return name == "json" ? LIEDYN_FORMAT_JSON : LIEDYN_FORMAT_TEXT;
}

// Prints `out` and converts the status into an exit code.
int finish(liedyn_status status, const OwnedString& out)
{
    if (out.ptr)
        std::cout << out.ptr << std::flush;
    if (status != LIEDYN_OK)
        return report_error(status);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in graded Lie algebras of dynamical systems", "liedyn"};
    app.set_version_flag("--version", std::string(liedyn_version()));
    app.require_subcommand(1);

    std::string space;
    std::string presentation = "auto";
    std::string format = "text";
    const auto presentations = CLI::IsMember({"auto", "crossed", "root", "char"});
    const auto formats = CLI::IsMember({"text", "json"});

    auto* bracket = app.add_subcommand("bracket", "Bracket of two elements");
    std::string lhs;
    std::string rhs;
    bracket->add_option("--space", space, "cyclic:N, padic:p:n or torus:d")->required();
    bracket->add_option("--presentation", presentation, "crossed, root or char")->check(presentations);
    bracket->add_option("--format", format, "text or json")->check(formats);
    bracket->add_option("a", lhs, "first element")->required();
    bracket->add_option("b", rhs, "second element")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    std::string expr;
    eval->add_option("--space", space, "cyclic:N, padic:p:n or torus:d")->required();
    eval->add_option("--presentation", presentation, "crossed, root or char")->check(presentations);
    eval->add_option("--format", format, "text or json")->check(formats);
    eval->add_option("expr", expr, "expression")->required();

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string suite;
    std::uint64_t samples = 500;
    std::uint64_t seed = 0;
    int window = 2;
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--space", space, "cyclic:N, padic:p:n or torus:d")->required();
    verify->add_option("--samples", samples, "number of random samples")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "64-bit seed");
    verify->add_option("--window", window, "grade window of the non-coboundary system")->check(CLI::NonNegativeNumber);

    auto* cartan = app.add_subcommand("cartan", "Cartan matrix and affine type");
    cartan->add_option("--space", space, "cyclic:N or padic:p:n")->required();
    cartan->add_option("--format", format, "text or json")->check(formats);

    auto* exp = app.add_subcommand("export", "Write structure constants as JSON lines");
    int grade_bound = 1;
    int char_bound = 1;
    std::string export_presentation = "char";
    std::string out_path;
    exp->add_option("--space", space, "cyclic:N, padic:p:n or torus:d")->required();
    exp->add_option("--grade-bound", grade_bound, "grades |n| <= B")->required()->check(CLI::NonNegativeNumber);
    exp->add_option("--char-bound", char_bound, "torus frequencies |k_i| <= C")->check(CLI::NonNegativeNumber);
    exp->add_option("--presentation", export_presentation, "char or root")->check(CLI::IsMember({"char", "root"}));
    exp->add_option("--out", out_path, "output file")->required();

    auto* limit = app.add_subcommand("limit", "Level inclusions of the p-adic odometer");
    int p = 2;
    int levels = 2;
    limit->add_option("--p", p, "prime")->required();
    limit->add_option("--levels", levels, "number of levels")->required();
    limit->add_option("--samples", samples, "samples per inclusion")->check(CLI::PositiveNumber);
    limit->add_option("--seed", seed, "64-bit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*limit) {
        OwnedString out;
        return finish(liedyn_limit(p, levels, samples, seed, color_enabled(), &out.ptr), out);
    }

    SpaceHandle handle;
    if (const liedyn_status st = liedyn_space_new(space.c_str(), &handle.ptr); st != LIEDYN_OK)
        return report_error(st);

    OwnedString out;
    if (*bracket)
        return finish(liedyn_bracket(handle.ptr, presentation_code(presentation), lhs.c_str(), rhs.c_str(),
                                     format_code(format), &out.ptr),
                      out);
    if (*eval)
        return finish(
            liedyn_eval(handle.ptr, expr.c_str(), presentation_code(presentation), format_code(format), &out.ptr),
            out);
    if (*verify)
        return finish(liedyn_verify(handle.ptr, suite.c_str(), samples, seed, window, color_enabled(), &out.ptr), out);
    if (*cartan)
        return finish(liedyn_cartan(handle.ptr, format_code(format), &out.ptr), out);
    if (*exp) {
        std::uint64_t records = 0;
        const liedyn_status st = liedyn_export(handle.ptr, grade_bound, char_bound,
                                               presentation_code(export_presentation), out_path.c_str(), &records);
        if (st != LIEDYN_OK)
            return report_error(st);
        std::cout << "wrote " << records << " records to " << out_path << "\n";
        return 0;
    }
    return 2;
}
