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

#include "liedyn/driver.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct liedyn_space {
    liedyn::SpaceSpec spec;
};

struct liedyn_element {
    liedyn::Element value;
};

namespace {

thread_local std::string last_error;

liedyn_status fail(liedyn_status status, const std::string& message)
{
    last_error = message;
    return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <class F>
liedyn_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const liedyn::ParseError& e) {
        return fail(LIEDYN_ERR_PARSE, e.what());
    } catch (const liedyn::UsageError& e) {
        return fail(LIEDYN_ERR_USAGE, e.what());
    } catch (const liedyn::RingMismatch& e) {
        return fail(LIEDYN_ERR_RING, e.what());
    } catch (const liedyn::SpaceMismatch& e) {
        return fail(LIEDYN_ERR_SPACE, e.what());
    } catch (const liedyn::IoError& e) {
        return fail(LIEDYN_ERR_IO, e.what());
    } catch (const liedyn::DomainError& e) {
        return fail(LIEDYN_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LIEDYN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LIEDYN_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::optional<liedyn::Presentation> to_presentation(liedyn_presentation p)
{
    switch (p) {
    case LIEDYN_PRESENTATION_CROSSED:
        return liedyn::Presentation::Crossed;
    case LIEDYN_PRESENTATION_ROOT:
        return liedyn::Presentation::Root;
    case LIEDYN_PRESENTATION_CHAR:
        return liedyn::Presentation::Char;
    case LIEDYN_PRESENTATION_AUTO:
        return std::nullopt;
    }
    throw liedyn::UsageError("unknown presentation code");
}

liedyn::OutputFormat to_format(liedyn_format f)
{
    if (f == LIEDYN_FORMAT_TEXT)
        return liedyn::OutputFormat::Text;
    if (f == LIEDYN_FORMAT_JSON)
        return liedyn::OutputFormat::Json;
    throw liedyn::UsageError("unknown output format code");
}

void require(const void* p, const char* what)
{
    if (!p)
        throw liedyn::UsageError(std::string(what) + " must not be NULL");
}

} // namespace

extern "C" {

const char* liedyn_version(void)
{
    return "0.1.0";
}

const char* liedyn_last_error(void)
{
    return last_error.c_str();
}

int liedyn_status_exit_code(liedyn_status status)
{
    switch (status) {
    case LIEDYN_OK:
        return 0;
    case LIEDYN_ERR_SUITE_FAILED:
        return 1;
    case LIEDYN_ERR_USAGE:
    case LIEDYN_ERR_PARSE:
        return 2;
    default:
        return 3;
    }
}

void liedyn_string_free(char* s)
{
    std::free(s);
}

liedyn_status liedyn_space_new(const char* spec, liedyn_space** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new liedyn_space{liedyn::SpaceSpec::parse(spec)};
        return LIEDYN_OK;
    });
}

void liedyn_space_free(liedyn_space* space)
{
    delete space;
}

liedyn_status liedyn_space_describe(const liedyn_space* space, char** out)
{
    return guarded([&] {
        require(space, "space");
        require(out, "out");
        *out = copy_string(space->spec.to_string());
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_element_parse(const liedyn_space* space, const char* text, liedyn_presentation presentation,
                                   liedyn_element** out)
{
    return guarded([&] {
        require(space, "space");
        require(text, "text");
        require(out, "out");
        const auto parsed = liedyn::parse_expression(text, space->spec, to_presentation(presentation));
        const liedyn::Value v = liedyn::evaluate(parsed);
        if (!std::holds_alternative<liedyn::Element>(v))
            throw liedyn::UsageError("expression is a " + liedyn::type_name(v) + ", not an element");
        *out = new liedyn_element{std::get<liedyn::Element>(v)};
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_element_bracket(const liedyn_element* a, const liedyn_element* b, liedyn_element** out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = new liedyn_element{liedyn::bracket(a->value, b->value)};
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_element_add(const liedyn_element* a, const liedyn_element* b, liedyn_element** out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        if (a->value.index() != b->value.index())
            throw liedyn::UsageError("operands use different presentations");
        liedyn::Element sum = std::visit(
            [&](const auto& x) -> liedyn::Element {
                using T = std::decay_t<decltype(x)>;
                return x + std::get<T>(b->value);
            },
            a->value);
        *out = new liedyn_element{std::move(sum)};
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_element_render(const liedyn_element* e, char** out)
{
    return guarded([&] {
        require(e, "element");
        require(out, "out");
        *out = copy_string(liedyn::render(e->value));
        return LIEDYN_OK;
    });
}

int liedyn_element_is_zero(const liedyn_element* e)
{
    if (!e)
        return 0;
    return std::visit([](const auto& x) { return x.is_zero() ? 1 : 0; }, e->value);
}

void liedyn_element_free(liedyn_element* e)
{
    delete e;
}

liedyn_status liedyn_eval(const liedyn_space* space, const char* expr, liedyn_presentation presentation,
                          liedyn_format format, char** out)
{
    return guarded([&] {
        require(space, "space");
        require(expr, "expr");
        require(out, "out");
        *out = copy_string(liedyn::eval_command(space->spec, expr, to_presentation(presentation), to_format(format)));
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_bracket(const liedyn_space* space, liedyn_presentation presentation, const char* a,
                             const char* b, liedyn_format format, char** out)
{
    return guarded([&] {
        require(space, "space");
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = copy_string(
            liedyn::bracket_command(space->spec, to_presentation(presentation), a, b, to_format(format)));
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_verify(const liedyn_space* space, const char* suite, uint64_t samples, uint64_t seed,
                            int window, int color, char** report)
{
    return guarded([&] {
        require(space, "space");
        require(suite, "suite");
        require(report, "report");
        const liedyn::Report r = liedyn::run_suite(suite, space->spec, samples, seed, window);
        *report = copy_string(r.render(color != 0));
        if (r.passed())
            return LIEDYN_OK;
        last_error = "suite " + std::string(suite) + " failed";
        return LIEDYN_ERR_SUITE_FAILED;
    });
}

const char* const* liedyn_suite_names(void)
{
    static const std::vector<const char*> names = [] {
        std::vector<const char*> v;
        for (const auto& n : liedyn::suite_names())
            v.push_back(n.c_str());
        v.push_back(nullptr);
        return v;
    }();
    return names.data();
}

liedyn_status liedyn_cartan(const liedyn_space* space, liedyn_format format, char** out)
{
    return guarded([&] {
        require(space, "space");
        require(out, "out");
        *out = copy_string(liedyn::cartan_command(space->spec, to_format(format)));
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_export(const liedyn_space* space, int grade_bound, int char_bound,
                            liedyn_presentation presentation, const char* path, uint64_t* records)
{
    return guarded([&] {
        require(space, "space");
        require(path, "path");
        const auto p = to_presentation(presentation).value_or(liedyn::Presentation::Char);
        const std::size_t n = liedyn::export_structure_constants(space->spec, grade_bound, char_bound, p, path);
        if (records)
            *records = n;
        return LIEDYN_OK;
    });
}

liedyn_status liedyn_limit(int p, int levels, uint64_t samples, uint64_t seed, int color, char** report)
{
    return guarded([&] {
        require(report, "report");
        const liedyn::Report r = liedyn::limit_report(p, levels, samples, seed);
        *report = copy_string(r.render(color != 0));
        if (r.passed())
            return LIEDYN_OK;
        last_error = "limit checks failed";
        return LIEDYN_ERR_SUITE_FAILED;
    });
}

} // extern "C"
