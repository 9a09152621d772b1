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


// Acceptance run: one verdict line per criterion.
//
//   acceptance [--cli PATH] [--artifacts DIR] [--samples N]

#include "liedyn/driver.hpp"
#include "liedyn/kacmoody.hpp"
#include "liedyn/random.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>

using namespace liedyn;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kBackends{"cyclic:2", "cyclic:3", "cyclic:4", "padic:2:2",
                                         "padic:3:2", "torus:1",  "torus:2"};

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe)
    {
        ++checked;
        if (!ok && failed++ == 0)
            first_failure = describe();
    }
    Tally& operator+=(const Tally& o)
    {
        if (first_failure.empty())
            first_failure = o.first_failure;
        checked += o.checked;
        failed += o.failed;
        return *this;
    }
    bool ok() const { return failed == 0 && checked > 0; }
};

struct Verdict {
    bool pass = false;
    std::string detail;
};

/// Runs `body` once per backend in parallel and sums the tallies.
Tally per_backend(const std::function<Tally(const SpaceSpec&, std::uint64_t)>& body,
                  const std::vector<std::string>& backends = kBackends)
{
    std::vector<std::future<Tally>> jobs;
    std::uint64_t seed = 1;
    for (const auto& text : backends)
        jobs.push_back(std::async(std::launch::async, body, SpaceSpec::parse(text), seed++));
    Tally total;
    for (auto& j : jobs)
        total += j.get();
    return total;
}

std::string counts(const Tally& t)
{
    std::string s = std::to_string(t.checked - t.failed) + "/" + std::to_string(t.checked);
    if (!t.first_failure.empty())
        s += "; first failure: " + t.first_failure;
    return s;
}

Verdict jacobi(std::size_t samples)
{
    const Tally t = per_backend([samples](const SpaceSpec& space, std::uint64_t seed) {
        Tally out;
        ElementSampler s(space, seed);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = s.lie_element(), b = s.lie_element(), c = s.lie_element();
            const auto j = bracket_extended(a, bracket_extended(b, c)) + bracket_extended(b, bracket_extended(c, a)) +
                           bracket_extended(c, bracket_extended(a, b));
            out.record(j.is_zero(), [&] { return space.to_string() + " crossed " + to_string(j); });

            const auto x = s.root_element(), y = s.root_element(), z = s.root_element();
            const auto k = bracket_root(x, bracket_root(y, z)) + bracket_root(y, bracket_root(z, x)) +
                           bracket_root(z, bracket_root(x, y));
            out.record(k.is_zero(), [&] { return space.to_string() + " root " + to_string(k); });

            const auto u = s.char_element(), v = s.char_element(), w = s.char_element();
            const auto l = bracket_Y(u, bracket_Y(v, w)) + bracket_Y(v, bracket_Y(w, u)) + bracket_Y(w, bracket_Y(u, v));
            out.record(l.is_zero(), [&] { return space.to_string() + " char " + to_string(l); });
        }
        return out;
    });
    return {t.ok(), "jacobi identity, three presentations, 7 backends: " + counts(t)};
}

LieElem strip(LieElem a)
{
    a.add_central(-a.central());
    return a;
}

Verdict cocycle(std::size_t samples)
{
    const Tally t = per_backend([samples](const SpaceSpec& space, std::uint64_t seed) {
        Tally out;
        ElementSampler s(space, seed + 100);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = strip(s.lie_element()), b = strip(s.lie_element()), c = strip(s.lie_element());
            const auto sum = cocycle_alpha(bracket_plain(a, b), c) + cocycle_alpha(bracket_plain(b, c), a) +
                             cocycle_alpha(bracket_plain(c, a), b);
            out.record(sum.is_zero(), [&] { return space.to_string() + " residual " + sum.to_string(); });
        }
        return out;
    });
    return {t.ok(), "2-cocycle law: " + counts(t)};
}

Verdict tau_hom(std::size_t samples)
{
    const Tally t = per_backend([samples](const SpaceSpec& space, std::uint64_t seed) {
        Tally out;
        ElementSampler s(space, seed + 200);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = s.tau_domain_element(), b = s.tau_domain_element();
            const bool hom = tau(bracket_extended(a, b)) == bracket_root(tau(a), tau(b));
            out.record(hom, [&] { return space.to_string() + " " + to_string(a) + " , " + to_string(b); });
            // injectivity: tau(a) = tau(b) only when a = b
            const bool inj = (tau(a) == tau(b)) == (a == b) && (tau(a - b).is_zero() == (a - b).is_zero());
            out.record(inj, [&] { return space.to_string() + " not injective at " + to_string(a); });
        }
        return out;
    });
    return {t.ok(), "tau homomorphism and injectivity: " + counts(t)};
}

std::vector<CharBasisElem> char_basis(const SpaceSpec& space, int grade_bound)
{
    std::vector<CharBasisElem> out;
    for (const auto& chi : enumerate_characters(space, 1))
        for (int n = -grade_bound; n <= grade_bound; ++n)
            out.push_back(CharBasisElem::symbol(chi, n));
    return out;
}

const std::vector<std::string> kCyclicEnum{"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:8"};

Verdict eq5_vs_eq1()
{
    const Tally t = per_backend(
        [](const SpaceSpec& space, std::uint64_t) {
            Tally out;
            const auto basis = char_basis(space, 3);
            for (const auto& a : basis)
                for (const auto& b : basis) {
                    const bool ok = to_crossed(bracket_Y(a, b)) == bracket_extended(to_crossed(a), to_crossed(b));
                    out.record(ok, [&] { return space.to_string() + " " + to_string(a) + " , " + to_string(b); });
                }
            return out;
        },
        kCyclicEnum);
    return {t.ok(), "character bracket equals transported crossed bracket, full enumeration N = 2,3,4,8, |n| <= 3: " +
                        counts(t)};
}

Verdict central_pairing()
{
    // Literal statement: [Y(chi,n), Y(chi^-1,-n)] = n c.
    Tally literal;
    Tally forced;
    std::size_t failures_with_trivial_power = 0;
    for (const auto& text : kCyclicEnum) {
        const auto space = SpaceSpec::parse(text);
        for (const auto& chi : enumerate_characters(space, 1)) {
            for (int n = -3; n <= 3; ++n) {
                const auto r = bracket_Y(CharBasisElem::symbol(chi, n), CharBasisElem::symbol(chi.inverse(), -n));
                const auto want = CharBasisElem::central_element(space, Scalar(n));
                const bool ok = r == want;
                literal.record(ok, [&] {
                    return text + " chi=" + chi.index_string() + " n=" + std::to_string(n) + " gives " + to_string(r);
                });
                if (!ok && chi.eigenvalue_power(n).is_one())
                    ++failures_with_trivial_power;
                const auto expected = CharBasisElem::central_element(space, Scalar(n) * chi.inverse().eigenvalue_power(n));
                forced.record(r == expected, [&] { return text + " " + to_string(r); });
            }
        }
    }
    std::string detail = "central pairing equals n c: " + counts(literal);
    if (literal.failed > 0)
        detail += "; failures occur exactly where chi(lambda)^n != 1 (" +
                  std::to_string(failures_with_trivial_power) +
                  " otherwise); every pair equals n chi(lambda)^-n c, the value of the cocycle that criteria 1 and 4 "
                  "require (" + std::to_string(forced.checked - forced.failed) + "/" + std::to_string(forced.checked) + ")";
    return {literal.ok(), detail};
}

Verdict cartan()
{
    Tally t;
    const auto c2 = cartan_matrix(SpaceSpec::cyclic(2));
    t.record(c2.entries == std::vector<std::vector<long>>{{2, -2}, {-2, 2}}, [&] { return c2.to_string(); });
    for (int n : {2, 3, 4, 8, 9, 27}) {
        const auto m = cartan_matrix(SpaceSpec::cyclic(n));
        bool circulant = m.size == n;
        for (int i = 0; i < n && circulant; ++i)
            for (int j = 0; j < n; ++j) {
                const int d = ((j - i) % n + n) % n;
                const long want = n == 2 ? (d == 0 ? 2 : -2) : (d == 0 ? 2 : (d == 1 || d == n - 1) ? -1 : 0);
                circulant = circulant && m.entries[i][j] == want;
            }
        t.record(circulant, [&] { return "cyclic:" + std::to_string(n) + " not circulant"; });
        t.record(is_affine_cycle_type(m), [&] { return "cyclic:" + std::to_string(n) + " not affine"; });
        t.record(corank(m) == 1, [&] { return "cyclic:" + std::to_string(n) + " corank " + std::to_string(corank(m)); });
    }
    return {t.ok(), "cartan matrices of cyclic:2,3,4,8,9,27 are affine cycles of corank 1: " + counts(t)};
}

Verdict chevalley()
{
    Tally t;
    for (int n : {3, 4}) {
        const auto space = SpaceSpec::cyclic(n);
        const auto m = cartan_matrix(space);
        const auto data = chevalley_generators(space);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto he = bracket_root(data.triples[i].h, data.triples[j].e);
                t.record(he == Scalar(m.entries[i][j]) * data.triples[j].e,
                         [&] { return "N=" + std::to_string(n) + " [h" + std::to_string(i) + ", e" + std::to_string(j) +
                                      "] = " + to_string(he); });
            }
    }
    return {t.ok(), "[h_i, e_j] = a_ij e_j for N = 3, 4: " + counts(t)};
}

Verdict inductive_limit(std::size_t samples)
{
    const Tally t = per_backend(
        [samples](const SpaceSpec& space, std::uint64_t seed) {
            Tally out;
            ElementSampler s(space, seed + 300);
            for (std::size_t i = 0; i < samples; ++i) {
                const auto a = s.lie_element(), b = s.lie_element();
                const auto ia = include_level(a), ib = include_level(b);
                out.record(include_level(bracket_extended(a, b)) == bracket_extended(ia, ib),
                           [&] { return space.to_string() + " bracket " + to_string(a); });
                out.record(cocycle_alpha(ia, ib) == cocycle_alpha(a, b),
                           [&] { return space.to_string() + " cocycle " + to_string(a); });
            }
            return out;
        },
        {"padic:2:1", "padic:2:2", "padic:3:1"});
    return {t.ok(), "level inclusions 2:1->2, 2:2->3, 3:1->2 preserve bracket and cocycle: " + counts(t)};
}

Verdict non_coboundary()
{
    Tally t;
    std::string detail;
    for (int n : {2, 3}) {
        const auto cert = coboundary_system(SpaceSpec::cyclic(n), 2);
        t.record(cert.infeasible(), [&] { return "cyclic:" + std::to_string(n) + " feasible"; });
        detail += " cyclic:" + std::to_string(n) + " rank " + std::to_string(cert.rank_lhs) + " < " +
                  std::to_string(cert.rank_augmented) + " (" + std::to_string(cert.equations) + " equations, " +
                  std::to_string(cert.unknowns) + " unknowns);";
    }
    detail.pop_back();
    return {t.ok(), "cocycle is not a coboundary, window 2:" + detail};
}

Verdict bracket_table(std::size_t samples, const fs::path& artifacts)
{
    std::vector<std::future<Report>> jobs;
    for (const auto& text : kBackends)
        jobs.push_back(std::async(std::launch::async,
                                  [samples, text] { return bracket_table_audit(SpaceSpec::parse(text), samples, 10); }));
    std::ofstream out(artifacts / "bracket_table_audit.txt");
    bool required = true;
    std::size_t informational = 0, mismatched = 0;
    for (auto& j : jobs) {
        const Report r = j.get();
        out << r.render(false) << "\n";
        required = required && r.passed();
        for (const auto& item : r.items)
            if (item.informational) {
                ++informational;
                mismatched += item.passed() ? 0 : 1;
            }
    }
    return {required && out.good(), std::string("bracket table: required formulas ") + (required ? "match" : "MISMATCH") +
                                        "; " + std::to_string(mismatched) + "/" + std::to_string(informational) +
                                        " informational lines mismatch; verdicts in " +
                                        (artifacts / "bracket_table_audit.txt").string()};
}

std::string capture(const std::string& command, int& status)
{
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
        out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism(const std::string& cli, const fs::path& artifacts)
{
    if (cli.empty()) {
        const bool same = run_suite("jacobi-crossed", SpaceSpec::cyclic(3), 200, 42).render(false) ==
                              run_suite("jacobi-crossed", SpaceSpec::cyclic(3), 200, 42).render(false) &&
                          export_records(SpaceSpec::cyclic(4), 2, 1, Presentation::Char) ==
                              export_records(SpaceSpec::cyclic(4), 2, 1, Presentation::Char);
        return {same, "library reports and exports are byte-identical across runs (no --cli given)"};
    }
    Tally t;
    for (const auto& space : {"cyclic:3", "torus:1"}) {
        int s1 = 0, s2 = 0;
        const std::string cmd = "'" + cli + "' verify jacobi-crossed --space " + space + " --samples 200 --seed 42";
        const auto a = capture(cmd, s1);
        const auto b = capture(cmd, s2);
        t.record(s1 == 0 && s2 == 0 && a == b && !a.empty(), [&] { return std::string("verify on ") + space; });
    }
    for (const auto& space : {"cyclic:4", "torus:2"}) {
        const auto p1 = artifacts / "export_1.jsonl", p2 = artifacts / "export_2.jsonl";
        int s1 = 0, s2 = 0;
        capture("'" + cli + "' export --space " + space + " --grade-bound 2 --out '" + p1.string() + "'", s1);
        capture("'" + cli + "' export --space " + space + " --grade-bound 2 --out '" + p2.string() + "'", s2);
        const auto a = slurp(p1);
        t.record(s1 == 0 && s2 == 0 && a == slurp(p2) && !a.empty(), [&] { return std::string("export on ") + space; });
    }
    return {t.ok(), "liedyn verify and export are byte-identical across two runs: " + counts(t)};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"liedyn acceptance run"};
    std::string cli;
    std::string artifacts = "acceptance_artifacts";
    std::size_t samples = 500;
    app.add_option("--cli", cli, "liedyn binary for the command-line criteria");
    app.add_option("--artifacts", artifacts, "directory for report artifacts");
    app.add_option("--samples", samples, "samples per backend")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(artifacts);

    const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
        {1, [&] { return jacobi(samples); }},
        {2, [&] { return cocycle(samples); }},
        {3, [&] { return tau_hom(samples); }},
        {4, [] { return eq5_vs_eq1(); }},
        {5, [] { return central_pairing(); }},
        {6, [] { return cartan(); }},
        {7, [] { return chevalley(); }},
        {8, [&] { return inductive_limit(samples); }},
        {9, [] { return non_coboundary(); }},
        {10, [&] { return bracket_table(samples, artifacts); }},
        {11, [&] { return determinism(cli, artifacts); }},
    };
    std::ofstream summary(fs::path(artifacts) / "acceptance.txt");
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        const std::string line =
            "criterion " + std::to_string(id) + ": " + (v.pass ? "PASS" : "FAIL") + "  " + v.detail;
        std::cout << line << std::endl;
        if (std::getenv("LIEDYN_ACCEPTANCE_TIMING"))
            std::cerr << "  (" << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s)\n";
        summary << line << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
