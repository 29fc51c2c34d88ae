// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "invz/asymptotics.hpp"
#include "invz/cli.hpp"
#include "invz/integral.hpp"
#include "invz/parser.hpp"
#include "invz/symmetric.hpp"
#include "support/generators.hpp"

using invz::InvZSeries;
using invz::Poly;
using invz::Rat;
using invz::RootConfig;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

constexpr std::size_t kConfigs = 200;
constexpr long kRootBound = 1000;
constexpr std::size_t kLemmaExtra = 10;
constexpr std::size_t kCrossPathTruncation = 32;
constexpr std::size_t kDirectOracleMaxQ = 5;

// The shared randomized corpus for criteria 1 and 3-6: q uniform in 1..8.
const std::vector<RootConfig>& corpus() {
    static const std::vector<RootConfig> configs = [] {
        invz::testing::Gen gen(20260101);
        std::vector<RootConfig> out;
        out.reserve(kConfigs);
        for (std::size_t i = 0; i < kConfigs; ++i) {
            out.push_back(gen.root_config(gen.index(1, 8), kRootBound));
        }
        return out;
    }();
    return configs;
}

struct Paths {
    InvZSeries reference;
    InvZSeries check;
};

const std::vector<Paths>& integrals() {
    static const std::vector<Paths> all = [] {
        std::vector<Paths> out;
        for (const auto& cfg : corpus()) {
            out.push_back({invz::integrate_via_coefficients(cfg, kCrossPathTruncation).series,
                           invz::integrate_via_pfd(cfg, kCrossPathTruncation).series});
        }
        return out;
    }();
    return all;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome lemma_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checks = 0;
    for (const auto& cfg : corpus()) {
        const std::size_t q = cfg.q();
        const auto report = invz::verify_lemma(cfg, q + kLemmaExtra);
        o.require(report.all_pass(), "verify_lemma for q=" + std::to_string(q));
        for (const auto& row : report.rows) {
            ++checks;
            if (row.k < q) {
                o.require(row.lhs.is_zero(), "m_k = 0 below q");
            } else if (row.k == q) {
                o.require(row.lhs.is_one(), "m_q = 1");
            } else if (q <= kDirectOracleMaxQ) {
                o.require(row.lhs == invz::complete_homogeneous_direct(cfg.roots(), row.k - q),
                          "m_{q+l} = S_l by direct enumeration");
            }
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 10.0, "runtime under 10 s");
    o.note(std::to_string(corpus().size()) + " configs, " + std::to_string(checks) + " moments, " +
           std::to_string(elapsed) + " s");
    return o;
}

Outcome fixture() {
    Outcome o;
    const auto g = invz::integrate_via_coefficients(RootConfig({1, 2}), 6).series;
    const std::vector<Rat> expected{0, 0, Rat(-1, 2), -1, Rat(-7, 4), -3};
    for (std::size_t n = 1; n < expected.size(); ++n) {
        o.require(g[n] == expected[n], "b_" + std::to_string(n) + " = " + expected[n].str() + " (got " +
                                           g[n].str() + ")");
    }
    o.note("series: " + g.str());
    return o;
}

Outcome cross_path() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& all = integrals();
    for (const auto& p : all) {
        o.require(p.reference.truncation() == kCrossPathTruncation && p.check.truncation() == kCrossPathTruncation,
                  "both routes keep truncation 32");
        o.require(agree_on_window(p.reference, p.check), "pfd route = coefficient route");
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 30.0, "runtime under 30 s");
    o.note(std::to_string(all.size()) + " configs at N = 32, " + std::to_string(elapsed) + " s");
    return o;
}

Outcome defining_contract() {
    Outcome o;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const auto& cfg = corpus()[i];
        const InvZSeries f = invz::rational_to_series(Poly(Rat(1)), cfg.denominator(), kCrossPathTruncation + 1);
        o.require(agree_on_window(invz::derivative(integrals()[i].reference), f), "g' = 1/Q (coefficient route)");
        o.require(agree_on_window(invz::derivative(integrals()[i].check), f), "g' = 1/Q (pfd route)");
    }
    return o;
}

Outcome valuation_theorem() {
    Outcome o;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const auto& cfg = corpus()[i];
        const Rat leading = -Rat(static_cast<long>(cfg.q())).inverse();
        for (const InvZSeries* g : {&integrals()[i].reference, &integrals()[i].check}) {
            o.require(invz::valuation(*g) == invz::Valuation::finite(cfg.q()), "o(g) = q");
            o.require((*g)[0].is_zero(), "b_0 = 0");
            o.require((*g)[cfg.q()] == leading, "b_q = -1/q");
        }
    }
    return o;
}

Outcome closed_form() {
    Outcome o;
    invz::testing::Gen gen(77);
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const auto& cfg = corpus()[i];
        const std::size_t q = cfg.q();
        const auto& g = integrals()[i].reference;
        const invz::SymTable table = invz::sym_table(cfg.roots(), kCrossPathTruncation - q);
        for (std::size_t l = 0; l + q <= kCrossPathTruncation; ++l) {
            o.require(g[q + l] == -table.h[l] / Rat(static_cast<long>(q + l)), "b_{q+l} = -S_l/(q+l)");
        }

        std::vector<Rat> shuffled(cfg.roots().begin(), cfg.roots().end());
        gen.shuffle(shuffled);
        o.require(agree_on_window(invz::integrate_via_coefficients(RootConfig(shuffled), kCrossPathTruncation).series, g),
                  "permutation invariance");

        const Rat t = gen.nonzero_rational(20);
        const auto scaled = invz::integrate_via_coefficients(cfg.scaled(t), kCrossPathTruncation).series;
        Rat tl = 1;
        for (std::size_t l = 0; l + q <= kCrossPathTruncation; ++l) {
            o.require(scaled[q + l] == tl * g[q + l], "b_{q+l}(t a) = t^l b_{q+l}(a)");
            tl *= t;
        }
    }
    return o;
}

Outcome vandermonde_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    invz::testing::Gen gen(4242);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = gen.index(1, 6);
        const auto x = gen.distinct_rationals(n, kRootBound, true);
        const Rat v = invz::vandermonde_product(x);
        o.require(invz::determinant_exact(invz::vandermonde_matrix(x)) == v, "det = product formula");
        // V_n = (-1)^(n-1) prod_{i<n} (x_i - x_n) V_{n-1}
        Rat step = (n - 1) % 2 == 0 ? Rat(1) : Rat(-1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            step *= x[k] - x[n - 1];
        }
        o.require(v == step * invz::vandermonde_product(std::span(x).first(n - 1)), "Vandermonde recurrence");
        for (std::size_t l = 1; l <= 6; ++l) {
            o.require(invz::generalized_vandermonde(x, l) == v * invz::complete_homogeneous(x, l),
                      "V_{n,l} = V_n S_l");
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 10.0, "runtime under 10 s");
    o.note("100 point sets, " + std::to_string(elapsed) + " s");
    return o;
}

Outcome scaling_limit() {
    Outcome o;
    const auto report = invz::scaling_limit_table(RootConfig({1, 2}), {1, Rat(1, 2), Rat(1, 4), Rat(1, 8)}, 10.0, 64, 24);
    o.require(report.exact_checks_pass(), "exact b_q = -1/q and t^l law in every row");
    o.require(report.monotone_decreasing, "sup-error strictly decreasing as t decreases");
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        std::ostringstream line;
        line << "t=" << row.t.str() << " sup_error=" << invz::format_double(row.sup_error);
        if (i > 0) {
            line << " ratio=" << row.ratio;
        }
        o.note(line.str());
    }
    for (std::size_t i = report.rows.size() - 2; i < report.rows.size(); ++i) {
        const double r = report.rows[i].ratio;
        o.require(r >= invz::kRatioBandLow && r <= invz::kRatioBandHigh,
                  "ratio for t=" + report.rows[i].t.str() + " within [0.3, 0.7]");
    }

    // Dipole: charges 1/Q'(pole) for a single root a, compared with -1/z.
    constexpr double kDipoleTolerance = 1e-6;
    const auto dipole = invz::charge_system_from_roots(RootConfig({Rat(1, 100)}));
    const std::complex<double> z{10.0, 0.0};
    const auto v = invz::potential_numeric(dipole, z);
    const double rel = std::abs(v + 1.0 / z) / std::abs(1.0 / z);
    o.note("dipole a=1/100 z=10: potential=" + invz::format_double(v.real()) +
           " relative deviation from -1/z=" + invz::format_double(rel) + " (first-order term a/(2z) = 5e-4)");
    o.require(rel <= kDipoleTolerance, "dipole potential within 1e-6 relative of -1/z");
    return o;
}

int cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    const int code = invz::cli::run(args, o, e);
    out = o.str();
    err = e.str();
    return code;
}

Outcome cli_suite() {
    Outcome o;
    std::string out, err, out2;

    const std::vector<std::string> integrate{"integrate", "--roots", "1,2", "--terms", "6", "--format", "json"};
    const std::string expected_json =
        "{\n  \"q\": 2,\n  \"roots\": [\n    \"1/1\",\n    \"2/1\"\n  ],\n  \"truncation\": 5,\n"
        "  \"b0_convention\": \"zero\",\n  \"coefficients\": [\n"
        "    {\n      \"n\": 0,\n      \"value\": \"0/1\"\n    },\n"
        "    {\n      \"n\": 1,\n      \"value\": \"0/1\"\n    },\n"
        "    {\n      \"n\": 2,\n      \"value\": \"-1/2\"\n    },\n"
        "    {\n      \"n\": 3,\n      \"value\": \"-1/1\"\n    },\n"
        "    {\n      \"n\": 4,\n      \"value\": \"-7/4\"\n    },\n"
        "    {\n      \"n\": 5,\n      \"value\": \"-3/1\"\n    }\n  ],\n"
        "  \"valuation\": 2,\n  \"paths_agree\": true\n}\n";
    o.require(cli(integrate, out, err) == 0, "integrate exits 0");
    o.require(out == expected_json, "integrate JSON matches the frozen bytes");
    cli(integrate, out2, err);
    o.require(out2 == out, "integrate JSON identical across runs");

    o.require(cli({"identities", "--roots", "1,2", "--max-k", "6"}, out, err) == 0, "identities exits 0");
    o.require(out.find("pass=false") == std::string::npos && out.find("summary: 7/7 passed") != std::string::npos,
              "identities reports all pass");

    o.require(cli({"integrate", "--roots", "1,1", "--terms", "6"}, out, err) == 1, "repeated roots exit 1");
    o.require(err.find("roots must be pairwise distinct") != std::string::npos, "repeated roots message");

    const std::vector<std::string> positive{"z*(z-1)*(z-2)", "z^3-3*z^2+2*z", "z*(z-1/2)", " ( z + 1 ) ^ 2 ",
                                            "-z", "3/6*z - -2", "z-(z-3)", "1"};
    for (const auto& text : positive) {
        try {
            invz::parse_poly(text);
        } catch (const invz::ParseError& e) {
            o.require(false, "accepts \"" + text + "\": " + e.what());
        }
    }
    const std::vector<std::string> negative{"",     "(z-1",  "z-1)", "z+",    "z**2",  "z^1/2", "z^-1",
                                            "z^(2)", "z^",   "x+1",  "2z",    "z/2",   "1/0*z", "0.5*z",
                                            "()",    "z 1",  "z^2^3"};
    for (const auto& text : negative) {
        try {
            invz::parse_poly(text);
            o.require(false, "rejects \"" + text + "\"");
        } catch (const invz::ParseError& e) {
            o.require(e.offset() <= text.size(), "error position inside \"" + text + "\"");
            o.require(std::string(e.what()).find("at offset") != std::string::npos, "positioned message");
        }
    }
    o.note(std::to_string(positive.size()) + " accepted, " + std::to_string(negative.size()) + " rejected");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "moment identities m_k = 0, 1, S_l on 200 random configurations", lemma_suite},
        {2, "q = 2 fixture b_1..b_5 = 0, -1/2, -1, -7/4, -3", fixture},
        {3, "partial-fraction and coefficient routes agree at N = 32", cross_path},
        {4, "derivative of g equals the expansion of 1/Q", defining_contract},
        {5, "valuation o(g) = q with leading coefficient -1/q", valuation_theorem},
        {6, "closed form -S_l/(q+l), permutation invariance, t^l scaling", closed_form},
        {7, "Vandermonde product, recurrence and generalized factorization", vandermonde_suite},
        {8, "scaling limit to -1/(q z^q) and dipole limit", scaling_limit},
        {9, "CLI byte-stable output, exit codes, parser corpora", cli_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %d: %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title);
        // Show each distinct note once.
        std::vector<std::string> seen;
        for (const auto& n : out.notes) {
            if (std::find(seen.begin(), seen.end(), n) == seen.end()) {
                seen.push_back(n);
                std::printf("       %s\n", n.c_str());
            }
        }
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
