#include "invz/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invz/asymptotics.hpp"
#include "invz/integral.hpp"
#include "invz/parser.hpp"
#include "invz/symmetric.hpp"

namespace invz::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RootSource {
    std::string roots;
    std::string den;

    void attach(CLI::App* cmd) {
        auto* r = cmd->add_option("--roots", roots, "Distinct nonzero roots a1,a2,... (root 0 is implicit)");
        auto* d = cmd->add_option("--den", den, "Denominator in factored form z*(z-a1)*...");
        r->excludes(d);
    }

    RootConfig resolve() const {
        if (!den.empty()) {
            return RootConfig(roots_from_factored(den));
        }
        if (roots.empty()) {
            throw CLI::RequiredError("--roots or --den");
        }
        return RootConfig(parse_rational_list(roots));
    }
};

std::size_t resolve_truncation(const RootConfig& cfg, std::size_t terms, std::size_t truncation) {
    std::size_t n = truncation;
    if (terms > 0) {
        n = terms - 1;
    }
    if (n < cfg.q() + 1) {
        throw std::invalid_argument("truncation must be at least q + 1 = " + std::to_string(cfg.q() + 1));
    }
    return n;
}

ordered_json rat_array(std::span<const Rat> v) {
    ordered_json a = ordered_json::array();
    for (const Rat& x : v) {
        a.push_back(x.str());
    }
    return a;
}

std::string join(std::span<const Rat> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].str();
    }
    return s;
}

int cmd_integrate(const RootConfig& cfg, std::size_t n, const std::string& format, std::ostream& out) {
    const IntegralResult reference = integrate_via_coefficients(cfg, n);
    const IntegralResult check = integrate_via_pfd(cfg, n);
    const bool agree = agree_on_window(reference.series, check.series);
    const auto& b = reference.series.coefficients();

    if (format == "json") {
        ordered_json j;
        j["q"] = cfg.q();
        j["roots"] = rat_array(cfg.roots());
        j["truncation"] = n;
        j["b0_convention"] = "zero";
        ordered_json coeffs = ordered_json::array();
        for (std::size_t i = 0; i < b.size(); ++i) {
            coeffs.push_back(ordered_json{{"n", i}, {"value", b[i].str()}});
        }
        j["coefficients"] = std::move(coeffs);
        j["valuation"] = reference.valuation.is_infinite() ? ordered_json(nullptr)
                                                           : ordered_json(reference.valuation.value());
        j["paths_agree"] = agree;
        out << j.dump(2) << '\n';
    } else {
        out << "q=" << cfg.q() << '\n';
        out << "roots=" << join(cfg.roots()) << '\n';
        out << "truncation=" << n << '\n';
        for (std::size_t i = 0; i < b.size(); ++i) {
            out << "b_" << i << '=' << b[i].str() << '\n';
        }
        out << "valuation=" << reference.valuation.str() << '\n';
        out << "paths_agree=" << (agree ? "true" : "false") << '\n';
    }
    return agree ? kSuccess : kCheckFailed;
}

int cmd_pfd(const RootConfig& cfg, const std::string& numerator, const std::string& format, std::ostream& out) {
    const Poly p = parse_poly(numerator);
    const PartialFractions pf = partial_fractions(p, cfg);
    const bool ok = pf.reconstruct() == p;
    if (format == "json") {
        ordered_json j;
        j["numerator"] = p.str();
        j["denominator"] = cfg.denominator().str();
        ordered_json terms = ordered_json::array();
        for (const auto& t : pf.terms) {
            terms.push_back(ordered_json{{"pole", t.pole.str()}, {"coefficient", t.coefficient.str()}});
        }
        j["terms"] = std::move(terms);
        j["reconstructs"] = ok;
        out << j.dump(2) << '\n';
    } else {
        out << "numerator=" << p.str() << '\n';
        out << "denominator=" << cfg.denominator().str() << '\n';
        for (const auto& t : pf.terms) {
            out << "pole=" << t.pole.str() << " coefficient=" << t.coefficient.str() << '\n';
        }
        out << "reconstructs=" << (ok ? "true" : "false") << '\n';
    }
    return ok ? kSuccess : kCheckFailed;
}

int cmd_identities(const RootConfig& cfg, long max_k, std::ostream& out) {
    const std::size_t k_max = max_k < 0 ? cfg.q() + 10 : static_cast<std::size_t>(max_k);
    const LemmaReport report = verify_lemma(cfg, k_max);
    std::size_t failed = 0;
    for (const auto& row : report.rows) {
        out << "k=" << row.k << " lhs=" << row.lhs.str() << " rhs=" << row.rhs.str()
            << " pass=" << (row.pass ? "true" : "false") << '\n';
        failed += row.pass ? 0 : 1;
    }
    out << "summary: " << report.rows.size() - failed << '/' << report.rows.size() << " passed\n";
    return failed == 0 ? kSuccess : kCheckFailed;
}

int cmd_vandermonde(const std::vector<Rat>& points, std::size_t l, std::ostream& out) {
    if (points.empty()) {
        throw std::invalid_argument("--points needs at least one value");
    }
    const Rat product = vandermonde_product(points);
    const Rat det = determinant_exact(vandermonde_matrix(points));
    const Rat general = generalized_vandermonde(points, l);
    const Rat h = complete_homogeneous(points, l);

    // V_n = (-1)^(n-1) prod_{i<n}(x_i - x_n) V_{n-1}
    const std::size_t n = points.size();
    Rat factor = (n % 2 == 0) ? Rat(-1) : Rat(1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        factor *= points[i] - points[n - 1];
    }
    const Rat recursive = factor * vandermonde_product(std::span(points).first(n - 1));

    const bool det_ok = det == product;
    const bool rec_ok = recursive == product;
    const bool gen_ok = general == product * h;
    out << "n=" << n << '\n';
    out << "product=" << product.str() << '\n';
    out << "determinant=" << det.str() << " pass=" << (det_ok ? "true" : "false") << '\n';
    out << "recurrence=" << recursive.str() << " pass=" << (rec_ok ? "true" : "false") << '\n';
    out << "l=" << l << " generalized=" << general.str() << " product_times_h=" << (product * h).str()
        << " pass=" << (gen_ok ? "true" : "false") << '\n';
    return det_ok && rec_ok && gen_ok ? kSuccess : kCheckFailed;
}

int cmd_limit(const RootConfig& cfg, const std::string& scales_text, double radius, std::size_t samples,
              std::size_t truncation, std::ostream& out, std::ostream& err) {
    const std::vector<Rat> scales = parse_rational_list(scales_text);
    const ScalingReport report = scaling_limit_table(cfg, scales, radius, samples, truncation);
    out << report.csv();
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        if (!row.ratio_in_band) {
            err << "note: t=" << row.t.str() << " error ratio " << format_double(row.ratio) << " outside ["
                << kRatioBandLow << ", " << kRatioBandHigh << "]\n";
        }
    }
    if (!report.monotone_decreasing) {
        err << "note: sup-error is not strictly decreasing in t\n";
    }
    if (!report.exact_checks_pass()) {
        err << "error: exact scaling law violated\n";
        return kCheckFailed;
    }
    return kSuccess;
}

}  // namespace

std::vector<Rat> parse_rational_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        try {
            out.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.offset());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<Rat> roots_from_factored(std::string_view text) {
    const PolyExprPtr e = parse_expr(text);
    std::vector<Rat> roots;
    std::size_t zero_roots = 0;
    for (const PolyExpr* f : top_level_factors(*e)) {
        const Poly p = to_poly(*f);
        if (p.degree() != 1 || !p.is_monic()) {
            throw ParseError("denominator must be a product of monic linear factors z*(z-a1)*...", f->offset);
        }
        const Rat root = -p.coefficient(0);
        if (root.is_zero()) {
            ++zero_roots;
        } else {
            roots.push_back(root);
        }
    }
    if (zero_roots == 0) {
        throw ParseError("denominator must contain the factor z", 0);
    }
    if (zero_roots > 1) {
        throw InvalidRoots("roots must be pairwise distinct");
    }
    return roots;
}

std::string format_factored(std::span<const Rat> roots) {
    std::string s = "z";
    for (const Rat& a : roots) {
        s += a.sign() > 0 ? "*(z-" + a.short_str() + ")" : "*(z+" + a.abs().short_str() + ")";
    }
    return s;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact series integrals of 1/(z(z-a1)...(z-aq)) at infinity", "invz"};
    app.require_subcommand(1);

    RootSource integrate_src, pfd_src, ident_src, limit_src;
    std::size_t terms = 0;
    std::size_t truncation = 8;
    std::string format = "text";
    std::string numerator = "1";
    long max_k = -1;
    std::string points;
    std::size_t l = 1;
    std::string scales = "1,1/2,1/4,1/8";
    double radius = 10.0;
    std::size_t samples = 64;
    std::size_t limit_truncation = 24;

    auto* integrate = app.add_subcommand("integrate", "Series of the integral of 1/Q by both routes");
    integrate_src.attach(integrate);
    auto* terms_opt = integrate->add_option("--terms", terms, "Number of coefficients b_0..b_{terms-1}")
                          ->check(CLI::PositiveNumber);
    integrate->add_option("--truncation", truncation, "Highest power of 1/z kept")->excludes(terms_opt);
    integrate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* pfd = app.add_subcommand("pfd", "Partial fractions of P/Q");
    pfd_src.attach(pfd);
    pfd->add_option("--num", numerator, "Numerator polynomial in z");
    pfd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* identities = app.add_subcommand("identities", "Check the weighted power-sum identities");
    ident_src.attach(identities);
    identities->add_option("--max-k", max_k, "Largest power checked (default q+10)");

    auto* vandermonde = app.add_subcommand("vandermonde", "Vandermonde product, determinant and generalized form");
    vandermonde->add_option("--points", points, "Points x1,x2,...")->required();
    vandermonde->add_option("--l", l, "Raise of the top exponent");

    auto* limit = app.add_subcommand("limit", "Convergence to -1/(q z^q) as the roots shrink (CSV)");
    limit_src.attach(limit);
    limit->add_option("--scales", scales, "Positive scale factors t");
    limit->add_option("--radius", radius, "Sample circle radius");
    limit->add_option("--samples", samples, "Points on the circle")->check(CLI::PositiveNumber);
    limit->add_option("--truncation", limit_truncation, "Highest power of 1/z kept");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (integrate->parsed()) {
            const RootConfig cfg = integrate_src.resolve();
            return cmd_integrate(cfg, resolve_truncation(cfg, terms, truncation), format, out);
        }
        if (pfd->parsed()) {
            return cmd_pfd(pfd_src.resolve(), numerator, format, out);
        }
        if (identities->parsed()) {
            const RootConfig cfg = ident_src.resolve();
            if (max_k >= 0 && static_cast<std::size_t>(max_k) < cfg.q()) {
                throw std::invalid_argument("--max-k must be at least q = " + std::to_string(cfg.q()));
            }
            return cmd_identities(cfg, max_k, out);
        }
        if (vandermonde->parsed()) {
            return cmd_vandermonde(parse_rational_list(points), l, out);
        }
        if (limit->parsed()) {
            const RootConfig cfg = limit_src.resolve();
            return cmd_limit(cfg, scales, radius, samples, resolve_truncation(cfg, 0, limit_truncation), out,
                             err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidRoots& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace invz::cli
