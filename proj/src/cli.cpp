#include "odes/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "odes/errors.h"
#include "odes/eval.h"
#include "odes/leibniz.h"
#include "odes/morder.h"
#include "odes/nimage2.h"
#include "odes/nonhom.h"
#include "odes/parse.h"
#include "odes/verify.h"

namespace odes {

namespace {

using nlohmann::json;

struct run_config {
    std::string fmt = "text";
    unsigned terms = 7;
    rational center{0};
    unsigned digits = 80;
    rational grid_lo{0};
    rational grid_hi{10};
    unsigned grid_count = 11;
};

void add_common(CLI::App* cmd, run_config& cfg, std::string& grid_text,
                std::string& center_text) {
    cmd->add_option("--format", cfg.fmt, "text|json|csv|latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    cmd->add_option("--terms", cfg.terms, "truncation order N (default 7)");
    cmd->add_option("--center", center_text, "series center c0 (rational)");
    cmd->add_option("--digits", cfg.digits, "working precision, decimal digits (>= 30)");
    cmd->add_option("--grid", grid_text, "sample grid lo:hi:count");
}

void finish_config(run_config& cfg, const std::string& grid_text,
                   const std::string& center_text) {
    if (!center_text.empty())
        cfg.center = rat_from_string(center_text);
    if (cfg.digits < 30)
        cfg.digits = 30;
    if (!grid_text.empty()) {
        std::size_t c1 = grid_text.find(':');
        std::size_t c2 = grid_text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw syntax_error("grid must be lo:hi:count", 0);
        cfg.grid_lo = rat_from_string(grid_text.substr(0, c1));
        cfg.grid_hi = rat_from_string(grid_text.substr(c1 + 1, c2 - c1 - 1));
        cfg.grid_count = (unsigned)std::stoul(grid_text.substr(c2 + 1));
        if (cfg.grid_count < 2)
            throw syntax_error("grid count must be >= 2", 0);
    }
}

format_style style_of(const run_config& cfg) {
    return cfg.fmt == "latex" ? format_style::latex : format_style::text;
}

json residual_json(const residual_report& rep) {
    json arr = json::array();
    for (const residual_sample& s : rep.samples) {
        json e;
        e["x"] = s.x;
        if (s.defined)
            e["delta"] = s.delta;
        else
            e["delta"] = "undefined";
        arr.push_back(e);
    }
    return arr;
}

void print_residual_text(std::ostream& out, const residual_report& rep,
                         const std::string& name) {
    out << "residual " << name << " (max " << rep.max_delta << ")\n";
    for (const residual_sample& s : rep.samples) {
        out << "  x = " << s.x << "  delta = ";
        if (s.defined)
            out << s.delta;
        else
            out << "undefined";
        out << "\n";
    }
}

void print_residual_csv(std::ostream& out, const residual_report& rep) {
    out << "x,delta\n";
    for (const residual_sample& s : rep.samples) {
        out << s.x << ",";
        if (s.defined)
            out << s.delta;
        else
            out << "undefined";
        out << "\n";
    }
}

int emit_solve2(std::ostream& out, const run_config& cfg, const expr& a,
                const std::optional<expr>& multiplier, const ode_m* residual_ode,
                json problem = {}) {
    xi_table2 table(a);
    solution2 sol = assemble2(table, cfg.terms);
    expr y1 = sol.y1, y2 = sol.y2;
    if (multiplier) {
        y1 = mul(y1, *multiplier);
        y2 = mul(y2, *multiplier);
    }
    std::vector<rational> grid = make_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_count);
    residual_report rep1, rep2;
    if (residual_ode) {
        rep1 = residual_report_for(*residual_ode, y1, grid, cfg.digits, cfg.terms);
        rep2 = residual_report_for(*residual_ode, y2, grid, cfg.digits, cfg.terms);
    } else {
        reduced_ode2 ode{a};
        rep1 = residual_report_for(ode, y1, grid, cfg.digits, cfg.terms);
        rep2 = residual_report_for(ode, y2, grid, cfg.digits, cfg.terms);
    }

    if (cfg.fmt == "json") {
        json j;
        if (problem.is_null())
            problem = {{"type", "solve2"},
                       {"a", format(a)},
                       {"center", rat_to_string(a.center)},
                       {"terms", cfg.terms}};
        j["problem"] = problem;
        json xi = json::array();
        for (unsigned k = 0; k <= cfg.terms; k++) {
            const auto& e = table.xi_neg(k);
            xi.push_back({{"s", k}, {"n", 1}, {"expr", format(e.first)}});
            xi.push_back({{"s", k}, {"n", 2}, {"expr", format(e.second)}});
        }
        j["xi"] = xi;
        expr alpha1 = make_zero(a.center), alpha2 = make_zero(a.center);
        for (unsigned k = 0; k <= cfg.terms; k++) {
            alpha1 = add(alpha1, table.xi_neg(k).first);
            alpha2 = add(alpha2, table.xi_neg(k).second);
        }
        j["alpha"] = json::array({{{"k", 1}, {"expr", format(alpha1)}},
                                  {{"k", 2}, {"expr", format(alpha2)}}});
        j["solutions"] = json::array({{{"i", 1}, {"expr", format(y1)}},
                                      {{"i", 2}, {"expr", format(y2)}}});
        j["residual"] = residual_json(rep1);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.fmt == "csv") {
        print_residual_csv(out, rep1);
        return 0;
    }
    format_style st = style_of(cfg);
    for (unsigned k = 0; k <= cfg.terms; k++) {
        const auto& e = table.xi_neg(k);
        out << "xi[" << k << "](-1) = " << format(e.first, st) << "\n";
        out << "xi[" << k << "](-2) = " << format(e.second, st) << "\n";
    }
    out << "y1 = " << format(y1, st) << "\n";
    out << "y2 = " << format(y2, st) << "\n";
    print_residual_text(out, rep1, "y1");
    print_residual_text(out, rep2, "y2");
    return 0;
}

int emit_solvem(std::ostream& out, const run_config& cfg, const ode_m& ode) {
    adjoint_coeffs b = adjoint_m(ode);
    xi_matrix matrix(b);
    alpha_vector alpha = alpha_m(matrix, cfg.terms);
    solution_set sols = assemble_m(alpha, ode.m);
    std::vector<rational> grid = make_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_count);
    std::vector<residual_report> reps;
    for (const expr& Y : sols.Y)
        reps.push_back(residual_report_for(ode, Y, grid, cfg.digits, cfg.terms));

    if (cfg.fmt == "json") {
        json j;
        json coeffs = json::array();
        for (const expr& ai : ode.a)
            coeffs.push_back(format(ai));
        j["problem"] = {{"type", "solvem"},
                        {"order", ode.m},
                        {"a", coeffs},
                        {"center", rat_to_string(ode.a.front().center)},
                        {"terms", cfg.terms}};
        json xi = json::array();
        for (unsigned s = 0; s <= cfg.terms; s++)
            for (unsigned n = 1; n <= ode.m; n++)
                xi.push_back({{"s", s}, {"n", n}, {"expr", format(matrix.entry(s, n))}});
        j["xi"] = xi;
        json av = json::array();
        for (unsigned k = 1; k <= ode.m; k++)
            av.push_back({{"k", k}, {"expr", format(alpha.alpha[k - 1])}});
        j["alpha"] = av;
        json sj = json::array();
        for (unsigned i = 1; i <= ode.m; i++)
            sj.push_back({{"i", i}, {"expr", format(sols.Y[i - 1])}});
        j["solutions"] = sj;
        j["residual"] = residual_json(reps.front());
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.fmt == "csv") {
        print_residual_csv(out, reps.front());
        return 0;
    }
    format_style st = style_of(cfg);
    for (unsigned k = 1; k <= ode.m; k++)
        out << "b[" << k << "] = " << format(b.b[k - 1], st) << "\n";
    for (unsigned s = 0; s <= cfg.terms; s++)
        for (unsigned n = 1; n <= ode.m; n++)
            out << "xi[" << s << "](-" << n << ") = " << format(matrix.entry(s, n), st)
                << "\n";
    for (unsigned k = 1; k <= ode.m; k++)
        out << "alpha(-" << k << ") = " << format(alpha.alpha[k - 1], st) << "\n";
    for (unsigned i = 1; i <= ode.m; i++)
        out << "Y" << i << " = " << format(sols.Y[i - 1], st) << "\n";
    for (unsigned i = 0; i < reps.size(); i++)
        print_residual_text(out, reps[i], "Y" + std::to_string(i + 1));
    return 0;
}

int run_selftest(const std::string& which, std::ostream& out, std::ostream& err);

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"series solutions of linear ODEs by iterated antiderivatives"};
    app.require_subcommand(1);

    run_config cfg;
    std::string grid_text, center_text;

    // solve2
    auto* solve2 = app.add_subcommand("solve2", "reduced second order y'' = a y");
    std::string a_text;
    solve2->add_option("--a", a_text, "coefficient a(x)")->required();
    add_common(solve2, cfg, grid_text, center_text);

    // solve2g
    auto* solve2g = app.add_subcommand("solve2g", "general second order y'' = a1 y' + a2 y");
    std::string a1_text, a2_text;
    solve2g->add_option("--a1", a1_text, "coefficient a1(x)")->required();
    solve2g->add_option("--a2", a2_text, "coefficient a2(x)")->required();
    add_common(solve2g, cfg, grid_text, center_text);

    // solvem
    auto* solvem = app.add_subcommand("solvem", "m-th order y^(m) = sum a_p y^(m-p)");
    unsigned order = 2;
    std::vector<std::string> coeff_opts;
    bool lhs_convention = false;
    solvem->add_option("--order", order, "ODE order m")->required();
    solvem->add_option("--coeff", coeff_opts, "coefficient, e.g. a2=x*ln(x)");
    solvem->add_flag("--lhs", lhs_convention,
                     "coefficients follow y^(m) + sum a_p y^(m-p) = 0 (signs flipped)");
    add_common(solvem, cfg, grid_text, center_text);

    // xi
    auto* xicmd = app.add_subcommand("xi", "single xi_k(p) for y'' = a y");
    std::string xia_text;
    unsigned xik = 0;
    long xiarg = -1;
    xicmd->add_option("--a", xia_text, "coefficient a(x)")->required();
    xicmd->add_option("--k", xik, "summand index k")->required();
    xicmd->add_option("--arg", xiarg, "integer argument p")->required();
    add_common(xicmd, cfg, grid_text, center_text);

    // particular
    auto* part = app.add_subcommand("particular", "particular solution of a non-homogeneous ODE");
    unsigned porder = 2;
    std::vector<std::string> pcoeff_opts;
    std::string rhs_text, homog_text;
    part->add_option("--order", porder, "ODE order m")->required();
    part->add_option("--coeff", pcoeff_opts, "LHS coefficient, e.g. b1=0");
    part->add_option("--rhs", rhs_text, "right-hand side F(x)")->required();
    part->add_option("--homog", homog_text, "comma-separated homogeneous solutions")->required();
    add_common(part, cfg, grid_text, center_text);

    // selftest
    auto* self = app.add_subcommand("selftest", "identity suites");
    std::string suite;
    self->add_option("suite", suite, "leibniz|closedforms|crosscheck")
        ->required()
        ->check(CLI::IsMember({"leibniz", "closedforms", "crosscheck"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        finish_config(cfg, grid_text, center_text);

        if (solve2->parsed()) {
            expr a = parse(a_text, cfg.center);
            return emit_solve2(out, cfg, a, std::nullopt, nullptr);
        }
        if (solve2g->parsed()) {
            general_ode2 g{parse(a1_text, cfg.center), parse(a2_text, cfg.center)};
            reduction_result red = reduce_to_normal(g);
            if (!red.multiplier)
                throw unsupported_combination(
                    "reduction multiplier " + red.multiplier_text + " leaves the kernel");
            ode_m orig{2, {g.a1, g.a2}};
            json problem = {{"type", "solve2g"},
                            {"a1", format(g.a1)},
                            {"a2", format(g.a2)},
                            {"reduced_a", format(red.reduced.a)},
                            {"multiplier", format(*red.multiplier)},
                            {"center", rat_to_string(g.a1.center)},
                            {"terms", cfg.terms}};
            if (cfg.fmt != "json")
                out << "reduced a = " << format(red.reduced.a, style_of(cfg)) << "\n";
            return emit_solve2(out, cfg, red.reduced.a, red.multiplier, &orig, problem);
        }
        if (solvem->parsed()) {
            ode_m ode;
            ode.m = order;
            ode.a.assign(order, make_zero(cfg.center));
            for (const std::string& co : coeff_opts) {
                std::size_t eq = co.find('=');
                if (eq == std::string::npos || co.size() < 3 || co[0] != 'a')
                    throw syntax_error("coefficient must look like a2=expr", 0);
                unsigned idx = (unsigned)std::stoul(co.substr(1, eq - 1));
                if (idx < 1 || idx > order)
                    throw syntax_error("coefficient index out of range", 0);
                ode.a[idx - 1] = parse(co.substr(eq + 1), cfg.center);
            }
            if (lhs_convention)
                for (expr& ai : ode.a)
                    ai = negate(ai);
            return emit_solvem(out, cfg, ode);
        }
        if (xicmd->parsed()) {
            expr a = parse(xia_text, cfg.center);
            xi_table2 table(a);
            expr v = xi_general(table, xik, xiarg);
            if (cfg.fmt == "json") {
                json j;
                j["problem"] = {{"type", "xi"},
                                {"a", format(a)},
                                {"center", rat_to_string(a.center)}};
                j["xi"] = json::array(
                    {{{"s", xik}, {"arg", xiarg}, {"expr", format(v)}}});
                out << j.dump(2) << "\n";
            } else {
                out << format(v, style_of(cfg)) << "\n";
            }
            return 0;
        }
        if (part->parsed()) {
            std::vector<expr> b(porder, make_zero(cfg.center));
            for (const std::string& co : pcoeff_opts) {
                std::size_t eq = co.find('=');
                if (eq == std::string::npos || co.size() < 3 || co[0] != 'b')
                    throw syntax_error("coefficient must look like b2=expr", 0);
                unsigned idx = (unsigned)std::stoul(co.substr(1, eq - 1));
                if (idx < 1 || idx > porder)
                    throw syntax_error("coefficient index out of range", 0);
                b[idx - 1] = parse(co.substr(eq + 1), cfg.center);
            }
            std::vector<expr> homog;
            std::stringstream ss(homog_text);
            std::string piece;
            while (std::getline(ss, piece, ','))
                homog.push_back(parse(piece, cfg.center));
            nonhom_problem prob = nonhom_problem::make(
                porder, std::move(b), parse(rhs_text, cfg.center), std::move(homog));
            std::vector<double> dgrid;
            {
                std::vector<rational> g =
                    make_grid(cfg.grid_lo, cfg.grid_hi, std::max(cfg.grid_count, 5u));
                for (const rational& q : g)
                    dgrid.push_back(bigfloat::from(q, 64).to_double());
            }
            particular_result res = particular_m(prob, dgrid);
            if (res.symbolic) {
                if (cfg.fmt == "json") {
                    json j;
                    j["problem"] = {{"type", "particular"}, {"order", porder}};
                    j["solutions"] =
                        json::array({{{"i", 1}, {"expr", format(*res.symbolic)}}});
                    out << j.dump(2) << "\n";
                } else {
                    out << "Y = " << format(*res.symbolic, style_of(cfg)) << "\n";
                }
            } else {
                const grid_function& gf = *res.numeric;
                if (cfg.fmt == "json") {
                    json j;
                    j["problem"] = {{"type", "particular"},
                                    {"order", porder},
                                    {"numeric_reason", res.fallback_reason}};
                    json pts = json::array();
                    for (std::size_t i = 0; i < gf.x.size(); i++)
                        pts.push_back({{"x", gf.x[i]}, {"y", gf.v[i]}});
                    j["grid"] = pts;
                    out << j.dump(2) << "\n";
                } else {
                    out << "numeric particular solution ("
                        << res.fallback_reason << ")\nx,y\n";
                    for (std::size_t i = 0; i < gf.x.size(); i++)
                        out << gf.x[i] << "," << gf.v[i] << "\n";
                }
            }
            return 0;
        }
        if (self->parsed())
            return run_selftest(suite, out, err);
    } catch (const syntax_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_combination& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const kernel_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

namespace {

int run_selftest(const std::string& which, std::ostream& out, std::ostream& err) {
    unsigned failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            failures++;
            err << "selftest failure: " << what << "\n";
        }
    };

    if (which == "leibniz") {
        expr u = parse("x^5 - 2*x^3 + x - 3");
        expr v = parse("x^4 + x^2 + 2");
        for (unsigned n = 0; n <= 6; n++) {
            for (unsigned k = 0; k <= 4; k++)
                check(L_power_closed(k, u, v, n) ==
                          leibniz_sum(weight_spec::ipow(k), u, v, n),
                      "L[i^" + std::to_string(k) + "], n=" + std::to_string(n));
            for (long z = -2; z <= 2; z++)
                for (unsigned k = 0; k <= 3; k++)
                    check(L_binom_closed(z, k, u, v, n) ==
                              leibniz_sum(weight_spec::binom(z, k), u, v, n),
                          "L[C(i-z,k)], z=" + std::to_string(z));
        }
        for (unsigned k = 1; k <= 4; k++) {
            std::vector<rational> r = vieta_coeffs(k);
            for (long i = -5; i <= (long)k + 5; i++) {
                rational lhs(0), prod(1);
                for (unsigned s = 1; s <= k + 1; s++)
                    lhs += r[s - 1] * rat_pow(rational(i), (long)(k + 1 - s));
                for (unsigned j = 0; j < k; j++)
                    prod *= rational(i - (long)j);
                check(lhs == prod, "falling-factorial identity k=" + std::to_string(k));
            }
        }
        std::vector<expr> bs{parse("x"), parse("x^2"), parse("x^3 - 1"), parse("2*x + 1")};
        for (unsigned m = 0; m <= 3; m++)
            for (unsigned k0 = 1; k0 <= 2; k0++)
                for (unsigned n = 0; n <= 3; n++) {
                    auto [lhs, rhs] = nested_identity(bs, k0, n, m);
                    check(lhs == rhs, "nested identity m=" + std::to_string(m));
                }
    } else if (which == "closedforms") {
        for (const char* atext : {"x", "x^2 + 1"}) {
            expr a = parse(atext);
            xi_table2 table(a);
            for (unsigned p = 1; p <= 4; p++) {
                check(xi_general(table, p, 2 * (long)p) == xi_closed_diff(a, p, closed_form::top),
                      std::string("xi_p(2p)=0, a=") + atext);
                check(xi_general(table, p, 2 * (long)p + 1) ==
                          xi_closed_diff(a, p, closed_form::top_odd),
                      std::string("xi_p(2p+1)=a^{p+1}, a=") + atext);
                if (p >= 1)
                    check(xi_general(table, p - 1, 2 * (long)p) ==
                              xi_closed_diff(a, p, closed_form::sub1),
                          std::string("xi_{p-1}(2p), a=") + atext);
                if (p >= 1)
                    check(xi_bruteforce(a, p, 2 * p) == xi_closed_diff(a, p, closed_form::top),
                          std::string("brute xi_p(2p), a=") + atext);
                check(xi_bruteforce(a, p, 2 * p + 1) ==
                          xi_closed_diff(a, p, closed_form::top_odd),
                      std::string("brute xi_p(2p+1), a=") + atext);
            }
        }
    } else if (which == "crosscheck") {
        for (const char* atext : {"x", "exp(x)", "x^3 - 1"}) {
            check(crosscheck_m2(parse(atext), 3),
                  std::string("m-order vs second-order xi, a=") + atext);
        }
    }

    if (failures) {
        err << failures << " selftest failure(s)\n";
        return 4;
    }
    out << "selftest " << which << ": ok\n";
    return 0;
}

} // namespace

} // namespace odes
