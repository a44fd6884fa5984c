#include "umbral/cli.hpp"

#include "umbral/errors.hpp"
#include "umbral/genfun.hpp"
#include "umbral/incidence.hpp"
#include "umbral/io.hpp"
#include "umbral/kernels.hpp"
#include "umbral/operators.hpp"
#include "umbral/semantic.hpp"
#include "umbral/series.hpp"
#include "umbral/token.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace umbral {

namespace {

using nlohmann::json;

delta_op delta_from_spec(const std::string& spec, std::size_t order) {
    if (spec == "D")
        return delta_op::derivative(order);
    if (spec == "forward-diff")
        return delta_op::forward_difference(order);
    if (spec == "backward-diff")
        return delta_op::backward_difference(order);
    if (spec.rfind("abel:a=", 0) == 0)
        return delta_op::abel(order, rat::from_string(spec.substr(7)));
    if (spec.rfind("series:", 0) == 0)
        return delta_op(series_from_literal(spec.substr(7)));
    throw parse_error("unknown delta operator spec: '" + spec +
                      "' (want D, forward-diff, backward-diff, abel:a=p/q or series:<literal>)");
}

std::string join_values(const cfunction<n_plus>& f) {
    std::ostringstream os;
    for (std::size_t n = 0; n <= f.semigroup().bound; ++n) {
        if (n)
            os << ',';
        os << f.at(n).str();
    }
    return os.str();
}

int handle_basic_seq(const std::string& delta_spec, std::size_t order, bool as_json,
                     std::ostream& out) {
    delta_op q = delta_from_spec(delta_spec, order);
    poly_seq p = basic_sequence(q, order);
    if (as_json) {
        out << json{{"schema", "basic-seq"},
                    {"delta", delta_spec},
                    {"order", order},
                    {"rows", poly_seq_to_json(p)}}
                   .dump(2)
            << "\n";
        return 0;
    }
    for (std::size_t n = 0; n <= p.max_index(); ++n) {
        out << "p_" << n << ":";
        for (std::size_t k = 0; k <= n; ++k)
            out << (k ? "," : " ") << p.coeff(n, k).str();
        out << "\n";
    }
    return 0;
}

int handle_genfun(const std::string& rec_file, const std::string& token_name, std::size_t order,
                  bool as_json, std::ostream& out) {
    recurrence rec = recurrence_from_json(load_json_file(rec_file));
    genfun_spec spec{flavor_from_name(token_name), order};
    cfunction<n_plus> f = solve_recurrence(rec, order);
    series gf = generating_function(f, spec);
    std::string verdict;
    bool failed = false;
    try {
        bool ok = transformed_operator_check(rec, spec, order);
        verdict = ok ? "PASS" : "FAIL";
        failed = !ok;
    } catch (const unsupported_kernel_shape& e) {
        verdict = std::string("SKIPPED (") + e.what() + ")";
    }
    if (as_json) {
        json doc{{"schema", "genfun"},
                 {"token", token_name},
                 {"order", order},
                 {"coefficients", json::array()},
                 {"series", series_to_json(gf)},
                 {"check", verdict}};
        for (std::size_t n = 0; n <= order; ++n)
            doc["coefficients"].push_back(f.at(n).str());
        out << doc.dump(2) << "\n";
    } else {
        out << "coefficients: " << join_values(f) << "\n";
        out << "series: " << to_literal(gf) << "\n";
        out << "check: " << verdict << "\n";
    }
    return failed ? 1 : 0;
}

int handle_verify_token(const std::string& file, bool as_json, std::ostream& out) {
    poly_seq p = poly_seq_from_json(load_json_file(file));
    token_witness w;
    bool ok = is_token(p, &w);
    if (as_json) {
        json doc{{"schema", "verify-token"}, {"verdict", ok ? "PASS" : "FAIL"}};
        if (!ok)
            doc["witness"] = json{{"n", w.n},
                                  {"x_deg", w.x_deg},
                                  {"y_deg", w.y_deg},
                                  {"lhs", w.lhs.str()},
                                  {"rhs", w.rhs.str()}};
        out << doc.dump(2) << "\n";
    } else if (ok) {
        out << "PASS\n";
    } else {
        out << "FAIL at n=" << w.n << ", monomial x^" << w.x_deg << " y^" << w.y_deg
            << ": expansion gives " << w.lhs.str() << ", convolution gives " << w.rhs.str()
            << "\n";
    }
    return ok ? 0 : 1;
}

int handle_verify_kernel(const std::string& kind_name, double t1, double t2, double v1, double v2,
                         double half_width, std::size_t panels, double tol, std::size_t grid_count,
                         double extent, double norm_scale, bool as_json, std::ostream& out) {
    kernel_params kp;
    kp.kind = kernel_kind_from_name(kind_name);
    kp.panels = panels;
    kp.half_width = half_width;
    kp.tolerance = tol;
    kp.norm_scale = norm_scale;
    sample_grid grid{grid_count, extent};
    semigroup_report sg = check_semigroup(kp, v1, t1, v2, t2, grid);
    normalization_report norm = check_normalization(kp, v1, t1);
    bool pass = sg.pass && norm.pass;
    if (as_json) {
        json doc{{"schema", "verify-kernel"},
                 {"kind", kind_name},
                 {"semigroup",
                  {{"pass", sg.pass},
                   {"max_discrepancy", sg.max_discrepancy},
                   {"worst_u", sg.worst_u},
                   {"tail_bound", sg.tail_bound},
                   {"evaluations", sg.evaluations}}},
                 {"normalization",
                  {{"pass", norm.pass},
                   {"integral", norm.integral},
                   {"tail_bound", norm.tail_bound}}},
                 {"tolerance", tol},
                 {"verdict", pass ? "PASS" : "FAIL"}};
        out << doc.dump(2) << "\n";
    } else {
        out << std::scientific << std::setprecision(6);
        out << "semigroup:     max discrepancy " << sg.max_discrepancy << " at u=" << sg.worst_u
            << ", tail bound " << sg.tail_bound << " -> " << (sg.pass ? "PASS" : "FAIL") << "\n";
        out << "normalization: integral " << std::setprecision(12) << norm.integral
            << std::setprecision(6) << ", tail bound " << norm.tail_bound << " -> "
            << (norm.pass ? "PASS" : "FAIL") << "\n";
        out << "verdict: " << (pass ? "PASS" : "FAIL") << " (tolerance " << tol << ")\n";
    }
    return pass ? 0 : 1;
}

int handle_mobius(const std::string& poset_file, bool as_json, std::ostream& out) {
    poset p = poset_from_json(load_json_file(poset_file));
    incidence_fn mu = mobius(p);
    if (as_json) {
        json values = json::array();
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b)
                if (p.le(a, b))
                    values.push_back(json{{"a", a}, {"b", b}, {"value", mu.at(a, b).str()}});
        out << json{{"schema", "mobius"}, {"n", p.size()}, {"values", std::move(values)}}.dump(2)
            << "\n";
        return 0;
    }
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.le(a, b))
                out << "mu(" << a << "," << b << ") = " << mu.at(a, b).str() << "\n";
    return 0;
}

int handle_eval(const std::string& env_file, const std::string& expr, bool as_json,
                std::ostream& out) {
    umbra_env env = umbra_env_from_json(load_json_file(env_file));
    if (!env.has("eps"))
        env.add(umbra::augmentation("eps", 128));
    rat value = eval(umbral_poly::parse(expr), env);
    if (as_json)
        out << json{{"schema", "eval"}, {"expr", expr}, {"value", value.str()}}.dump(2) << "\n";
    else
        out << value.str() << "\n";
    return 0;
}

int handle_hopf_mul(const std::string& l1_lit, const std::string& l2_lit, bool as_json,
                    std::ostream& out) {
    series s1 = series_from_literal(l1_lit);
    series s2 = series_from_literal(l2_lit);
    if (s1.flav() != s2.flav())
        throw flavor_mismatch("functionals must share a flavor");
    cfunction<n_plus> product = hopf_product(cfunction_from_series(s1), cfunction_from_series(s2));
    series result = to_series(product, s1.flav());
    if (as_json)
        out << json{{"schema", "hopf-mul"}, {"product", series_to_json(result)}}.dump(2) << "\n";
    else
        out << to_literal(result) << "\n";
    return 0;
}

int handle_t_transform(const std::string& k_lit, long rows_arg, bool as_json, std::ostream& out) {
    series k = series_from_literal(k_lit);
    std::size_t rows = rows_arg < 0 ? k.order() : static_cast<std::size_t>(rows_arg);
    discrete_token tok = binomial_discrete_token(rows, k.order());
    cfunction<n_plus> image = t_transform(tok, cfunction_from_series(k));
    series result = to_series(image, flavor::ordinary);
    if (as_json)
        out << json{{"schema", "t-transform"},
                    {"token", "binomial"},
                    {"image", series_to_json(result)}}
                   .dump(2)
            << "\n";
    else
        out << to_literal(result) << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact umbral-calculus toolkit: convolution algebras over cancellative "
                 "semigroups, tokens, delta operators and generating functions"};
    app.require_subcommand(1);
    int code = 0;

    // basic-seq
    std::string bs_delta;
    std::size_t bs_order = 12;
    bool bs_json = false;
    auto* bs = app.add_subcommand("basic-seq", "basic polynomial sequence of a delta operator");
    bs->add_option("--delta", bs_delta,
                   "D | forward-diff | backward-diff | abel:a=p/q | series:<literal>")
        ->required();
    bs->add_option("--order", bs_order, "truncation order")->capture_default_str();
    bs->add_flag("--json", bs_json, "emit JSON");
    bs->callback([&] { code = handle_basic_seq(bs_delta, bs_order, bs_json, out); });

    // genfun
    std::string gf_file, gf_token;
    std::size_t gf_order = 12;
    bool gf_json = false;
    auto* gf = app.add_subcommand("genfun",
                                  "solve a recurrence and report its generating function");
    gf->add_option("--recurrence", gf_file, "recurrence JSON file")->required();
    gf->add_option("--token", gf_token, "ordinary | exponential")->required();
    gf->add_option("--order", gf_order, "truncation order")->capture_default_str();
    gf->add_flag("--json", gf_json, "emit JSON");
    gf->callback([&] { code = handle_genfun(gf_file, gf_token, gf_order, gf_json, out); });

    // verify-token
    std::string vt_file;
    bool vt_json = false;
    auto* vt = app.add_subcommand("verify-token",
                                  "check the binomial convolution identity of a sequence");
    vt->add_option("--file", vt_file, "polynomial sequence JSON file")->required();
    vt->add_flag("--json", vt_json, "emit JSON");
    vt->callback([&] { code = handle_verify_token(vt_file, vt_json, out); });

    // verify-kernel
    std::string vk_kind;
    double vk_t = 1.0, vk_t2 = 1.0, vk_v = 0.0, vk_v2 = 0.0, vk_L = 200.0, vk_tol = 1e-6;
    double vk_extent = 5.0, vk_scale = 1.0;
    std::size_t vk_panels = 2000, vk_grid = 21;
    bool vk_json = false;
    auto* vk = app.add_subcommand("verify-kernel",
                                  "numeric semigroup/normalization check of a continuous kernel");
    vk->add_option("--kind", vk_kind, "poisson | weierstrass")->required();
    vk->add_option("--t", vk_t, "first scale parameter")->capture_default_str();
    vk->add_option("--t2", vk_t2, "second scale parameter")->capture_default_str();
    vk->add_option("--v", vk_v, "first center")->capture_default_str();
    vk->add_option("--v2", vk_v2, "second center")->capture_default_str();
    vk->add_option("--L", vk_L, "half width of the quadrature domain")->capture_default_str();
    vk->add_option("--panels", vk_panels, "composite quadrature panels")->capture_default_str();
    vk->add_option("--tol", vk_tol, "verdict tolerance")->capture_default_str();
    vk->add_option("--grid", vk_grid, "number of sample points")->capture_default_str();
    vk->add_option("--extent", vk_extent, "sample grid half width")->capture_default_str();
    vk->add_option("--norm-scale", vk_scale,
                   "multiplier on the normalizing constant (1 = the true kernel)")
        ->capture_default_str();
    vk->add_flag("--json", vk_json, "emit JSON");
    vk->callback([&] {
        code = handle_verify_kernel(vk_kind, vk_t, vk_t2, vk_v, vk_v2, vk_L, vk_panels, vk_tol,
                                    vk_grid, vk_extent, vk_scale, vk_json, out);
    });

    // mobius
    std::string mb_file;
    bool mb_json = false;
    auto* mb = app.add_subcommand("mobius", "Moebius function of a finite poset");
    mb->add_option("--poset", mb_file, "poset JSON file")->required();
    mb->add_flag("--json", mb_json, "emit JSON");
    mb->callback([&] { code = handle_mobius(mb_file, mb_json, out); });

    // eval
    std::string ev_env, ev_expr;
    bool ev_json = false;
    auto* ev = app.add_subcommand("eval", "evaluate an umbral polynomial against moment data");
    ev->add_option("--env", ev_env, "umbra environment JSON file")->required();
    ev->add_option("--expr", ev_expr, "expression, e.g. \"3*a^2*b - 1\"")->required();
    ev->add_flag("--json", ev_json, "emit JSON");
    ev->callback([&] { code = handle_eval(ev_env, ev_expr, ev_json, out); });

    // hopf-mul
    std::string hm_l1, hm_l2;
    bool hm_json = false;
    auto* hm = app.add_subcommand("hopf-mul",
                                  "product of linear functionals in sequence coordinates");
    hm->add_option("--l1", hm_l1, "first functional as a series literal")->required();
    hm->add_option("--l2", hm_l2, "second functional as a series literal")->required();
    hm->add_flag("--json", hm_json, "emit JSON");
    hm->callback([&] { code = handle_hopf_mul(hm_l1, hm_l2, hm_json, out); });

    // t-transform
    std::string tt_k;
    long tt_rows = -1;
    bool tt_json = false;
    auto* tt = app.add_subcommand("t-transform",
                                  "transform a kernel through the binomial token C(m,n)");
    tt->add_option("--k", tt_k, "kernel as a series literal")->required();
    tt->add_option("--rows", tt_rows, "row bound of the image (default: kernel order)");
    tt->add_flag("--json", tt_json, "emit JSON");
    tt->callback([&] { code = handle_t_transform(tt_k, tt_rows, tt_json, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

} // namespace umbral
