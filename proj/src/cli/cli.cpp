#include "cli.hpp"

#include "json_writer.hpp"
#include "verify.hpp"

#include "besselbound/bounds.hpp"
#include "besselbound/comparison_ode.hpp"
#include "besselbound/errors.hpp"
#include "besselbound/radial_oracle.hpp"
#include "besselbound/special_functions.hpp"
#include "besselbound/zeros.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace besselbound::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_hypothesis = 2;

const char* footer = R"(Exit codes: 0 success, 1 input error, 2 hypothesis violated, vacuous bound or failed verification.

Environment:
  SPEC_TOL   relative series tolerance for Bessel evaluations (default 1e-12);
             applies to the bessel subcommand and the verify batteries.

CSV columns:
  bessel     nu,x,kind,value,abs_err_estimate,terms_used
  zero       nu,k,root
  char-root  n,c,root,bracket_lo,bracket_hi
  bound      name,value,strict,informative
  ode        r,y_numeric,y_closed_form,residual
  oracle     r,u            (with --sweep: tau,lambda_1)
  verify     check,observed,tolerance,pass)";

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// What a handler produces: the JSON document, an optional CSV table and the exit code.
struct Output {
    Json doc;
    std::string csv;
    int code = exit_ok;
};

std::string plain_text(const Json& doc)
{
    std::ostringstream os;
    auto scalar = [](const Json& v) {
        if (v.is_number_float()) {
            return fmt(v.get<double>());
        }
        if (v.is_string()) {
            return v.get<std::string>();
        }
        return v.dump();
    };
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            for (auto jt = v.begin(); jt != v.end(); ++jt) {
                if (!jt.value().is_structured()) {
                    os << it.key() << '.' << jt.key() << " = " << scalar(jt.value()) << '\n';
                }
            }
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_object()) {
                    os << it.key() << '[' << i << ']';
                    for (auto jt = v[i].begin(); jt != v[i].end(); ++jt) {
                        os << ' ' << jt.key() << '=' << scalar(jt.value());
                    }
                    os << '\n';
                } else {
                    os << it.key() << '[' << i << "] = " << scalar(v[i]) << '\n';
                }
            }
        } else {
            os << it.key() << " = " << scalar(v) << '\n';
        }
    }
    return os.str();
}

Json report_json(const BoundReport& r, Json inputs)
{
    Json doc;
    doc["op"] = "bound";
    doc["bound"] = r.bound_name;
    doc["inputs"] = std::move(inputs);
    doc["value"] = r.value ? Json(*r.value) : Json(nullptr);
    doc["strict"] = r.strict;
    doc["informative"] = r.informative;
    doc["equality_case"] = r.equality_case;
    doc["explanation"] = r.explanation;
    Json mids = Json::object();
    for (const auto& [k, v] : r.intermediates) {
        mids[k] = v;
    }
    doc["intermediates"] = mids;
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) {
        hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"caller_asserted", h.caller_asserted},
                        {"detail", h.detail}});
    }
    doc["hypotheses"] = hyps;
    doc["warnings"] = r.warnings;
    return doc;
}

Output bound_output(const BoundReport& r, Json inputs)
{
    Output o;
    o.doc = report_json(r, std::move(inputs));
    o.csv = "name,value,strict,informative\n" + r.bound_name + "," + (r.value ? fmt(*r.value) : std::string()) + "," +
            (r.strict ? "true" : "false") + "," + (r.informative ? "true" : "false") + "\n";
    o.code = (r.value && r.informative) ? exit_ok : exit_hypothesis;
    return o;
}

EvalOptions eval_options_from_env()
{
    EvalOptions opts;
    if (const char* env = std::getenv("SPEC_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || !(v < 1.0)) {
            fail(ErrorKind::InvalidInput, std::string("SPEC_TOL must be a number in (0, 1), got '") + env + "'");
        }
        opts.rel_tol = v;
    }
    return opts;
}

std::string method_name(EvalMethod m)
{
    switch (m) {
        case EvalMethod::Series: return "series";
        case EvalMethod::ContinuedFraction: return "continued_fraction";
        case EvalMethod::Closed: return "closed";
    }
    return "unknown";
}

struct Params {
    std::string format = "json";

    double nu = 0.0;
    std::vector<double> xs;
    std::string kind = "J";

    int k = 1;
    int count = 0;

    int dim = 3;
    double c = 1.0;
    double h0 = 1.0;
    double lambda = 1.0;
    double tau = 1.0;
    double tau0 = 1.0;
    double min_scalar = 0.0;
    double im_lambda = 0.0;
    int p = 1;
    double sigma_p = 1.0;
    double gamma = 1.0;
    double nu1p = 0.0;
    double inf_w_minus_t = 0.0;
    double radius = 1.0;

    double y0 = 1.0;
    std::optional<double> yp0;
    std::optional<double> r_max;
    int ode_grid = 2001;
    double forcing = 0.0;

    std::string bc = "dirichlet";
    int grid = 4096;
    std::vector<double> sweep;

    int nmax = 50;
};

Output do_bessel(const Params& p, const EvalOptions& eo)
{
    const BesselOrder order(p.nu);
    Output o;
    Json values = Json::array();
    Json errs = Json::array();
    Json terms = Json::array();
    Json methods = Json::array();
    o.csv = "nu,x,kind,value,abs_err_estimate,terms_used\n";
    for (double x : p.xs) {
        double value = 0.0;
        double err = 0.0;
        int used = 0;
        std::string method = "recurrence";
        if (p.kind == "J" || p.kind == "Y") {
            const auto v = p.kind == "J" ? eval_J(order, x, eo) : eval_Y(order, x, eo);
            value = v.value;
            err = v.abs_err_estimate;
            used = v.terms_used;
            method = method_name(v.method);
        } else {
            value = eval_J_derivative(order, x, eo);
        }
        values.push_back(value);
        errs.push_back(err);
        terms.push_back(used);
        methods.push_back(method);
        o.csv += fmt(p.nu) + "," + fmt(x) + "," + p.kind + "," + fmt(value) + "," + fmt(err) + "," +
                 std::to_string(used) + "\n";
    }
    const bool single = p.xs.size() == 1;
    o.doc["op"] = "bessel";
    o.doc["inputs"] = {{"nu", p.nu}, {"x", single ? Json(p.xs[0]) : Json(p.xs)}, {"kind", p.kind},
                       {"rel_tol", eo.rel_tol}};
    o.doc["value"] = single ? values[0] : values;
    o.doc["intermediates"] = {{"abs_err_estimate", single ? errs[0] : errs},
                              {"terms_used", single ? terms[0] : terms},
                              {"method", single ? methods[0] : methods}};
    o.doc["hypotheses"] = Json::array();
    o.doc["warnings"] = Json::array();
    return o;
}

Output do_zero(const Params& p)
{
    Output o;
    o.doc["op"] = "zero";
    o.csv = "nu,k,root\n";
    Json inputs = {{"nu", p.nu}, {"k", p.k}};
    if (p.count > 0) {
        inputs["count"] = p.count;
        const auto zeros = bessel_zeros(p.nu, p.count);
        o.doc["inputs"] = inputs;
        o.doc["value"] = zeros;
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            o.csv += fmt(p.nu) + "," + std::to_string(i + 1) + "," + fmt(zeros[i]) + "\n";
        }
        o.doc["intermediates"] = Json::object();
    } else {
        const double root = bessel_zero(p.nu, p.k);
        o.doc["inputs"] = inputs;
        o.doc["value"] = root;
        o.doc["root"] = root;
        Json mids = {{"mcmahon", mcmahon_zero(p.nu, p.k)}};
        if (p.nu > 0.0 && p.k == 1) {
            mids["airy_floor"] = airy_floor(p.nu);
        }
        o.doc["intermediates"] = mids;
        o.csv += fmt(p.nu) + "," + std::to_string(p.k) + "," + fmt(root) + "\n";
    }
    o.doc["hypotheses"] = Json::array();
    o.doc["warnings"] = Json::array();
    return o;
}

Output do_char_root(const Params& p)
{
    const auto r = char_root(p.dim, p.c);
    Output o;
    o.doc["op"] = "char-root";
    o.doc["inputs"] = {{"dim", p.dim}, {"c", p.c}};
    o.doc["value"] = r.root;
    o.doc["root"] = r.root;
    o.doc["intermediates"] = {{"bracket_lo", r.bracket_lo},
                              {"bracket_hi", r.bracket_hi},
                              {"first_zero", r.first_zero},
                              {"residual", r.residual}};
    o.doc["hypotheses"] = Json::array();
    o.doc["warnings"] = Json::array();
    o.csv = "n,c,root,bracket_lo,bracket_hi\n" + std::to_string(p.dim) + "," + fmt(p.c) + "," + fmt(r.root) + "," +
            fmt(r.bracket_lo) + "," + fmt(r.bracket_hi) + "\n";
    return o;
}

Output do_ode(const Params& p)
{
    OdeProblem prob;
    prob.n = p.dim;
    prob.H0 = p.h0;
    prob.lambda = p.lambda;
    prob.y0 = p.y0;
    prob.yp0 = p.yp0.value_or(-p.dim * p.h0 * p.y0);
    prob.r_max = p.r_max.value_or(0.999 / p.h0);
    IvpOptions opts;
    opts.grid_points = p.ode_grid;
    opts.forcing = p.forcing;
    const auto sol = integrate_ivp(prob, opts);
    const auto c = closed_form_coefficients(prob);
    const auto z = first_zero(sol);

    Output o;
    o.doc["op"] = "ode";
    o.doc["inputs"] = {{"dim", prob.n},       {"h0", prob.H0},         {"lambda", prob.lambda},
                       {"y0", prob.y0},       {"yp0", prob.yp0},       {"r_max", prob.r_max},
                       {"grid", p.ode_grid},  {"forcing", p.forcing}};
    o.doc["value"] = z.R0 ? Json(*z.R0) : Json(nullptr);
    o.doc["A"] = sol.A;
    o.doc["B"] = sol.B;
    o.doc["R0"] = z.R0 ? Json(*z.R0) : Json(nullptr);
    o.doc["zero_kind"] = z.kind == ZeroKind::Interior ? "interior" : z.kind == ZeroKind::Boundary ? "boundary" : "absent";
    o.doc["theta_R0"] = z.R0 ? Json(z.theta) : Json(nullptr);
    o.doc["intermediates"] = {{"max_residual", sol.max_residual},
                              {"max_abs", sol.max_abs},
                              {"steps", sol.steps},
                              {"determinant", c.determinant},
                              {"determinant_expected", c.determinant_expected},
                              {"A_printed", c.A_printed},
                              {"B_printed", c.B_printed},
                              {"y0_residual", c.y0_residual},
                              {"yp0_residual", c.yp0_residual},
                              {"B_over_A", c.A != 0.0 ? c.B / c.A : 0.0}};
    o.doc["hypotheses"] = Json::array();
    Json warnings = Json::array();
    if (p.forcing != 0.0) {
        warnings.push_back("forcing is nonzero; the closed form solves the unforced equation");
    }
    o.doc["warnings"] = warnings;
    std::ostringstream csv;
    write_trajectory_csv(csv, sol);
    o.csv = csv.str();
    return o;
}

Output do_oracle(const Params& p)
{
    Output o;
    o.doc["op"] = "oracle";
    if (!p.sweep.empty()) {
        const auto rows = robin_sweep(p.dim, p.radius, p.sweep, p.grid);
        o.doc["inputs"] = {{"dim", p.dim}, {"R", p.radius}, {"grid", p.grid}, {"sweep", p.sweep}};
        Json values = Json::array();
        for (const auto& [tau, lambda] : rows) {
            values.push_back({{"tau", tau}, {"lambda_1", lambda}});
        }
        o.doc["value"] = values;
        o.doc["intermediates"] = Json::object();
        std::ostringstream csv;
        write_sweep_csv(csv, rows);
        o.csv = csv.str();
    } else {
        RadialProblem prob;
        prob.n = p.dim;
        prob.R = p.radius;
        prob.grid_points = p.grid;
        prob.tau = p.tau;
        prob.bc = p.bc == "robin" ? BoundaryKind::Robin : p.bc == "neumann" ? BoundaryKind::Neumann
                                                                          : BoundaryKind::Dirichlet;
        const auto s = solve_lowest(prob);
        Json inputs = {{"dim", p.dim}, {"R", p.radius}, {"bc", p.bc}, {"grid", p.grid}};
        if (prob.bc == BoundaryKind::Robin) {
            inputs["tau"] = p.tau;
        }
        o.doc["inputs"] = inputs;
        o.doc["value"] = s.lambda_1_extrapolated;
        o.doc["intermediates"] = {{"lambda_fine", s.lambda_1},
                                  {"lambda_half", s.lambda_half},
                                  {"lambda_quarter", s.lambda_quarter},
                                  {"order_estimate", s.order_estimate},
                                  {"iterations", s.iterations}};
        std::ostringstream csv;
        write_eigenvector_csv(csv, s);
        o.csv = csv.str();
    }
    o.doc["hypotheses"] = Json::array();
    o.doc["warnings"] = Json::array();
    return o;
}

Output do_verify(const std::string& suite, const Params& p, const EvalOptions& eo)
{
    VerifyParams vp;
    vp.n = p.dim;
    vp.h0 = p.h0;
    vp.tau = p.tau;
    vp.grid = p.grid;
    vp.nmax = p.nmax;
    vp.eval = eo;
    const auto result = run_suite(suite, vp);

    Output o;
    o.doc["op"] = "verify";
    o.doc["suite"] = suite;
    Json inputs = {{"rel_tol", eo.rel_tol}};
    if (suite == "robin-ball") {
        inputs["dim"] = p.dim;
        inputs["h0"] = p.h0;
        inputs["tau"] = p.tau;
        inputs["grid"] = p.grid;
    } else if (suite == "freitas") {
        inputs["nmax"] = p.nmax;
    }
    o.doc["inputs"] = inputs;
    o.doc["value"] = result.pass();
    for (const auto& [k, v] : result.values) {
        o.doc[k] = v;
    }
    o.doc["pass"] = result.pass();
    Json checks = Json::array();
    o.csv = "check,observed,tolerance,pass\n";
    for (const auto& c : result.checks) {
        checks.push_back({{"name", c.name},
                          {"observed", c.observed},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"detail", c.detail}});
        o.csv += "\"" + c.name + "\"," + fmt(c.observed) + "," + fmt(c.tolerance) + "," + (c.pass ? "true" : "false") +
                 "\n";
    }
    o.doc["checks"] = checks;
    o.doc["hypotheses"] = Json::array();
    o.doc["warnings"] = Json::array();
    o.code = result.pass() ? exit_ok : exit_hypothesis;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Params p;
    CLI::App app{"Bessel-function eigenvalue bounds, comparison ODE and radial eigensolver", "besselbound"};
    app.footer(footer);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", p.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));

    auto* bessel = app.add_subcommand("bessel", "Evaluate J_nu, Y_nu or J'_nu");
    bessel->add_option("--nu", p.nu, "Order")->required();
    bessel->add_option("--x", p.xs, "Argument (repeatable)")->required();
    bessel->add_option("--kind", p.kind, "J, Y or dJ")->check(CLI::IsMember({"J", "Y", "dJ"}));

    auto* zero = app.add_subcommand("zero", "k-th positive zero of J_nu");
    zero->add_option("--nu", p.nu, "Order, >= -1")->required();
    zero->add_option("--k", p.k, "Zero index, >= 1");
    zero->add_option("--count", p.count, "Return the first COUNT zeros instead");

    auto* root = app.add_subcommand("char-root", "Root of x J_{n/2}(x)/J_{n/2-1}(x) = c on (0, j_{n/2-1,1})");
    root->add_option("--dim", p.dim, "Dimension n")->required();
    root->add_option("--c", p.c, "Right-hand constant")->required();

    auto* bound = app.add_subcommand("bound", "Eigenvalue lower bounds");
    bound->require_subcommand(1);
    std::map<std::string, std::function<Output()>> bound_runs;
    auto add_bound = [&](const std::string& name, const std::string& help) {
        auto* s = bound->add_subcommand(name, help);
        return s;
    };
    auto geo = [&] { return GeometrySpec{p.dim, p.h0, 0.0, {}}; };
    auto curv = [&] {
        CurvatureInputs c;
        c.min_scalar = p.min_scalar;
        c.gamma = p.gamma;
        c.sigma_p = p.sigma_p;
        c.p = p.p;
        c.tau = p.tau;
        c.im_lambda = p.im_lambda;
        c.nu_1p = p.nu1p;
        c.inf_W_minus_T = p.inf_w_minus_t;
        return c;
    };
    auto dim_h0 = [&](CLI::App* s) {
        s->add_option("--dim", p.dim, "Dimension n")->required();
        s->add_option("--h0", p.h0, "Mean-curvature floor H0")->required();
    };
    {
        auto* s = add_bound("quotient", "sqrt(lambda) J_{n/2-1}/J_{n/2} at sqrt(lambda)/H0");
        dim_h0(s);
        s->add_option("--lambda", p.lambda, "lambda > 0")->required();
        bound_runs["quotient"] = [&] {
            return bound_output(quotient_lower_bound(geo(), p.lambda), {{"dim", p.dim}, {"h0", p.h0}, {"lambda", p.lambda}});
        };
    }
    {
        auto* s = add_bound("isoperimetric", "Vol(boundary)/Vol(M) >= n H0");
        dim_h0(s);
        bound_runs["isoperimetric"] = [&] {
            return bound_output(isoperimetric_bound(geo()), {{"dim", p.dim}, {"h0", p.h0}});
        };
    }
    {
        auto* s = add_bound("dirichlet", "H0^2 j_{n/2-1,1}^2");
        dim_h0(s);
        bound_runs["dirichlet"] = [&] {
            return bound_output(dirichlet_faber_krahn(geo()), {{"dim", p.dim}, {"h0", p.h0}});
        };
    }
    {
        auto* s = add_bound("robin-threshold", "H0^2 tau0^2 when tau >= alpha H0");
        dim_h0(s);
        s->add_option("--tau", p.tau, "Robin parameter")->required();
        s->add_option("--tau0", p.tau0, "tau0 in (0, j_{n/2-1,1})")->required();
        bound_runs["robin-threshold"] = [&] {
            return bound_output(robin_threshold_bound(geo(), p.tau, p.tau0),
                                {{"dim", p.dim}, {"h0", p.h0}, {"tau", p.tau}, {"tau0", p.tau0}});
        };
    }
    {
        auto* s = add_bound("robin-ball", "First Robin eigenvalue of the ball of radius 1/H0");
        dim_h0(s);
        s->add_option("--tau", p.tau, "Robin parameter > 0")->required();
        bound_runs["robin-ball"] = [&] {
            return bound_output(robin_ball_eigenvalue(p.dim, p.h0, p.tau), {{"dim", p.dim}, {"h0", p.h0}, {"tau", p.tau}});
        };
    }
    for (const std::string name : {"dirac", "yamabe", "dirac-conformal"}) {
        auto* s = add_bound(name, name == "dirac"    ? "Dirac bound with tau0"
                                  : name == "yamabe" ? "Yamabe bound with tau1"
                                                     : "Conformal Dirac bound with tau1");
        dim_h0(s);
        s->add_option("--min-scalar", p.min_scalar, "Minimum scalar curvature");
        bound_runs[name] = [&, name] {
            const Json inputs = {{"dim", p.dim}, {"h0", p.h0}, {"min_scalar", p.min_scalar}};
            if (name == "dirac") {
                return bound_output(dirac_bound(geo(), curv()), inputs);
            }
            if (name == "yamabe") {
                return bound_output(yamabe_bound(geo(), curv()), inputs);
            }
            return bound_output(dirac_conformal_bound(geo(), curv()), inputs);
        };
    }
    {
        auto* s = add_bound("mit", "MIT bag bound with Im(lambda)");
        dim_h0(s);
        s->add_option("--min-scalar", p.min_scalar, "Minimum scalar curvature");
        s->add_option("--im-lambda", p.im_lambda, "Im(lambda) >= 0")->required();
        bound_runs["mit"] = [&] {
            return bound_output(mit_bound(geo(), curv()), {{"dim", p.dim},
                                                           {"h0", p.h0},
                                                           {"min_scalar", p.min_scalar},
                                                           {"im_lambda", p.im_lambda}});
        };
    }
    {
        auto* s = add_bound("pform", "p-form Robin bound sigma_p^2 tau0^2/(2p^2)");
        s->add_option("--dim", p.dim, "Dimension n")->required();
        s->add_option("--p", p.p, "Form degree")->required();
        s->add_option("--sigma-p", p.sigma_p, "p-curvature floor > 0")->required();
        s->add_option("--tau", p.tau, "Robin parameter")->required();
        s->add_option("--tau0", p.tau0, "tau0 in (0, j_{n/2-1,1})")->required();
        bound_runs["pform"] = [&] {
            return bound_output(pform_bound(GeometrySpec{p.dim, 0.0, 0.0, {}}, curv(), p.tau0), {{"dim", p.dim},
                                                                                        {"p", p.p},
                                                                                        {"sigma_p", p.sigma_p},
                                                                                        {"tau", p.tau},
                                                                                        {"tau0", p.tau0}});
        };
    }
    {
        auto* s = add_bound("pform-ball", "Half the Robin eigenvalue of the ball with H0 = sigma_p/p");
        s->add_option("--dim", p.dim, "Dimension n")->required();
        s->add_option("--p", p.p, "Form degree")->required();
        s->add_option("--sigma-p", p.sigma_p, "p-curvature floor > 0")->required();
        s->add_option("--tau", p.tau, "Robin parameter > 0")->required();
        bound_runs["pform-ball"] = [&] {
            return bound_output(pform_ball_comparison(GeometrySpec{p.dim, 0.0, 0.0, {}}, curv()),
                                {{"dim", p.dim}, {"p", p.p}, {"sigma_p", p.sigma_p}, {"tau", p.tau}});
        };
    }
    {
        auto* s = add_bound("gap", "inf(W - T)/p");
        s->add_option("--p", p.p, "Form degree")->required();
        s->add_option("--sigma-p", p.sigma_p, "p-curvature floor")->required();
        s->add_option("--inf-w-minus-t", p.inf_w_minus_t, "inf(W - T)")->required();
        bound_runs["gap"] = [&] {
            return bound_output(gap_bound(curv()),
                                {{"p", p.p}, {"sigma_p", p.sigma_p}, {"inf_w_minus_t", p.inf_w_minus_t}});
        };
    }
    {
        auto* s = add_bound("gallot-meyer", "Curvature-operator bound, two branches");
        s->add_option("--dim", p.dim, "Dimension n")->required();
        s->add_option("--p", p.p, "Form degree")->required();
        s->add_option("--gamma", p.gamma, "Curvature-operator floor > 0")->required();
        s->add_option("--sigma-p", p.sigma_p, "p-curvature floor")->required();
        s->add_option("--tau", p.tau, "Robin parameter")->required();
        s->add_option("--nu1p", p.nu1p, "First Steklov eigenvalue on p-forms (second branch)");
        bound_runs["gallot-meyer"] = [&] {
            return bound_output(gallot_meyer_bound(GeometrySpec{p.dim, 0.0, 0.0, {}}, curv()), {{"dim", p.dim},
                                                                                       {"p", p.p},
                                                                                       {"gamma", p.gamma},
                                                                                       {"sigma_p", p.sigma_p},
                                                                                       {"tau", p.tau},
                                                                                       {"nu1p", p.nu1p}});
        };
    }
    {
        auto* s = add_bound("cotangent", "sqrt(lambda) cot(sqrt(lambda) R) for H0 = 0");
        s->add_option("--lambda", p.lambda, "lambda > 0")->required();
        s->add_option("--R", p.radius, "Inner radius")->required();
        bound_runs["cotangent"] = [&] {
            return bound_output(cotangent_bound(p.lambda, p.radius), {{"lambda", p.lambda}, {"R", p.radius}});
        };
    }

    auto* ode = app.add_subcommand("ode", "Comparison ODE: numeric IVP against the closed form");
    ode->add_option("--dim", p.dim, "Dimension n")->required();
    ode->add_option("--h0", p.h0, "H0 > 0")->required();
    ode->add_option("--lambda", p.lambda, "lambda > 0")->required();
    ode->add_option("--y0", p.y0, "y(0), default 1");
    ode->add_option("--yp0", p.yp0, "y'(0), default -n H0 y0");
    ode->add_option("--r-max", p.r_max, "End of the interval, default 0.999/H0");
    ode->add_option("--grid", p.ode_grid, "Output grid points, default 2001");
    ode->add_option("--forcing", p.forcing, "Constant forcing on the right-hand side");

    auto* oracle = app.add_subcommand("oracle", "Radial finite-volume eigensolver on a ball");
    oracle->add_option("--dim", p.dim, "Dimension n")->required();
    oracle->add_option("--R", p.radius, "Ball radius, default 1");
    oracle->add_option("--bc", p.bc, "dirichlet, neumann or robin")
        ->check(CLI::IsMember({"dirichlet", "neumann", "robin"}));
    oracle->add_option("--tau", p.tau, "Robin parameter");
    oracle->add_option("--grid", p.grid, "Grid intervals, multiple of 4, default 4096");
    oracle->add_option("--sweep", p.sweep, "Robin parameters for a sweep (ascending)");

    auto* verify = app.add_subcommand("verify", "Run an invariant battery; exit 0 iff all checks pass");
    verify->require_subcommand(1);
    for (const auto& name : suite_names()) {
        auto* s = verify->add_subcommand(name, "Suite " + name);
        if (name == "robin-ball") {
            s->add_option("--dim", p.dim, "Dimension n, default 3");
            s->add_option("--h0", p.h0, "H0, default 1");
            s->add_option("--tau", p.tau, "Robin parameter, default 1");
            s->add_option("--grid", p.grid, "Oracle grid, default 4096");
        } else if (name == "freitas") {
            s->add_option("--nmax", p.nmax, "Largest dimension, default 50");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return exit_input;
    }

    std::string op = "unknown";
    try {
        const EvalOptions eo = eval_options_from_env();
        Output o;
        if (bessel->parsed()) {
            op = "bessel";
            o = do_bessel(p, eo);
        } else if (zero->parsed()) {
            op = "zero";
            o = do_zero(p);
        } else if (root->parsed()) {
            op = "char-root";
            o = do_char_root(p);
        } else if (bound->parsed()) {
            op = "bound";
            for (auto* s : bound->get_subcommands()) {
                o = bound_runs.at(s->get_name())();
            }
        } else if (ode->parsed()) {
            op = "ode";
            o = do_ode(p);
        } else if (oracle->parsed()) {
            op = "oracle";
            o = do_oracle(p);
        } else if (verify->parsed()) {
            op = "verify";
            for (auto* s : verify->get_subcommands()) {
                o = do_verify(s->get_name(), p, eo);
            }
        }
        if (p.format == "csv") {
            out << o.csv;
        } else if (p.format == "plain") {
            out << plain_text(o.doc);
        } else {
            out << to_text(o.doc);
        }
        return o.code;
    } catch (const Error& e) {
        const bool hypothesis =
            e.kind() == ErrorKind::HypothesisViolated || e.kind() == ErrorKind::DenominatorNonpositive;
        Json doc;
        doc["op"] = op;
        doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        out << to_text(doc);
        err << "error: " << e.what() << '\n';
        return hypothesis ? exit_hypothesis : exit_input;
    }
}

} // namespace besselbound::cli
