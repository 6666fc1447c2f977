#include "rrq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <typeinfo>

#include "rrq/qseries.hpp"
#include "rrq/roots.hpp"
#include "rrq/verify.hpp"

namespace rrq::cli {

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level()
{
    const char* env = std::getenv("RRQ_LOG");
    const std::string v = env ? env : "";
    if (v == "info")
        return LogLevel::info;
    if (v == "debug")
        return LogLevel::debug;
    return LogLevel::quiet;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(Real x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
    return buf;
}

std::string num(Complex z)
{
    if (z.imag() == 0)
        return num(z.real());
    return num(z.real()) + "," + num(z.imag());
}

// "re" or "re,im"
Complex parse_complex(const std::string& text)
{
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const Real re = std::stod(text, &used);
            if (used != text.size())
                throw UsageError("bad number '" + text + "'");
            return {re, 0};
        }
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        std::size_t ua = 0, ub = 0;
        const Real re = std::stod(a, &ua), im = std::stod(b, &ub);
        if (ua != a.size() || ub != b.size())
            throw UsageError("bad complex number '" + text + "'");
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("bad number '" + text + "'");
    }
}

struct EvalOptions {
    std::string fn = "R";
    std::optional<std::string> q;
    std::optional<Real> tau;
};

int cmd_eval(const EvalOptions& o, std::ostream& out)
{
    EvalResult r;
    if (o.fn == "eta") {
        if (!o.tau)
            throw UsageError("eval --fn eta needs --tau");
        r = dedekind_eta(*o.tau);
    } else {
        if (!o.q)
            throw UsageError("eval --fn " + o.fn + " needs --q");
        const Nome q(parse_complex(*o.q));
        if (o.fn == "f")
            r = euler_product_f(q);
        else if (o.fn == "R")
            r = rr_value(q);
        else if (o.fn == "u")
            r = u_of_q(q);
        else if (o.fn == "y")
            r = y_of_q(q);
        else
            throw UsageError("unknown function '" + o.fn + "'");
    }
    out << "value: " << num(r.value) << "\n"
        << "err_estimate: " << num(r.err_estimate) << "\n"
        << "terms_used: " << r.terms_used << "\n";
    if (r.branch_flag)
        out << "branch_flag: true\n";
    return r.converged ? ok : unconverged;
}

struct RootOptions {
    std::string target;
    std::optional<std::string> seed;
    std::optional<std::string> bracket;
    Real tol = 1e-12;
};

int cmd_root(const RootOptions& o, std::ostream& out)
{
    const auto eq = o.target.find('=');
    if (eq == std::string::npos)
        throw UsageError("target must look like y=0, u=0.5 or u-complex=re,im");
    const std::string fn = o.target.substr(0, eq);
    const Complex value = parse_complex(o.target.substr(eq + 1));

    RootSpec spec{.target_value = value, .tol = o.tol};
    if (fn == "y" || fn == "y-complex")
        spec.target_fn = TargetFn::y;
    else if (fn == "u" || fn == "u-complex")
        spec.target_fn = TargetFn::u;
    else
        throw UsageError("unknown target function '" + fn + "'");
    if (o.seed)
        spec.seed = parse_complex(*o.seed);
    if (o.bracket) {
        const Complex b = parse_complex(*o.bracket);
        spec.bracket = std::pair{b.real(), b.imag()};
    }

    const Real scale = o.tol * std::max(Real(1), std::abs(value));
    if (fn.ends_with("-complex") || value.imag() != 0) {
        if (!spec.seed)
            throw UsageError("complex targets need --seed re,im");
        const ComplexRoot r = solve_complex(spec);
        out << "root: " << num(r.q) << "\n"
            << "residual: " << num(r.residual) << "\n"
            << "iterations: " << r.iterations << "\n";
        return r.residual < scale ? ok : unconverged;
    }
    const RealRoot r = solve_real(spec);
    out << "root: " << num(r.q) << "\n"
        << "residual: " << num(r.residual) << "\n"
        << "iterations: " << r.iterations << "\n";
    return r.residual < scale ? ok : unconverged;
}

struct VerifyOptions {
    std::string case_filter = "all";
    std::optional<Real> tol;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    unsigned threads = 0;
};

std::string table(const VerificationReport& r)
{
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %-12s %-10s %-9s %s\n", "id", "status", "score", "runtime", "variant");
    os << line;
    for (const auto& c : r.cases) {
        Real best = kInf;
        for (const auto& v : c.variants)
            if (c.chosen_variant && v.label == *c.chosen_variant)
                best = v.score;
        if (!c.chosen_variant && !c.variants.empty())
            best = c.variants.front().score;
        std::snprintf(line, sizeof line, "%-10s %-12s %-10.3g %-9.3f %s\n", c.id.c_str(), to_string(c.status),
                      static_cast<double>(best), static_cast<double>(c.runtime_s),
                      c.chosen_variant ? c.chosen_variant->c_str() : c.reason.c_str());
        os << line;
    }
    int counts[4] = {};
    for (const auto& c : r.cases)
        ++counts[static_cast<int>(c.status)];
    os << r.cases.size() << " cases: " << counts[0] << " PASS, " << counts[1] << " PASS_VARIANT, " << counts[2]
       << " FAIL, " << counts[3] << " SKIP\n";
    return os.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
    std::string format = o.format.value_or("");
    if (format.empty())
        format = o.out_path && o.out_path->ends_with(".csv") ? "csv" : (o.out_path ? "json" : "table");
    if (format != "table" && format != "json" && format != "csv")
        throw UsageError("format must be table, json or csv");

    RunOptions opts{.filter = o.case_filter, .tol_override = o.tol, .threads = o.threads};
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    try {
        report = run_all({}, {}, opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (log_level() != LogLevel::quiet)
        err << "verify: " << report.cases.size() << " cases in "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";

    std::string body;
    if (format == "json")
        body = report_to_json(report) + "\n";
    else if (format == "csv")
        body = report_to_csv(report);
    else
        body = table(report);

    if (o.out_path) {
        std::ofstream f(*o.out_path);
        if (!f || !(f << body)) {
            err << "error: cannot write " << *o.out_path << "\n";
            return usage;
        }
        out << table(report);
    } else {
        out << body;
    }

    for (const auto& c : report.cases)
        if (c.status == Status::FAIL)
            return verification_failed;
    return ok;
}

struct IntegrateOptions {
    Real k = 0;
    Real a = 0.2;
    Real b = 0.6;
};

// Both sides of the u-substitution for (f(-q^5)/f(-q))^{5-6k} f(-q)^4 q^{-k}.
int cmd_integrate(const IntegrateOptions& o, std::ostream& out)
{
    if (!(o.a > 0 && o.b < 1 && o.a < o.b))
        throw UsageError("need 0 < a < b < 1");
    const EtaQuotient e{.unit = 4 - (5 - 6 * o.k), .fifth_power = 5 - 6 * o.k, .q_power = -o.k};
    auto lhs_f = [&](Real q) { return checked(eta_quotient(Nome(q), e), "integrand"); };
    const EvalResult lhs = integrate_finite(lhs_f, o.a, o.b);
    const Real ua = checked(u_of_q(Nome(o.a)), "u").real(), ub = checked(u_of_q(Nome(o.b)), "u").real();
    auto rhs_f = [&](Real t) {
        const Real x = std::exp(t);
        return Complex(std::pow(x, o.k) / std::sqrt(125 + 22 * x + x * x));
    };
    const EvalResult rhs = integrate_finite(rhs_f, std::log(ua), std::log(ub));
    out << "lhs: " << num(lhs.value) << "\n"
        << "rhs: " << num(-rhs.value) << "\n"
        << "difference: " << num(std::abs(lhs.value + rhs.value)) << "\n";
    return lhs.converged && rhs.converged ? ok : unconverged;
}

struct PlotOptions {
    Real from = 0.05;
    Real to = 0.95;
    int n = 64;
    std::optional<std::string> out_path;
};

int cmd_plotdata(const PlotOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.n < 1 || !(o.from > 0 && o.to < 1 && o.from <= o.to) || (o.n > 1 && o.from == o.to))
        throw UsageError("invalid grid");
    std::ostringstream os;
    os << "q,R,u,y\n";
    for (int i = 0; i < o.n; ++i) {
        const Real q = o.n == 1 ? o.from : o.from + (o.to - o.from) * i / (o.n - 1);
        const Nome nq(q);
        os << num(q) << "," << num(rr_value(nq).value.real()) << "," << num(u_of_q(nq).value.real()) << ","
           << num(y_of_q(nq).value.real()) << "\n";
    }
    if (o.out_path) {
        std::ofstream f(*o.out_path);
        if (!f || !(f << os.str())) {
            err << "error: cannot write " << *o.out_path << "\n";
            return usage;
        }
        return ok;
    }
    out << os.str();
    return ok;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rogers-Ramanujan continued fraction and q-product integrals"};
    app.require_subcommand(1);

    EvalOptions eval_o;
    auto* eval = app.add_subcommand("eval", "Evaluate f, eta, R, u or y");
    eval->add_option("--fn", eval_o.fn, "Function")->check(CLI::IsMember({"f", "eta", "R", "u", "y"}));
    eval->add_option("--q", eval_o.q, "Nome, real or re,im");
    eval->add_option("--tau", eval_o.tau, "tau > 0 for eta");

    RootOptions root_o;
    auto* root = app.add_subcommand("root", "Solve u(q) = t or y(q) = t");
    root->add_option("--target", root_o.target, "y=0, u=0.5, u-complex=re,im")->required();
    root->add_option("--seed", root_o.seed, "Newton seed re,im");
    root->add_option("--bracket", root_o.bracket, "lo,hi");
    root->add_option("--tol", root_o.tol, "Residual tolerance");

    VerifyOptions ver_o;
    auto* ver = app.add_subcommand("verify", "Run the identity registry");
    ver->add_option("--case", ver_o.case_filter, "all, an id, or a glob");
    ver->add_option("--tol", ver_o.tol, "Override every case tolerance");
    ver->add_option("--out", ver_o.out_path, "Report path");
    ver->add_option("--format", ver_o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    ver->add_option("--threads", ver_o.threads, "Worker threads, 0 for all cores");

    IntegrateOptions int_o;
    auto* integ = app.add_subcommand("integrate", "Both sides of the u-substitution at exponent k");
    integ->add_option("--k", int_o.k);
    integ->add_option("--a", int_o.a);
    integ->add_option("--b", int_o.b);

    PlotOptions plot_o;
    auto* plot = app.add_subcommand("plotdata", "CSV rows of q, R, u, y");
    plot->add_option("--from", plot_o.from);
    plot->add_option("--to", plot_o.to);
    plot->add_option("--n", plot_o.n);
    plot->add_option("--out", plot_o.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    const LogLevel level = log_level();
    try {
        if (*eval)
            return cmd_eval(eval_o, out);
        if (*root)
            return cmd_root(root_o, out);
        if (*ver)
            return cmd_verify(ver_o, out, err);
        if (*integ)
            return cmd_integrate(int_o, out);
        return cmd_plotdata(plot_o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const NoSignChangeError& e) {
        err << "error: " << e.what() << "\n";
        return divergence;
    } catch (const ToleranceError& e) {
        err << "error: " << e.what() << "\n";
        return unconverged;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return divergence;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return divergence;
    } catch (const std::exception& e) {
        if (level == LogLevel::debug)
            err << "debug: exception type " << typeid(e).name() << "\n";
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

} // namespace rrq::cli
