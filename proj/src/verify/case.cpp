#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <thread>

#include "rrq/verify.hpp"

namespace rrq {

const char* to_string(Status s)
{
    switch (s) {
    case Status::PASS: return "PASS";
    case Status::PASS_VARIANT: return "PASS_VARIANT";
    case Status::FAIL: return "FAIL";
    case Status::SKIP: return "SKIP";
    }
    return "?";
}

Status status_from_string(const std::string& s)
{
    for (Status st : {Status::PASS, Status::PASS_VARIANT, Status::FAIL, Status::SKIP})
        if (s == to_string(st))
            return st;
    throw std::invalid_argument("unknown status '" + s + "'");
}

const CaseParam& CaseParams::find(const std::string& name) const
{
    for (const auto& p : items_)
        if (p.name == name)
            return p;
    throw std::out_of_range("case parameter '" + name + "' not defined");
}

const std::vector<Complex>& CaseParams::list(const std::string& name) const
{
    return find(name).values;
}

void CaseParams::set(const std::string& name, std::vector<Complex> values)
{
    for (auto& p : items_)
        if (p.name == name) {
            p.values = std::move(values);
            return;
        }
    throw std::out_of_range("case parameter '" + name + "' not defined");
}

std::optional<std::string> CaseParams::violation() const
{
    for (const auto& p : items_) {
        if (p.values.empty())
            return "parameter " + p.name + " has no values";
        for (Complex v : p.values) {
            std::ostringstream os;
            os << "parameter " << p.name << " = " << (v.imag() == 0 ? std::to_string(v.real()) : "complex value");
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                return os.str() + " is not finite";
            if (p.kind == ParamKind::nome && !(std::abs(v) < 1 && std::abs(v) > 0))
                return os.str() + " lies outside the punctured unit disk";
            if (p.kind == ParamKind::nome_limit && !(v.imag() == 0 && v.real() >= 0 && v.real() <= 1))
                return os.str() + " is not a real point of [0, 1]";
        }
    }
    return std::nullopt;
}

namespace {

Real score_of(Complex l, Complex r, Metric metric)
{
    const Real d = std::abs(l - r);
    if (metric == Metric::relative)
        return d / std::abs(r);
    return d / std::max<Real>(1, std::abs(r));
}

bool finite(Complex v)
{
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace

CaseResult run_case(const IdentityCase& c, const QuadratureSpec& spec, const Truncation& t)
{
    const auto start = std::chrono::steady_clock::now();
    CaseResult out;
    out.id = c.id;
    out.anchor = c.anchor;
    out.tol = c.tol;
    auto finish = [&]() -> CaseResult {
        out.runtime_s = std::chrono::duration<Real>(std::chrono::steady_clock::now() - start).count();
        return out;
    };

    if (auto why = c.params.violation()) {
        out.status = Status::SKIP;
        out.reason = *why;
        return finish();
    }
    const EvalContext ctx{spec, t};
    Samples lhs;
    try {
        lhs = c.lhs(c.params, ctx);
        if (lhs.empty())
            throw std::runtime_error("left side produced no samples");
    } catch (const std::exception& e) {
        out.status = Status::SKIP;
        out.reason = std::string("left side not evaluated: ") + e.what();
        return finish();
    }

    // Per variant: the worst-scoring sample decides.
    std::vector<std::size_t> worst(c.variants.size(), 0);
    std::vector<Samples> lhs_used(c.variants.size()), rhs_used(c.variants.size());
    for (std::size_t v = 0; v < c.variants.size(); ++v) {
        const Variant& var = c.variants[v];
        VariantOutcome o;
        o.label = var.label;
        try {
            Samples l = var.lhs ? var.lhs(c.params, ctx) : lhs;
            Samples r = var.rhs(c.params, ctx);
            if (r.size() != l.size())
                throw std::runtime_error("sample count mismatch");
            Real best = -1;
            for (std::size_t i = 0; i < r.size(); ++i) {
                Real s = score_of(l[i], r[i], c.metric);
                if (!finite(l[i]) || !finite(r[i]) || std::isnan(s))
                    s = kInf;
                if (s > best) {
                    best = s;
                    worst[v] = i;
                }
                o.abs_err = std::max(o.abs_err, std::abs(l[i] - r[i]));
                o.rel_err = std::max(o.rel_err, std::abs(l[i] - r[i]) / std::max(std::abs(l[i]), std::abs(r[i])));
            }
            o.score = best;
            if (std::isnan(o.abs_err) || std::isnan(o.rel_err))
                o.abs_err = o.rel_err = kInf;
            lhs_used[v] = std::move(l);
            rhs_used[v] = std::move(r);
        } catch (const std::exception& e) {
            o.abs_err = o.rel_err = o.score = kInf;
            o.note = e.what();
        }
        out.variants.push_back(std::move(o));
    }

    std::vector<std::size_t> passing;
    for (std::size_t v = 0; v < out.variants.size(); ++v)
        if (out.variants[v].score <= c.tol)
            passing.push_back(v);

    std::optional<std::size_t> chosen;
    if (!out.variants.empty() && out.variants[0].score <= c.tol) {
        out.status = Status::PASS;
        chosen = 0;
    } else if (passing.size() == 1) {
        const std::size_t w = passing[0];
        const bool separated = std::all_of(out.variants.begin(), out.variants.end(), [&](const VariantOutcome& o) {
            return &o == &out.variants[w] || o.score > 10 * c.tol;
        });
        if (separated) {
            out.status = Status::PASS_VARIANT;
            chosen = w;
        } else {
            out.status = Status::FAIL;
            out.reason = "winning variant is not separated by 10x from the others";
        }
    } else {
        out.status = Status::FAIL;
        out.reason = passing.empty() ? "no variant meets the tolerance" : "more than one non-printed variant passes";
    }

    // Report values at the sample that decides the chosen (or printed) variant.
    const std::size_t ref = chosen.value_or(0);
    const std::size_t idx = lhs_used[ref].empty() ? 0 : worst[ref];
    out.lhs = lhs[std::min(idx, lhs.size() - 1)];
    for (std::size_t v = 0; v < out.variants.size(); ++v) {
        const Real nan = std::numeric_limits<Real>::quiet_NaN();
        const bool ok = !rhs_used[v].empty();
        out.variants[v].rhs = ok ? rhs_used[v][std::min(idx, rhs_used[v].size() - 1)] : Complex(nan, nan);
        if (c.variants[v].lhs)
            out.variants[v].lhs_override = ok ? lhs_used[v][std::min(idx, lhs_used[v].size() - 1)] : Complex(nan, nan);
    }
    if (chosen)
        out.chosen_variant = out.variants[*chosen].label;
    return finish();
}

bool id_matches(const std::string& pattern, const std::string& id)
{
    if (pattern == "all")
        return true;
    // Iterative glob with backtracking over the last '*'.
    std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
    while (s < id.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == id[s])) {
            ++p;
            ++s;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = s;
        } else if (star != std::string::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

std::string config_hash(const QuadratureSpec& spec, const Truncation& t, std::optional<Real> tol_override)
{
    std::ostringstream os;
    os << std::setprecision(17) << "rule=" << static_cast<int>(spec.rule) << ";abs=" << spec.abs_tol
       << ";rel=" << spec.rel_tol << ";levels=" << spec.max_levels << ";terms=" << t.max_terms
       << ";tail=" << t.tail_tol << ";tol=" << (tol_override ? *tol_override : Real(-1))
       << ";precision=" << precision_name();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

namespace {

std::string today_utc()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%d");
    return os.str();
}

} // namespace

VerificationReport run_all(const QuadratureSpec& spec, const Truncation& t, const RunOptions& opts)
{
    std::vector<IdentityCase> cases;
    const std::string pattern = opts.filter.value_or("all");
    for (auto& c : build_registry())
        if (id_matches(pattern, c.id))
            cases.push_back(std::move(c));
    if (cases.empty())
        throw std::invalid_argument("unknown case id '" + pattern + "'");
    if (opts.tol_override)
        for (auto& c : cases)
            c.tol = *opts.tol_override;

    VerificationReport report;
    report.meta = {precision_name(), config_hash(spec, t, opts.tol_override), today_utc()};
    report.cases.resize(cases.size());

    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cases.size()));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++)
                    report.cases[i] = run_case(cases[i], spec, t);
            });
    }
    return report;
}

} // namespace rrq
