#include <doctest.h>

#include <limits>
#include <set>
#include <stdexcept>

#include "rrq/verify.hpp"

using namespace rrq;

namespace {

Evaluator constant(Complex v)
{
    return [v](const CaseParams&, const EvalContext&) { return Samples{v}; };
}

IdentityCase toy(std::vector<Variant> variants, Complex lhs = 1)
{
    return {"TOY", "toy case", "1 = 1", constant(lhs), std::move(variants), {}, 1e-8};
}

} // namespace

TEST_CASE("registry shape")
{
    const auto reg = build_registry();
    CHECK(reg.size() == 42);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK_FALSE(c.anchor.empty());
        CHECK_FALSE(c.variants.empty());
        CHECK(c.tol > 0);
        ids.insert(c.id);
    }
    CHECK(ids.size() == reg.size());
    CHECK(reg.front().id == "RAM-1");
    CHECK(reg.back().id == "APP2");
}

TEST_CASE("id matching")
{
    CHECK(id_matches("all", "THM2-1"));
    CHECK(id_matches("THM2-*", "THM2-3/2"));
    CHECK(id_matches("THM?-0", "THM6-0"));
    CHECK_FALSE(id_matches("THM2-1", "THM2-1/2"));
}

TEST_CASE("adjudication")
{
    SUBCASE("printed form passes")
    {
        const auto r = run_case(toy({{"printed", constant(1)}, {"other", constant(1)}}));
        CHECK(r.status == Status::PASS);
        REQUIRE(r.chosen_variant);
        CHECK(*r.chosen_variant == "printed");
    }
    SUBCASE("unique variant")
    {
        const auto r = run_case(toy({{"printed", constant(-1)}, {"negated", constant(1)}}));
        CHECK(r.status == Status::PASS_VARIANT);
        CHECK(*r.chosen_variant == "negated");
    }
    SUBCASE("two variants pass: ambiguous")
    {
        const auto r = run_case(toy({{"printed", constant(2)}, {"a", constant(1)}, {"b", constant(1 + 1e-12)}}));
        CHECK(r.status == Status::FAIL);
    }
    SUBCASE("runner-up too close")
    {
        const auto r = run_case(toy({{"printed", constant(2)}, {"a", constant(1)}, {"b", constant(1 + 5e-8)}}));
        CHECK(r.status == Status::FAIL);
    }
    SUBCASE("nothing passes")
    {
        const auto r = run_case(toy({{"printed", constant(2)}}));
        CHECK(r.status == Status::FAIL);
        CHECK_FALSE(r.reason.empty());
    }
    SUBCASE("a throwing variant scores infinity")
    {
        Evaluator boom = [](const CaseParams&, const EvalContext&) -> Samples { throw DomainError("boom"); };
        const auto r = run_case(toy({{"printed", boom}, {"ok", constant(1)}}));
        CHECK(r.status == Status::PASS_VARIANT);
        CHECK(r.variants[0].score == std::numeric_limits<Real>::infinity());
        CHECK(r.variants[0].note.find("boom") != std::string::npos);
    }
    SUBCASE("left side failure skips")
    {
        IdentityCase c = toy({{"printed", constant(1)}});
        c.lhs = [](const CaseParams&, const EvalContext&) -> Samples { throw ConvergenceError("slow"); };
        CHECK(run_case(c).status == Status::SKIP);
    }
    SUBCASE("precondition violation skips")
    {
        IdentityCase c = toy({{"printed", constant(1)}});
        c.params = {{"q", {Complex(1.5)}, ParamKind::nome}};
        const auto r = run_case(c);
        CHECK(r.status == Status::SKIP);
        CHECK(r.reason.find("unit disk") != std::string::npos);
    }
}

TEST_CASE("relative metric")
{
    IdentityCase c = toy({{"printed", constant(1e-20)}}, 1.1e-20);
    CHECK(run_case(c).status == Status::PASS);
    c.metric = Metric::relative;
    CHECK(run_case(c).status == Status::FAIL);
}

TEST_CASE("status strings round trip")
{
    for (Status s : {Status::PASS, Status::PASS_VARIANT, Status::FAIL, Status::SKIP})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(status_from_string("MAYBE"), std::invalid_argument);
}

TEST_CASE("run_all filtering, override and ordering")
{
    RunOptions opts;
    opts.filter = "THM2-*";
    opts.threads = 3;
    const auto r = run_all({}, {}, opts);
    REQUIRE(r.cases.size() == 5);
    CHECK(r.cases[0].id == "THM2--1");
    CHECK(r.cases[4].id == "THM2-3/2");
    for (const auto& c : r.cases)
        CHECK(c.status == Status::PASS);

    opts.tol_override = 1e-30;
    const auto strict = run_all({}, {}, opts);
    CHECK(strict.cases[0].tol == 1e-30);
    CHECK(strict.meta.config_hash != r.meta.config_hash);

    opts.filter = "NOPE";
    CHECK_THROWS_WITH_AS(run_all({}, {}, opts), doctest::Contains("unknown case id"), std::invalid_argument);
}

TEST_CASE("config hash is stable")
{
    CHECK(config_hash({}, {}, std::nullopt) == config_hash({}, {}, std::nullopt));
    QuadratureSpec q;
    q.abs_tol = 1e-10;
    CHECK(config_hash(q, {}, std::nullopt) != config_hash({}, {}, std::nullopt));
    CHECK(config_hash({}, {}, std::nullopt).size() == 16);
}

TEST_CASE("json round trip and csv")
{
    RunOptions opts;
    opts.filter = "EX*";
    VerificationReport r = run_all({}, {}, opts);
    // a failing case carries infinite scores, which serialize as null
    r.cases.push_back(run_case(toy({{"printed", constant(2)}})));
    const std::string text = report_to_json(r);
    const VerificationReport back = report_from_json(text);
    CHECK(report_to_json(back) == text);
    CHECK(back.cases.size() == r.cases.size());
    CHECK(back.cases[0].lhs == r.cases[0].lhs);
    CHECK(back.meta == r.meta);

    const std::string csv = report_to_csv(r);
    CHECK(csv.rfind("id,status,variant,chosen,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,score,tol,runtime_s\n", 0) == 0);
    CHECK_THROWS(report_from_json("{\"cases\": 3}"));
}
