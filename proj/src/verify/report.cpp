#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "rrq/verify.hpp"

namespace rrq {

namespace {

using Json = nlohmann::ordered_json;

// JSON has no non-finite numbers: errors encode +inf as null, values encode NaN as null.
Json error_number(Real v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Real error_from(const Json& j)
{
    return j.is_null() ? kInf : j.get<Real>();
}

Json value_pair(Complex v)
{
    auto part = [](Real x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
    return Json::array({part(v.real()), part(v.imag())});
}

Complex pair_from(const Json& j)
{
    auto part = [](const Json& x) { return x.is_null() ? std::numeric_limits<Real>::quiet_NaN() : x.get<Real>(); };
    return {part(j.at(0)), part(j.at(1))};
}

} // namespace

std::string report_to_json(const VerificationReport& r, int indent)
{
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json rhs = Json::object(), abs_err = Json::object(), rel_err = Json::object();
        Json lhs_variant = Json::object(), notes = Json::object();
        for (const auto& v : c.variants) {
            rhs[v.label] = value_pair(v.rhs);
            abs_err[v.label] = error_number(v.abs_err);
            rel_err[v.label] = error_number(v.rel_err);
            if (v.lhs_override)
                lhs_variant[v.label] = value_pair(*v.lhs_override);
            if (!v.note.empty())
                notes[v.label] = v.note;
        }
        Json jc = {
            {"id", c.id},
            {"anchor", c.anchor},
            {"status", to_string(c.status)},
            {"chosen_variant", c.chosen_variant ? Json(*c.chosen_variant) : Json(nullptr)},
            {"lhs", value_pair(c.lhs)},
            {"rhs", rhs},
            {"abs_err", abs_err},
            {"rel_err", rel_err},
            {"runtime_s", c.runtime_s},
            {"tol", c.tol},
            {"reason", c.reason},
            {"score", Json::object()},
        };
        for (const auto& v : c.variants)
            jc["score"][v.label] = error_number(v.score);
        if (!lhs_variant.empty())
            jc["lhs_variant"] = lhs_variant;
        if (!notes.empty())
            jc["notes"] = notes;
        cases.push_back(std::move(jc));
    }
    Json doc = {
        {"meta", {{"precision", r.meta.precision}, {"config_hash", r.meta.config_hash}, {"date", r.meta.date}}},
        {"cases", cases},
    };
    return doc.dump(indent);
}

VerificationReport report_from_json(const std::string& text)
{
    const Json doc = Json::parse(text);
    VerificationReport r;
    const Json& meta = doc.at("meta");
    r.meta.precision = meta.at("precision").get<std::string>();
    r.meta.config_hash = meta.at("config_hash").get<std::string>();
    r.meta.date = meta.value("date", "");
    for (const Json& jc : doc.at("cases")) {
        CaseResult c;
        c.id = jc.at("id").get<std::string>();
        c.anchor = jc.at("anchor").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        if (!jc.at("chosen_variant").is_null())
            c.chosen_variant = jc.at("chosen_variant").get<std::string>();
        c.lhs = pair_from(jc.at("lhs"));
        c.runtime_s = jc.at("runtime_s").get<Real>();
        c.tol = jc.value("tol", Real(0));
        c.reason = jc.value("reason", "");
        for (const auto& [label, value] : jc.at("rhs").items()) {
            VariantOutcome v;
            v.label = label;
            v.rhs = pair_from(value);
            v.abs_err = error_from(jc.at("abs_err").at(label));
            v.rel_err = error_from(jc.at("rel_err").at(label));
            if (jc.contains("score"))
                v.score = error_from(jc.at("score").at(label));
            if (jc.contains("lhs_variant") && jc.at("lhs_variant").contains(label))
                v.lhs_override = pair_from(jc.at("lhs_variant").at(label));
            if (jc.contains("notes") && jc.at("notes").contains(label))
                v.note = jc.at("notes").at(label).get<std::string>();
            c.variants.push_back(std::move(v));
        }
        r.cases.push_back(std::move(c));
    }
    return r;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string report_to_csv(const VerificationReport& r)
{
    std::ostringstream os;
    os << std::setprecision(17);
    os << "id,status,variant,chosen,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,score,tol,runtime_s\n";
    for (const auto& c : r.cases) {
        if (c.variants.empty()) {
            os << csv_field(c.id) << ',' << to_string(c.status) << ",,,,,,,,,," << c.tol << ',' << c.runtime_s << '\n';
            continue;
        }
        for (const auto& v : c.variants) {
            const Complex l = v.lhs_override.value_or(c.lhs);
            os << csv_field(c.id) << ',' << to_string(c.status) << ',' << csv_field(v.label) << ','
               << (c.chosen_variant && *c.chosen_variant == v.label ? 1 : 0) << ',' << l.real() << ',' << l.imag()
               << ',' << v.rhs.real() << ',' << v.rhs.imag() << ',' << v.abs_err << ',' << v.rel_err << ','
               << v.score << ',' << c.tol << ',' << c.runtime_s << '\n';
        }
    }
    return os.str();
}

} // namespace rrq
