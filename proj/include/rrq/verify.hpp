#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrq/quad.hpp"
#include "rrq/types.hpp"

namespace rrq {

enum class Status { PASS, PASS_VARIANT, FAIL, SKIP };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

// mixed: |delta| / max(1, |reference|); relative: |delta| / |reference|.
enum class Metric { mixed, relative };

enum class ParamKind {
    nome,       // 0 < |q| < 1
    nome_limit, // real in [0, 1], used for integration endpoints
    value,      // unconstrained
};

struct CaseParam {
    std::string name;
    std::vector<Complex> values;
    ParamKind kind = ParamKind::value;
};

class CaseParams {
public:
    CaseParams() = default;
    CaseParams(std::initializer_list<CaseParam> items) : items_(items) {}

    const std::vector<Complex>& list(const std::string& name) const;
    Complex get(const std::string& name) const { return list(name).front(); }
    Real real(const std::string& name) const { return get(name).real(); }
    void set(const std::string& name, std::vector<Complex> values);

    // Description of the first precondition violation, if any.
    std::optional<std::string> violation() const;

    const std::vector<CaseParam>& items() const { return items_; }

private:
    const CaseParam& find(const std::string& name) const;
    std::vector<CaseParam> items_;
};

struct EvalContext {
    QuadratureSpec quad;
    Truncation trunc;
};

using Samples = std::vector<Complex>;
using Evaluator = std::function<Samples(const CaseParams&, const EvalContext&)>;

struct Variant {
    std::string label;
    Evaluator rhs;
    // Empty: compare against the case's own left side.
    Evaluator lhs{};
};

struct IdentityCase {
    std::string id;
    std::string description;
    std::string anchor;
    Evaluator lhs{};
    std::vector<Variant> variants; // the first one is the form as printed
    CaseParams params;
    Real tol = 1e-8;
    Metric metric = Metric::mixed;
};

struct VariantOutcome {
    std::string label;
    Complex rhs{};
    std::optional<Complex> lhs_override;
    Real abs_err = 0;
    Real rel_err = 0;
    Real score = 0;
    std::string note;

    bool operator==(const VariantOutcome&) const = default;
};

struct CaseResult {
    std::string id;
    std::string anchor;
    Status status = Status::SKIP;
    std::optional<std::string> chosen_variant;
    Complex lhs{};
    std::vector<VariantOutcome> variants;
    Real runtime_s = 0;
    Real tol = 0;
    std::string reason;

    bool operator==(const CaseResult&) const = default;
};

struct ReportMeta {
    std::string precision;
    std::string config_hash;
    std::string date;

    bool operator==(const ReportMeta&) const = default;
};

struct VerificationReport {
    ReportMeta meta;
    std::vector<CaseResult> cases;

    bool operator==(const VerificationReport&) const = default;
};

std::vector<IdentityCase> build_registry();

CaseResult run_case(const IdentityCase& c, const QuadratureSpec& spec = {}, const Truncation& t = {});

struct RunOptions {
    std::optional<std::string> filter;  // "all", an id, or a glob with * and ?
    std::optional<Real> tol_override;   // replaces every case tolerance
    unsigned threads = 0;               // 0: hardware concurrency
};

// Throws std::invalid_argument when the filter matches no case.
VerificationReport run_all(const QuadratureSpec& spec = {}, const Truncation& t = {}, const RunOptions& opts = {});

bool id_matches(const std::string& pattern, const std::string& id);
std::string config_hash(const QuadratureSpec& spec, const Truncation& t, std::optional<Real> tol_override);

std::string report_to_json(const VerificationReport& r, int indent = 2);
VerificationReport report_from_json(const std::string& text);
std::string report_to_csv(const VerificationReport& r);

} // namespace rrq
