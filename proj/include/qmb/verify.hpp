#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmb/ncalg.hpp"

namespace qmb {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, PassWithConventionFactor };

std::string to_string(CheckStatus s);

// Check names in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

struct CheckId {
    std::string name;
    Json params = Json::object();
};

struct ReportEntry {
    CheckId id;
    CheckStatus status = CheckStatus::Fail;
    std::optional<std::string> witness;
    std::optional<std::string> correction_factor;
    // Computed data worth keeping on success (dimension lists, minors, values).
    std::optional<std::string> value;
    long long millis = 0;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;

    bool ok() const;
    std::size_t count(CheckStatus s) const;
    Json to_json(bool with_timing = true) const;
};

// Restrictions applied when expanding a check into grid points. Unset fields
// use the default grid of each check.
struct GridOptions {
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> lambda_max;
    std::optional<int> max_degree;
    // q-point for evaluated checks, "p/r".
    std::string q_point = "1/2";
};

std::vector<CheckId> expand_check(const std::string& name, const GridOptions& grid = {});
std::vector<CheckId> default_suite(const GridOptions& grid = {});

ReportEntry run_check(const CheckId& id);
// Engine checks (pbw_dims, associativity, confluence_strategy) against an
// explicit algebra, so broken presentations can be exercised.
ReportEntry run_engine_check(const CheckId& id, const std::shared_ptr<const Algebra>& alg);

// Runs the checks on up to `parallelism` threads; entries are sorted by check
// name rank, then by their position in `selection`.
VerificationReport run_suite(const std::vector<CheckId>& selection, int parallelism = 1);

} // namespace qmb
