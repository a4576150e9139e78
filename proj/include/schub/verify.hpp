#pragma once
// Executable catalog of identity suites.  Each suite symbolically checks one
// family of identities at fixed desk-scale ranks and returns a report with a
// counterexample witness on failure.  Suites whose statements are
// convention-sensitive or empirically false as printed carry Reported
// status: they never gate, but always record the observed outcome.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "schub/expressions.hpp"

namespace schub {

enum class Status { Pass, Fail, Reported };
std::string status_str(Status s);

struct PropertyReport {
    std::string suite;
    std::string statement;  // the identity checked, in plain terms
    std::map<std::string, std::string> params;
    Status status = Status::Pass;
    std::string witness;  // failure detail / reported outcome
};

nlohmann::json report_json(const PropertyReport& r);

// All suite ids, in canonical execution order.
const std::vector<std::string>& suite_catalog();

// Runs one suite; throws std::invalid_argument for an unknown id.
PropertyReport run_suite(const std::string& suite);

std::vector<PropertyReport> run_all();

}  // namespace schub
