#ifndef MESOCAT_ACCEPT_HPP
#define MESOCAT_ACCEPT_HPP

// End-to-end acceptance run: ten criteria, one pass/fail line each, data
// artifacts written to a directory, plus a machine-readable summary.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mesocat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;   // deterministic: no timings in here
    double seconds = 0.0;
};

struct AcceptOptions {
    std::filesystem::path out_dir = "accept_out";
    int threads = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptOptions& options, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);
nlohmann::json acceptance_summary(const std::vector<CriterionResult>& results);

} // namespace mesocat

#endif
