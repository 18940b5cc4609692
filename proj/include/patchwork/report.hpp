/**
 * Command dispatch and report rendering for the patchwork tool.
 *
 * Every report is a JSON object with the keys "schema", "command",
 * "instance" (source and SHA-256 digest), "result", "warnings" and
 * "errors". The table format is a line-oriented rendering of the same
 * object and parse_table recovers it exactly.
 */

#ifndef PATCHWORK_REPORT_HPP
#define PATCHWORK_REPORT_HPP

#include "patchwork/instance.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace patchwork::report {

inline constexpr const char* schema_version = "patchwork/1";

struct Options
{
    bool borel_moore = false;
    std::optional<std::size_t> max_page;
    std::size_t cap = 20;
    bool assume_regular = false;
};

enum class Status { ok = 0, audit_failure = 1, error = 2 };

struct Report
{
    nlohmann::json body;
    Status status = Status::ok;
};

/** Commands accepted by run, with the curve subcommands listed separately. */
const std::vector<std::string>& commands();
const std::vector<std::string>& curve_subcommands();

/**
 * Runs one command. `subcommand` is used by "curve" only. Input errors are
 * reported in the body with Status::error rather than thrown.
 */
Report run(const std::string& command, const std::string& subcommand, const instance::Instance& inst,
           const Options& options);

Report error_report(const std::string& command, const std::string& source, const std::string& message,
                    const std::vector<std::string>& diagnostics = {});

std::string render_json(const nlohmann::json& body);
std::string render_table(const nlohmann::json& body);
nlohmann::json parse_table(const std::string& text);

}   // namespace patchwork::report

#endif
