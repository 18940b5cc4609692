/**
 * patchwork <command> [subcommand] <instance.json> [options]
 *
 * Exit status: 0 on success, 1 when an audit or consistency check fails,
 * 2 on usage or input errors.
 */

#include "patchwork/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace {

using patchwork::report::Report;
using patchwork::report::Status;

std::string usage()
{
    std::string text = "commands:";
    for (const auto& c : patchwork::report::commands()) {
        text += " " + c;
    }
    text += "\ncurve subcommands:";
    for (const auto& c : patchwork::report::curve_subcommands()) {
        text += " " + c;
    }
    return text;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Patchworking, tropical homology and real Betti numbers over GF(2)"};
    app.footer(usage());

    std::vector<std::string> positional;
    std::string format = "json";
    patchwork::report::Options options;
    std::size_t max_page = 0;
    bool emit_ids = false;

    app.add_option("args", positional, "command, optional curve subcommand, instance file")->required();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--borel-moore", options.borel_moore, "use Borel-Moore homology");
    app.add_option("--max-page", max_page, "last spectral sequence page to print")->check(CLI::PositiveNumber);
    app.add_option("--cap", options.cap, "largest number of bounded edges for curve enumerate");
    app.add_flag("--assume-regular", options.assume_regular, "suppress the regularity warning");
    app.add_flag("--emit-ids", emit_ids, "same as the emit-ids command");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(Status::error);
    }
    if (max_page > 0) {
        options.max_page = max_page;
    }
    if (emit_ids) {
        positional.insert(positional.begin(), "emit-ids");
    }

    std::string command = positional.front();
    std::string subcommand;
    std::string path;
    Report report;
    const auto& known = patchwork::report::commands();
    if (std::find(known.begin(), known.end(), command) == known.end()) {
        report = patchwork::report::error_report(command, "", "unknown command \"" + command + "\"", {usage()});
    } else if (command == "curve" && positional.size() != 3) {
        report = patchwork::report::error_report(command, "", "usage: patchwork curve <subcommand> <instance.json>",
                                                 {usage()});
    } else if (command != "curve" && positional.size() != 2) {
        report = patchwork::report::error_report(command, "", "usage: patchwork " + command + " <instance.json>");
    } else {
        if (command == "curve") {
            subcommand = positional[1];
        }
        path = positional.back();
        try {
            report = patchwork::report::run(command, subcommand, patchwork::instance::parse_instance(path), options);
        } catch (const patchwork::instance::InstanceError& e) {
            report = patchwork::report::error_report(command, path, e.what(), e.diagnostics());
        }
    }

    if (format == "table") {
        std::cout << patchwork::report::render_table(report.body);
    } else {
        std::cout << patchwork::report::render_json(report.body);
    }
    return static_cast<int>(report.status);
}
