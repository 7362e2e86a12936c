#include "picip/report.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    picip::CliParse parse = picip::parse_cli_args(args);
    if (parse.show_help) {
        std::cout << picip::cli_usage();
        return 0;
    }
    if (!parse.config) {
        std::cerr << "error: " << parse.error << "\n\n" << picip::cli_usage();
        return 2;
    }

    picip::RunOutcome outcome = picip::run(*parse.config);
    std::cout << picip::format_report(outcome.report, parse.config->format);
    for (const std::string& error : outcome.errors)
        std::cerr << error << "\n";
    return outcome.exit_code;
}
