#include <exception>
#include <iostream>

#include "quadric/cli/config.hpp"
#include "quadric/cli/report_io.hpp"

int main(int argc, char** argv) {
  try {
    const auto parsed = quadric::cli::parse_args(argc, argv);
    if (!parsed.config) {
      (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.output;
      return parsed.exit_code;
    }
    const auto result = quadric::verify::run_suite(parsed.config->suite);
    return quadric::cli::emit_report(result, *parsed.config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
