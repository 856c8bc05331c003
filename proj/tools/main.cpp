#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    int code = 0;
    const auto cfg = johnsimplex::cli::parse_args(argc, argv, code);
    if (!cfg) return code;

    const johnsimplex::cli::RunResult result = johnsimplex::cli::run(*cfg);
    if (!result.report.is_null()) {
        const std::string text = result.report.dump(2) + "\n";
        if (cfg->output) {
            try {
                johnsimplex::write_text_file(*cfg->output, text);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        } else {
            std::cout << text;
        }
    }
    if (!result.diagnostic.empty()) {
        std::cerr << (result.exit_code == 1 ? "error: " : "violation: ") << result.diagnostic << "\n";
    }
    return result.exit_code;
}
