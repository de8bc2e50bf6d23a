#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto                     report = xmodlab::cli::run(args);
  auto                     output = xmodlab::cli::render(report);
  if (report.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream file(report.out);
    if (!file) {
      std::cerr << "xmodlab: cannot write '" << report.out << "'\n";
      return 2;
    }
    file << output;
  }
  return report.exit_code;
}
