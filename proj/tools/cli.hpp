// The xmodlab command line, as a library so that tests can drive it.

#ifndef XMODLAB_TOOLS_CLI_HPP_
#define XMODLAB_TOOLS_CLI_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "json.hpp"

namespace xmodlab::cli {

  struct Report {
    std::string    command;
    std::string    status = "ok";  // ok | invalid | error
    nlohmann::json findings = nlohmann::json::object();
    double         timing_ms = 0;
    std::string    text;           // human-readable rendering
    int            exit_code = 0;  // 0 ok, 1 invalid input, 2 usage/IO
    bool           json = false;   // --json was given
    std::string    out;            // --out path, empty for stdout
  };

  //! Runs one command line (without the program name). Never throws;
  //! failures become status "error" or "invalid".
  Report run(std::vector<std::string> const& args);

  //! {"schema": 1, "command", "status", "findings", "timing_ms"}.
  nlohmann::json to_json(Report const& r);

  //! What the tool prints: JSON when requested, the text otherwise.
  std::string render(Report const& r);

}  // namespace xmodlab::cli

#endif  // XMODLAB_TOOLS_CLI_HPP_
