#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spherekit::cli {

/// Exit codes of the command-line front end.
enum Exit : int {
  ok = 0,
  io_or_parse = 1,     // unreadable file, malformed JSON, invalid code
  hypothesis = 2,      // bound hypothesis or precondition not met
  internal = 3,        // inconsistency between two computations
  usage = 64,          // unknown subcommand/flag, bad parameter
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherekit::cli
