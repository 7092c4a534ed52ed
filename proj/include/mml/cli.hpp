#ifndef MML_CLI_HPP
#define MML_CLI_HPP

#include <iosfwd>
#include <string_view>

#include "mml/models.hpp"

namespace mml::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kCheckFailed = 3,
};

/// Parses
///   base ::= "normal" | "uniform:LO:HI" | "multistate:LO:HI" | "rd:normal^D"
///   spec ::= base { ".transform(" fname ")" }
/// Function names are resolved against the kind of the model so far:
///   continuous: identity, log, exp, inv, linear:A:B
///   R^D:        polar2cartesian, cartesian2polar, swap, or any continuous
///               name applied componentwise
///   discrete:   reverse, rotate:K, shift:K
/// Throws ParseError carrying the offending character position.
UPModelPtr parse_model_spec(std::string_view text);

/// Statistical parameters as text: "0,1" for flat parameters, components
/// separated by ';' for R^D models ("0,1;0,1"), empty for trivial ones.
StatParams parse_params(std::string_view text, const UPModel& upm);

/// Runs the tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mml::cli

#endif  // MML_CLI_HPP
