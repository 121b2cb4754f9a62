#ifndef PGD_CLI_HPP
#define PGD_CLI_HPP

/// Command-line front end.
///
/// The tool exposes the library as a small set of verbs:
///
///   construct {hamming|ksd|multipartite|wreath|family-code}
///   verify    {scheme|pgd|srg|dsrg}
///   code      {info|dual|oa-strength|scheme}
///   dsrg      {flag|antiflag}
///   catalog   {table1|cor55|z-family}
///
/// Every invocation produces a single deterministic report (JSON or text)
/// on stdout and an exit code:
///
///   0  success
///   1  mathematical or operational failure (a certification failed, a
///      file could not be read or parsed, a size cap was hit, ...)
///   2  usage error (unknown verb, missing required option, bad flag value)
///
/// Reports echo the command line, carry a status of "ok" or "fail", a
/// payload of results or failure details, and a provenance block listing
/// an FNV-1a 64-bit digest for every input file consumed.

#include <string>
#include <vector>

#include <json.hpp>

namespace pgd::cli {

/// Outcome of one command, independent of how it is rendered.
struct Report {
  /// The command line as received (without the program name).
  std::string command;
  /// True when the command succeeded.
  bool ok = false;
  /// Results on success; failure details otherwise.
  nlohmann::json payload = nlohmann::json::object();
  /// One entry per input file: path, byte count and FNV-1a 64 digest.
  nlohmann::json provenance = nlohmann::json::array();
};

struct DispatchResult {
  Report report;
  int exit_code = 0;
};

/// Parses and executes one command line (program name excluded).  Never
/// throws: every failure is folded into the report and exit code.
DispatchResult dispatch(const std::vector<std::string>& args);

/// Renders a report as a byte string.  `format` is "json" (two-space
/// indented, keys sorted) or "text" (framed key/value lines).  Identical
/// reports render to identical bytes.
std::string emit(const Report& report, const std::string& format);

/// Full program behaviour: dispatch, render to stdout, return exit code.
int run(int argc, const char* const* argv);

/// FNV-1a 64-bit digest of a byte string, rendered as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace pgd::cli

#endif  // PGD_CLI_HPP
