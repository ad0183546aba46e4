#pragma once

// The acmkit input language, run reports and command dispatch.
//
//   ring p=32003 vars=x,y,z,w
//   ideal IX = x*y, x*z, y*z     # generators
//   free P = -3,-3,-3            # R(-3)^3
//   form F = z

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acm/resolve.hpp"
#include "acm/ring.hpp"

namespace acm::cli {

struct InputDocument {
  RingPtr ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  /// Twists a_i of the sum of R(a_i), as written.
  std::vector<std::pair<std::string, std::vector<int>>> free_modules;
  std::vector<std::pair<std::string, Polynomial>> forms;

  const std::vector<Polynomial>& ideal(const std::string& name) const;
  /// The named module in the library convention (twists -a_i).
  FreeModule free_module(const std::string& name) const;
  const Polynomial& form(const std::string& name) const;
  bool has_free_module(const std::string& name) const;

  bool operator==(const InputDocument& other) const;
};

/// Throws ParseError carrying the offset into `text`; the message starts
/// with "line L, column C:".
InputDocument parse_document(std::string_view text);
std::string render_document(const InputDocument& doc);

/// Parses "a1,a2,..." (twists of the sum of R(a_i)) into library twists.
FreeModule parse_twist_list(std::string_view text);

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::optional<int> k;
  std::map<std::string, BettiTable> betti;
  std::optional<int> codim;
  std::optional<bool> acm;
  std::optional<bool> contains_x;
  std::map<std::string, int> cm_type;
  std::optional<bool> gorenstein;
  std::map<std::string, bool> checks;
  std::map<std::string, std::string> details;
  std::map<std::string, double> timings_ms;
  std::optional<std::string> error;
  bool pass = false;

  bool operator==(const RunReport&) const = default;
};

std::string report_to_json(const RunReport& report, bool timings = true);
RunReport report_from_json(std::string_view json);
/// Human-readable summary printed on standard output.
std::string report_to_text(const RunReport& report);

/// Exit codes of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFailedCertificate = 2;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace acm::cli
