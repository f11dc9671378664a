#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/pteg.hpp"

namespace maxplus {

/**
 * Problem description as read from disk, before parameter substitution.
 *
 *   {
 *     "n": 4,
 *     "params": {"ell": "-14"},
 *     "A": [["0", "17", "-inf", "-inf"], ...],
 *     "L": [..., ["-inf", "-inf", "-inf", "ell"]],
 *     "C": ...,
 *     "Rtilde": ...
 *   }
 *
 * Entries are exact decimals, fractions, "-inf", or the name of a
 * parameter. JSON integers are accepted as entries too. A matrix that is
 * left out is all -inf.
 */
struct ProblemFile {
  using Entries = std::vector<std::vector<std::string>>;

  static constexpr std::array<std::string_view, 4> kMatrixNames{"A", "L", "C", "Rtilde"};

  std::size_t n = 0;
  std::map<std::string, std::string> params;
  std::map<std::string, Entries, std::less<>> matrices;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError (with line and column for malformed JSON).
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Stable pretty-printed JSON; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& problem);

/**
 * Substitutes parameters (`overrides` win over the file's own values),
 * parses every entry exactly and builds the system. Throws ParseError for
 * malformed or unbound entries and InvalidInput for +inf.
 */
PtegSystem instantiate(const ProblemFile& problem, const std::map<std::string, std::string>& overrides = {});

}  // namespace maxplus
