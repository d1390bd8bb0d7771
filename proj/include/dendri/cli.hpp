#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dendri/poly.hpp"

namespace dendri::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2008;

/// Per-degree dimension counts obtained by different routes.
struct DimensionReport {
  std::size_t m = 0;
  /// Normal L-words, by enumeration.
  std::size_t normal_lwords = 0;
  /// Normal DD-words, by enumeration.
  std::size_t dd_words = 0;
  /// Rank of the normal forms of all normal L-words of degree m.
  std::size_t rewritten = 0;
  /// Quotient dimension from the relation matrix, when requested.
  std::optional<std::size_t> oracle;
  Integer closed_form;

  bool agree() const;
};

DimensionReport dimension_report(std::size_t m, std::size_t n, bool with_oracle);

/// Runs the command line `args` (program name excluded). Input for
/// --stdin is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dendri::cli
