#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "skh/complex.hpp"

namespace skh {

enum class Suite : std::uint8_t { Parity, Tensor, Cut, Moves, Oracle, Filtration };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteReport {
  Suite suite = Suite::Parity;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failing case, written as an input file with the details as comments.
  std::string failure;
  /// Filtration bookkeeping summed over every annular complex the suite built.
  FiltrationStats filtration;
  bool ok() const noexcept { return failed == 0; }
};

/// Runs `count` random cases from `seed`. Stops at the first failure unless keep_going.
SuiteReport run_suite(Suite s, std::uint64_t seed, std::size_t count, const BuildOptions& opts = {},
                      bool keep_going = false);

void accumulate(FiltrationStats& into, const FiltrationStats& from);

}  // namespace skh
