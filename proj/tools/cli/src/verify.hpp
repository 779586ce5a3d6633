#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eulerdec::cli {

struct VerifyOptions {
  std::size_t euler_max = 25;
  std::size_t rak_max = 20;
  std::uint64_t seed = 1;
};

struct CheckRow {
  std::string check;
  std::string index;
  bool pass;
};

/// Runs every batch check; throws Error on out-of-range options.
std::vector<CheckRow> verify_theorems(const VerifyOptions& opts);

}  // namespace eulerdec::cli
