#pragma once

#include <string_view>
#include <vector>

namespace rigkit::detail {

struct SyscallRow {
  std::string_view name;
  int number;
};

extern const std::vector<SyscallRow> kX86_32Rows;
extern const std::vector<SyscallRow> kX86_64Rows;

}  // namespace rigkit::detail
