#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace rigkit {

/// Number -> symbolic name mapping for one architecture. Every count vector in
/// the toolkit has length `width()`, indexed by syscall number.
class SyscallTable {
 public:
  /// Tables are "typically no more than 400" entries; anything past this bound
  /// is almost certainly a malformed table file.
  static constexpr int kMaxIndexBound = 512;

  /// Throws DataError on a negative or out-of-bound number, or a duplicate number.
  void add(int number, std::string name);

  /// -1 for an empty table.
  int max_index() const { return max_index_; }
  std::size_t width() const { return static_cast<std::size_t>(max_index_ + 1); }
  std::size_t size() const { return by_number_.size(); }
  bool empty() const { return by_number_.empty(); }

  std::optional<std::string_view> name(int number) const;
  /// Accepts both "__NR_read" and the bare "read".
  std::optional<int> number(std::string_view name) const;

  const std::map<int, std::string>& entries() const { return by_number_; }

 private:
  std::map<int, std::string> by_number_;
  std::map<std::string, int, std::less<>> by_name_;
  int max_index_ = -1;
};

/// Two-column text table, one `name number` (or `number name`) row per line;
/// blank lines and `#` comments are ignored.
SyscallTable load_syscall_table(std::istream& in);
SyscallTable load_syscall_table_file(const std::filesystem::path& path);

/// Built-in tables: "x86-32" and "x86-64".
SyscallTable builtin_syscall_table(std::string_view name);

/// A built-in name or a path to a table file.
SyscallTable resolve_syscall_table(std::string_view source);

inline constexpr std::string_view kDefaultSyscallTable = "x86-64";

}  // namespace rigkit
