#include "rigkit/syscall_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rigkit/types.hpp"
#include "syscall_tables.hpp"

namespace rigkit {

void SyscallTable::add(int number, std::string name) {
  if (number < 0) {
    throw DataError("syscall table: negative number " + std::to_string(number) + " for " + name);
  }
  if (number > kMaxIndexBound) {
    throw DataError("syscall table: number " + std::to_string(number) + " exceeds bound " +
                    std::to_string(kMaxIndexBound));
  }
  if (by_number_.contains(number)) {
    throw DataError("syscall table: duplicate number " + std::to_string(number));
  }
  by_name_.emplace(name, number);
  by_number_.emplace(number, std::move(name));
  max_index_ = std::max(max_index_, number);
}

std::optional<std::string_view> SyscallTable::name(int number) const {
  auto it = by_number_.find(number);
  if (it == by_number_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SyscallTable::number(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  if (!name.starts_with("__NR_")) {
    std::string prefixed = "__NR_" + std::string(name);
    if (auto it = by_name_.find(prefixed); it != by_name_.end()) return it->second;
  }
  return std::nullopt;
}

namespace {

std::optional<long> parse_long(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

SyscallTable load_syscall_table(std::istream& in) {
  SyscallTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw DataError("syscall table line " + std::to_string(line_no) + ": expected two columns");
    }
    auto na = parse_long(a);
    auto nb = parse_long(b);
    if (nb && !na) {
      table.add(static_cast<int>(*nb), a);
    } else if (na && !nb) {
      table.add(static_cast<int>(*na), b);
    } else {
      throw DataError("syscall table line " + std::to_string(line_no) +
                      ": need exactly one numeric column");
    }
  }
  return table;
}

SyscallTable load_syscall_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open syscall table " + path.string());
  return load_syscall_table(in);
}

SyscallTable builtin_syscall_table(std::string_view name) {
  const std::vector<detail::SyscallRow>* rows = nullptr;
  if (name == "x86-32") rows = &detail::kX86_32Rows;
  if (name == "x86-64") rows = &detail::kX86_64Rows;
  if (rows == nullptr) throw DataError("unknown built-in syscall table: " + std::string(name));
  SyscallTable table;
  for (const auto& row : *rows) table.add(row.number, std::string(row.name));
  return table;
}

SyscallTable resolve_syscall_table(std::string_view source) {
  if (source == "x86-32" || source == "x86-64") return builtin_syscall_table(source);
  return load_syscall_table_file(std::filesystem::path(source));
}

}  // namespace rigkit
