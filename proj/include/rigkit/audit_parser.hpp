#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigkit/syscall_table.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

enum class RecordType { Syscall, Execve, Cwd, Path, Sockaddr, Proctitle, Eoe, Other };

RecordType record_type_from_name(std::string_view name);

/// `audit(SECONDS.MILLIS:SERIAL)`; shared by every record of one event.
struct EventKey {
  Timestamp time;
  std::uint64_t serial = 0;

  auto operator<=>(const EventKey&) const = default;
};

struct AuditRecord {
  RecordType type = RecordType::Other;
  std::string type_name;
  EventKey key;
  /// Fields in log order. Hex-encoded string fields are already decoded.
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* find(std::string_view name) const;
};

struct PathEntry {
  std::string name;
  std::uint64_t inode = 0;

  bool operator==(const PathEntry&) const = default;
};

struct SocketAddress {
  int family = -1;  // -1 when the payload was too short to carry one
  std::string address;

  bool operator==(const SocketAddress&) const = default;
};

/// One SYSCALL event with its EXECVE/CWD/PATH/SOCKADDR records folded in.
/// Missing pid/uid/exe are left empty; the graph builder decides what to do.
struct AuditEvent {
  Timestamp timestamp;
  std::uint64_t serial = 0;
  int syscall = 0;
  std::string pid;
  std::string ppid;
  std::string uid;
  std::string exe;
  std::vector<PathEntry> paths;
  std::optional<std::string> cwd;
  std::vector<std::string> execve_args;
  std::optional<SocketAddress> sockaddr;

  bool operator==(const AuditEvent&) const = default;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

/// Decodes a SOCKADDR `saddr` hex payload. Layout follows struct sockaddr on
/// a little-endian host: 16-bit family, then family-specific bytes.
SocketAddress decode_sockaddr(std::string_view hex);

/// Canonical address string: "ip:port", "[ip6]:port", "unix:path",
/// "fam<N>:<hex>" for other families and "fam?:<hex>" when truncated.
inline std::string format_sockaddr(std::string_view hex) { return decode_sockaddr(hex).address; }

/// Parses one `type=... msg=audit(...): k=v ...` line. Lines without a `msg=`
/// header return a record with `has_key == false`; the stream parser attaches
/// those to the most recent event. Returns nullopt and fills `error` for
/// lines that are not records at all.
struct ParsedLine {
  AuditRecord record;
  bool has_key = false;
};
std::optional<ParsedLine> parse_record_line(std::string_view line, std::string* error);

/// Streaming event assembler. Records are grouped by event key; up to
/// `open_limit` events stay open at once and the least recently touched one is
/// flushed when the limit is exceeded. An EOE record closes its event.
class AuditStreamParser {
 public:
  using Sink = std::function<void(AuditEvent&&)>;

  static constexpr std::size_t kDefaultOpenLimit = 1024;

  AuditStreamParser(const SyscallTable& table, Sink sink,
                    std::size_t open_limit = kDefaultOpenLimit);
  ~AuditStreamParser();
  AuditStreamParser(const AuditStreamParser&) = delete;
  AuditStreamParser& operator=(const AuditStreamParser&) = delete;

  void feed_line(std::string_view line);
  /// Flushes every open event. Further lines are not accepted.
  void finish();

  const std::vector<ParseWarning>& warnings() const;
  std::size_t emitted() const;
  /// Events whose record set had no (usable) SYSCALL record.
  std::size_t skipped() const;
  std::size_t distinct_keys() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ParseResult {
  std::vector<AuditEvent> events;  // nondecreasing (timestamp, serial)
  std::vector<ParseWarning> warnings;
  std::size_t skipped_events = 0;
  std::size_t distinct_keys = 0;
};

ParseResult parse_stream(std::istream& in, const SyscallTable& table);
ParseResult parse_text(std::string_view text, const SyscallTable& table);

}  // namespace rigkit
