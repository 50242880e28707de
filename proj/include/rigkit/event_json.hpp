#pragma once

#include "json.hpp"
#include <ostream>
#include <span>

#include "rigkit/audit_parser.hpp"
#include "rigkit/syscall_table.hpp"

namespace rigkit {

/// Stable field order: timestamp, serial, syscall, [syscall_name], pid, ppid,
/// uid, exe, cwd, paths, execve_args, sockaddr.
nlohmann::ordered_json event_to_json(const AuditEvent& e, const SyscallTable* table = nullptr);
AuditEvent event_from_json(const nlohmann::ordered_json& j);

/// One compact JSON object per line.
void write_ndjson(std::ostream& out, std::span<const AuditEvent> events,
                  const SyscallTable* table = nullptr);

}  // namespace rigkit
