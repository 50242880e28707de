#pragma once

#include <string>
#include <string_view>

#include "rigkit/audit_parser.hpp"
#include "rigkit/syscall_table.hpp"

namespace fixtures {

// Privilege-escalation sample event in the split layout: a continuation
// line and key-less follow-up records.
inline constexpr std::string_view kSampleEvent =
    "type=SYSCALL msg=audit(1632851805.333:76118):\n"
    "    syscall=59 ppid=12261 pid=12272 uid=0 comm=\"escape.sh\" exe=\"/bin/busybox\"\n"
    "type=EXECVE: argc=2 a0=\"/bin/sh\" a1=\"/escape.sh\"\n"
    "type=CWD: cwd=\"/privesc\"\n"
    "type=PATH: name=\"/escape.sh\" inode=667188\n"
    "type=PATH: name=\"/bin/sh\" inode=65711\n"
    "type=PATH: name=\"/lib/ld-musl-x86_64.so.1\" inode=65873\n"
    "type=PROCTITLE: proctitle=72756E6300696E6974\n";

inline const rigkit::SyscallTable& x64() {
  static const rigkit::SyscallTable table = rigkit::builtin_syscall_table("x86-64");
  return table;
}

/// One self-contained SYSCALL event in regular auditd layout.
inline std::string syscall_line(std::string_view stamp, int serial, int syscall, std::string_view pid,
                                std::string_view ppid, std::string_view uid, std::string_view exe) {
  return "type=SYSCALL msg=audit(" + std::string(stamp) + ":" + std::to_string(serial) +
         "): arch=c000003e syscall=" + std::to_string(syscall) + " success=yes exit=0 ppid=" + std::string(ppid) +
         " pid=" + std::string(pid) + " auid=0 uid=" + std::string(uid) + " comm=\"x\" exe=\"" + std::string(exe) +
         "\"\n";
}

inline std::string path_line(std::string_view stamp, int serial, std::string_view name) {
  return "type=PATH msg=audit(" + std::string(stamp) + ":" + std::to_string(serial) + "): item=0 name=\"" +
         std::string(name) + "\" inode=1\n";
}

}  // namespace fixtures
