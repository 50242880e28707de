#!/usr/bin/env python3
"""Regenerates src/syscall_tables.cpp from the kernel uapi unistd headers."""
import re
import sys
from pathlib import Path

HEADERS = {
    "x86-32": "unistd_32.h",
    "x86-64": "unistd_64.h",
}
PATTERN = re.compile(r"#define\s+(__NR_\w+)\s+(\d+)")


def main(include_dir: str, out_path: str) -> None:
    out = [
        "// Generated by tools/gen_syscall_tables.py; do not edit.",
        '#include "syscall_tables.hpp"',
        "",
        "namespace rigkit::detail {",
        "",
    ]
    for name, header in HEADERS.items():
        rows = PATTERN.findall((Path(include_dir) / header).read_text())
        ident = "k" + name.replace("-", "_").replace("x86_", "X86_") + "Rows"
        out.append(f"const std::vector<SyscallRow> {ident} = {{")
        for sym, num in sorted(rows, key=lambda r: int(r[1])):
            out.append(f'    {{"{sym}", {num}}},')
        out.append("};")
        out.append("")
    out.append("}  // namespace rigkit::detail")
    Path(out_path).write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "/usr/include/x86_64-linux-gnu/asm",
         sys.argv[2] if len(sys.argv) > 2 else "src/syscall_tables.cpp")
