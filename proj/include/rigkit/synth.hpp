#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigkit/labeler.hpp"

namespace rigkit {

enum class AttackKind { None, DosLike, PrivescLike };

std::string_view to_string(AttackKind kind);  // "none", "dos_like", "privesc_like"
std::optional<AttackKind> parse_attack_kind(std::string_view name);

/// One background workload. Persistent profiles keep `workers` processes
/// alive and cycle through open/read/close over their files and connect/write
/// over their sockets, with `jitter` of the operations replaced by a stat of
/// a random pool file. Short-lived profiles spawn a child from one parent
/// process at every tick; the child runs `exe` with `files` as arguments and
/// exits.
struct BackgroundProfile {
  std::string name;
  std::string user;
  std::string exe;
  /// Parent executable of short-lived children.
  std::string parent_exe = "/usr/sbin/cron";
  std::vector<std::string> files;
  std::vector<std::string> sockets;  // "a.b.c.d:port"
  double rate = 1.0;                 // events (or spawns) per second
  bool short_lived = false;
  int workers = 1;
  double jitter = 0.1;
};

struct ScenarioSpec {
  std::string name = "scenario";
  double duration = 300;  // seconds
  double epoch = 1632851000.0;
  std::vector<BackgroundProfile> profiles;
  AttackKind attack = AttackKind::None;
  /// Offset from `epoch`; nullopt draws it from [0.4, 0.7] of the duration.
  std::optional<double> attack_start;
  /// Multiplies the number of attack steps.
  int attack_scale = 1;
  /// Share of emitted events that are not SYSCALL events.
  double other_fraction = 0.03;
  std::uint64_t seed = 7;
};

/// Three containers (web server, database, health-check cron with
/// short-lived children) running for five minutes.
ScenarioSpec default_scenario(AttackKind attack, std::uint64_t seed);

nlohmann::ordered_json spec_to_json(const ScenarioSpec& spec);
/// Missing keys keep their defaults; throws DataError on invalid values.
ScenarioSpec spec_from_json(const nlohmann::json& j);

struct GeneratedLog {
  std::string text;
  std::optional<AttackWindow> window;
  std::size_t syscall_events = 0;
  std::size_t other_events = 0;
  std::size_t attack_events = 0;
};

/// Deterministic: identical scenarios give identical bytes.
GeneratedLog generate(const ScenarioSpec& spec);

}  // namespace rigkit
