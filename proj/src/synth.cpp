#include "rigkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "rigkit/random.hpp"

namespace rigkit {

namespace {

// x86-64 numbers.
constexpr int kRead = 0;
constexpr int kWrite = 1;
constexpr int kClose = 3;
constexpr int kStat = 4;
constexpr int kConnect = 42;
constexpr int kClone = 56;
constexpr int kExecve = 59;
constexpr int kChmod = 90;
constexpr int kMkdir = 83;
constexpr int kSetuid = 105;
constexpr int kMount = 165;
constexpr int kExitGroup = 231;
constexpr int kOpenat = 257;
constexpr int kFallocate = 285;

struct SynthEvent {
  std::int64_t ms = 0;
  std::uint64_t order = 0;
  int syscall = -1;  // -1: a standalone non-SYSCALL record
  std::string other_type;
  std::string other_body;
  std::string pid;
  std::string ppid;
  std::string uid;
  std::string exe;
  std::vector<std::string> paths;
  std::vector<std::string> args;
  std::string sockaddr;  // "ip:port"
  bool attack = false;
};

std::string hex_encode(std::string_view s) {
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

/// auditd quotes plain strings and hex-encodes anything with spaces, quotes
/// or control characters.
std::string audit_string(std::string_view s) {
  const bool plain = std::all_of(s.begin(), s.end(), [](unsigned char c) { return c > 0x20 && c < 0x7f && c != '"'; });
  if (plain && !s.empty()) return "\"" + std::string(s) + "\"";
  return hex_encode(s);
}

std::string sockaddr_hex(const std::string& endpoint) {
  const auto colon = endpoint.rfind(':');
  if (colon == std::string::npos) throw DataError("synth: socket '" + endpoint + "' is not ip:port");
  unsigned a, b, c, d, port;
  if (std::sscanf(endpoint.c_str(), "%u.%u.%u.%u", &a, &b, &c, &d) != 4 ||
      std::sscanf(endpoint.c_str() + colon + 1, "%u", &port) != 1 || a > 255 || b > 255 || c > 255 || d > 255 ||
      port > 65535) {
    throw DataError("synth: socket '" + endpoint + "' is not ip:port");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "0200%04X%02X%02X%02X%02X0000000000000000", port, a, b, c, d);
  return buf;
}

std::uint64_t inode_of(std::string_view path) {
  // FNV-1a, folded into a plausible inode range.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : path) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return 100000 + h % 9000000;
}

std::string basename_of(std::string_view path) {
  const auto slash = path.rfind('/');
  std::string base(slash == std::string_view::npos ? path : path.substr(slash + 1));
  return base.substr(0, 15);
}

std::string timestamp_text(std::int64_t ms) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%lld.%03lld", static_cast<long long>(ms / 1000), static_cast<long long>(ms % 1000));
  return buf;
}

class EventSink {
 public:
  explicit EventSink(int first_pid) : next_pid_(first_pid) {}

  std::string new_pid() { return std::to_string(next_pid_++); }

  SynthEvent& add(std::int64_t ms, int syscall, const std::string& pid, const std::string& ppid,
                  const std::string& uid, const std::string& exe) {
    SynthEvent e;
    e.ms = ms;
    e.order = order_++;
    e.syscall = syscall;
    e.pid = pid;
    e.ppid = ppid;
    e.uid = uid;
    e.exe = exe;
    events_.push_back(std::move(e));
    return events_.back();
  }

  SynthEvent& add_other(std::int64_t ms, std::string type, std::string body) {
    SynthEvent e;
    e.ms = ms;
    e.order = order_++;
    e.other_type = std::move(type);
    e.other_body = std::move(body);
    events_.push_back(std::move(e));
    return events_.back();
  }

  std::vector<SynthEvent>& events() { return events_; }

 private:
  std::vector<SynthEvent> events_;
  std::uint64_t order_ = 0;
  int next_pid_;
};

struct Op {
  int syscall;
  std::string file;
  std::string socket;
};

void persistent_profile(const BackgroundProfile& p, std::size_t index, std::int64_t begin, std::int64_t end,
                        EventSink& sink, Rng& rng) {
  std::vector<Op> ops;
  for (const std::string& f : p.files) {
    // Served content is checked for freshness before it is opened.
    if (f.starts_with("/var/www/")) ops.push_back({kStat, f, {}});
    ops.push_back({kOpenat, f, {}});
    ops.push_back({f.starts_with("/var/log/") ? kWrite : kRead, {}, {}});
    ops.push_back({kClose, {}, {}});
  }
  for (const std::string& s : p.sockets) {
    ops.push_back({kConnect, {}, s});
    ops.push_back({kWrite, {}, {}});
  }
  if (ops.empty()) ops.push_back({kRead, {}, {}});
  const std::string parent = sink.new_pid();
  std::vector<std::string> workers;
  for (int w = 0; w < std::max(1, p.workers); ++w) workers.push_back(sink.new_pid());

  std::int64_t t = begin + static_cast<std::int64_t>(index) * 7 + 1;
  for (std::size_t k = 0; t < end; ++k) {
    const std::string& pid = workers[k % workers.size()];
    Op op = ops[k % ops.size()];
    // The first pass over the pool is never perturbed, so every normal
    // resource is seen early.
    if (k >= ops.size() && !p.files.empty() && rng.uniform() < p.jitter) {
      op = {kStat, p.files[rng.index(p.files.size())], {}};
    }
    SynthEvent& e = sink.add(t, op.syscall, pid, parent, p.user, p.exe);
    if (!op.file.empty()) e.paths.push_back(op.file);
    if (!op.socket.empty()) e.sockaddr = op.socket;
    t += std::max<std::int64_t>(1, std::llround(rng.exponential(p.rate) * 1000.0));
  }
}

void short_lived_profile(const BackgroundProfile& p, std::size_t index, std::int64_t begin, std::int64_t end,
                         EventSink& sink, Rng& rng) {
  const std::string shim = sink.new_pid();
  const std::string parent = sink.new_pid();
  std::vector<std::string> args{p.exe};
  args.insert(args.end(), p.files.begin(), p.files.end());
  std::int64_t t = begin + static_cast<std::int64_t>(index) * 7 + 3;
  while (t < end) {
    const std::string child = sink.new_pid();
    sink.add(t, kClone, parent, shim, p.user, p.parent_exe);
    SynthEvent& ex = sink.add(t + 1, kExecve, child, parent, p.user, p.exe);
    ex.args = args;
    ex.paths = {p.exe};
    sink.add(t + 2 + static_cast<std::int64_t>(rng.index(20)), kExitGroup, child, parent, p.user, p.exe);
    t += std::max<std::int64_t>(25, std::llround(rng.exponential(p.rate) * 1000.0));
  }
}

/// Emits attack steps with short, seeded gaps.
class AttackScript {
 public:
  AttackScript(EventSink& sink, Rng& rng, std::int64_t start) : sink_(sink), rng_(rng), t_(start) {}

  SynthEvent& step(int syscall, const std::string& pid, const std::string& ppid, const std::string& exe,
                   std::vector<std::string> paths = {}) {
    if (count_ > 0) t_ += 5 + static_cast<std::int64_t>(rng_.index(40));
    SynthEvent& e = sink_.add(t_, syscall, pid, ppid, "0", exe);
    e.paths = std::move(paths);
    e.attack = true;
    ++count_;
    last_ = t_;
    return e;
  }

  /// clone from `parent`, then execve of `exe` in the new child.
  std::string spawn(const std::string& parent, const std::string& grandparent, const std::string& parent_exe,
                    const std::string& exe, std::vector<std::string> args) {
    step(kClone, parent, grandparent, parent_exe);
    const std::string child = sink_.new_pid();
    SynthEvent& e = step(kExecve, child, parent, exe, {exe});
    e.args = std::move(args);
    // Dynamic loader start-up.
    step(kOpenat, child, parent, exe, {"/etc/ld.so.cache"});
    step(kOpenat, child, parent, exe, {"/lib/x86_64-linux-gnu/libc.so.6"});
    return child;
  }

  std::int64_t first() const { return first_; }
  std::int64_t last() const { return last_; }
  std::size_t count() const { return count_; }

 private:
  EventSink& sink_;
  Rng& rng_;
  std::int64_t t_;
  std::int64_t first_ = t_;
  std::int64_t last_ = t_;
  std::size_t count_ = 0;
};

// Container breakout through a cgroup release_agent, followed by a burst of
// host processes that each create a file.
void dos_like(AttackScript& a, const std::string& entry, const std::string& entry_ppid, const std::string& entry_exe,
              int scale) {
  const std::string sh = "/bin/sh";
  const std::string a_pid = a.spawn(entry, entry_ppid, entry_exe, sh,
                                    {sh, "-c", "mkdir /tmp/cgrp && mount -t cgroup -o rdma cgroup /tmp/cgrp"});
  a.step(kMkdir, a_pid, entry, sh, {"/tmp/cgrp"});
  a.step(kMount, a_pid, entry, sh, {"/tmp/cgrp"});
  a.step(kMkdir, a_pid, entry, sh, {"/tmp/cgrp/x"});
  for (const char* f : {"/tmp/cgrp/x/notify_on_release", "/tmp/cgrp/release_agent", "/cmd"}) {
    a.step(kOpenat, a_pid, entry, sh, {f});
    a.step(kWrite, a_pid, entry, sh);
  }
  a.step(kChmod, a_pid, entry, sh, {"/cmd"});
  a.step(kOpenat, a_pid, entry, sh, {"/tmp/cgrp/x/cgroup.procs"});
  a.step(kWrite, a_pid, entry, sh);
  a.step(kExitGroup, a_pid, entry, sh);

  // The release agent runs on the host as a child of kthreadd.
  const std::string host = a.spawn("2", "0", "/usr/sbin/kthreadd", sh, {sh, "/cmd"});
  const std::string tool = "/usr/bin/fallocate";
  for (int i = 0; i < 14 * scale; ++i) {
    const std::string target = "/tmp/dos/f" + std::to_string(i);
    const std::string c = a.spawn(host, "2", sh, tool, {tool, "-l", "1G", target + "a", target + "b"});
    for (const char* suffix : {"a", "b"}) {
      a.step(kOpenat, c, host, tool, {target + suffix});
      a.step(kFallocate, c, host, tool);
    }
    a.step(kExitGroup, c, host, tool);
  }
}

// Mount of the host disk and an edit of its sudoers file.
void privesc_like(AttackScript& a, const std::string& entry, const std::string& entry_ppid,
                  const std::string& entry_exe, int scale) {
  const std::string sh = "/bin/sh";
  const std::string s = a.spawn(entry, entry_ppid, entry_exe, sh, {sh, "-i"});
  a.step(kSetuid, s, entry, sh);

  const std::string mount = "/bin/mount";
  const std::string m = a.spawn(s, entry, sh, mount, {mount, "/dev/sda1", "/mnt/host"});
  a.step(kMount, m, s, mount, {"/dev/sda1", "/mnt/host"});
  a.step(kExitGroup, m, s, mount);

  const std::string id = "/usr/bin/id";
  const std::string who = a.spawn(s, entry, sh, id, {id});
  a.step(kExitGroup, who, s, id);
  const std::string ls = "/bin/ls";
  const std::string l = a.spawn(s, entry, sh, ls, {ls, "/mnt/host/root"});
  a.step(kOpenat, l, s, ls, {"/mnt/host/root"});
  a.step(kExitGroup, l, s, ls);

  const std::string cat = "/bin/cat";
  for (int r = 0; r < scale; ++r) {
    for (const char* f : {"/mnt/host/etc/shadow", "/mnt/host/etc/passwd", "/mnt/host/etc/group"}) {
      const std::string c = a.spawn(s, entry, sh, cat, {cat, f});
      a.step(kOpenat, c, s, cat, {f});
      a.step(kRead, c, s, cat);
      a.step(kClose, c, s, cat);
      a.step(kExitGroup, c, s, cat);
    }
  }

  const std::string tee = "/usr/bin/tee";
  const std::string sudoers = "/mnt/host/etc/sudoers";
  const std::string t = a.spawn(s, entry, sh, tee, {tee, "-a", sudoers});
  a.step(kOpenat, t, s, tee, {sudoers});
  a.step(kWrite, t, s, tee);
  a.step(kChmod, t, s, tee, {sudoers});
  a.step(kClose, t, s, tee);
  a.step(kExitGroup, t, s, tee);
  a.step(kExitGroup, s, entry, sh);
}

const char* kOtherTypes[] = {"USER_ACCT", "CRED_ACQ", "LOGIN", "USER_START", "CRED_DISP", "USER_END"};

std::string render(const std::vector<SynthEvent>& events) {
  std::string out;
  out.reserve(events.size() * 400);
  std::uint64_t serial = 1000;
  for (const SynthEvent& e : events) {
    const std::string head = "msg=audit(" + timestamp_text(e.ms) + ":" + std::to_string(serial++) + "):";
    if (e.syscall < 0) {
      out += "type=" + e.other_type + " " + head + " " + e.other_body + "\n";
      continue;
    }
    const std::size_t items = e.paths.size();
    out += "type=SYSCALL " + head + " arch=c000003e syscall=" + std::to_string(e.syscall) +
           " success=yes exit=0 a0=3 a1=7ffd2c1e4a80 a2=0 a3=0 items=" + std::to_string(items) + " ppid=" + e.ppid +
           " pid=" + e.pid + " auid=4294967295 uid=" + e.uid + " gid=" + e.uid + " euid=" + e.uid +
           " suid=" + e.uid + " fsuid=" + e.uid + " egid=" + e.uid + " sgid=" + e.uid + " fsgid=" + e.uid +
           " tty=(none) ses=4294967295 comm=" + audit_string(basename_of(e.exe)) + " exe=" + audit_string(e.exe) +
           " key=(null)\n";
    if (!e.args.empty()) {
      out += "type=EXECVE " + head + " argc=" + std::to_string(e.args.size());
      for (std::size_t i = 0; i < e.args.size(); ++i) out += " a" + std::to_string(i) + "=" + audit_string(e.args[i]);
      out += "\n";
    }
    if (!e.sockaddr.empty()) out += "type=SOCKADDR " + head + " saddr=" + sockaddr_hex(e.sockaddr) + "\n";
    out += "type=CWD " + head + " cwd=\"/\"\n";
    for (std::size_t i = 0; i < items; ++i) {
      out += "type=PATH " + head + " item=" + std::to_string(i) + " name=" + audit_string(e.paths[i]) +
             " inode=" + std::to_string(inode_of(e.paths[i])) +
             " dev=fd:00 mode=0100644 ouid=0 ogid=0 rdev=00:00 nametype=NORMAL cap_fp=0 cap_fi=0 cap_fe=0 cap_fver=0\n";
    }
    out += "type=PROCTITLE " + head + " proctitle=" + hex_encode(e.args.empty() ? e.exe : e.args.front()) + "\n";
    out += "type=EOE " + head + "\n";
  }
  return out;
}

}  // namespace

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::None: return "none";
    case AttackKind::DosLike: return "dos_like";
    case AttackKind::PrivescLike: return "privesc_like";
  }
  return "none";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) {
  if (name == "none") return AttackKind::None;
  if (name == "dos_like" || name == "dos") return AttackKind::DosLike;
  if (name == "privesc_like" || name == "privesc") return AttackKind::PrivescLike;
  return std::nullopt;
}

ScenarioSpec default_scenario(AttackKind attack, std::uint64_t seed) {
  ScenarioSpec s;
  s.name = std::string(to_string(attack)) + "-" + std::to_string(seed);
  s.attack = attack;
  s.seed = seed;

  // Every dynamically linked program touches these.
  const std::vector<std::string> runtime = {"/etc/ld.so.cache", "/lib/x86_64-linux-gnu/libc.so.6",
                                            "/etc/localtime", "/etc/nsswitch.conf", "/etc/passwd"};
  auto with_runtime = [&](std::vector<std::string> files) {
    files.insert(files.begin(), runtime.begin(), runtime.end());
    return files;
  };
  const std::vector<std::string> site = {"/var/www/html/index.php", "/var/www/html/app.js",
                                         "/var/www/html/style.css", "/var/www/html/logo.png",
                                         "/var/www/html/api/status.json"};
  const std::vector<std::string> pgdata = {"/var/lib/postgresql/data/global/pg_control",
                                           "/var/lib/postgresql/data/base/16384/16385",
                                           "/var/lib/postgresql/data/base/16384/16402",
                                           "/var/lib/postgresql/data/pg_wal/000000010000000000000001",
                                           "/var/lib/postgresql/data/pg_xact/0000"};
  auto join = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::string dns = "172.17.0.1:53";
  auto persistent = [](std::string name, std::string user, std::string exe, std::vector<std::string> files,
                       std::vector<std::string> sockets, double rate, int workers) {
    BackgroundProfile p;
    p.name = std::move(name);
    p.user = std::move(user);
    p.exe = std::move(exe);
    p.files = std::move(files);
    p.sockets = std::move(sockets);
    p.rate = rate;
    p.workers = workers;
    p.jitter = 0.0;
    return p;
  };

  // Web container: nginx and php-fpm each run a root master and unprivileged
  // workers over the same configuration and site.
  const std::vector<std::string> nginx_conf = {"/etc/nginx/nginx.conf", "/etc/nginx/mime.types",
                                               "/var/log/nginx/error.log", "/run/nginx.pid"};
  const std::vector<std::string> php_conf = {"/etc/php/7.4/fpm/php.ini", "/etc/php/7.4/fpm/pool.d/www.conf",
                                             "/var/log/php7.4-fpm.log"};
  const auto nginx_master = persistent("nginx-master", "0", "/usr/sbin/nginx",
                                       with_runtime(join(nginx_conf, {"/etc/ssl/certs/site.pem"})), {dns}, 1.0, 1);
  const auto nginx = persistent("nginx", "33", "/usr/sbin/nginx",
                                with_runtime(join(join(nginx_conf, site), {"/etc/ssl/certs/site.pem"})),
                                {dns, "172.17.0.4:9000"}, 5.0, 2);
  const auto php_master = persistent("php-fpm-master", "0", "/usr/sbin/php-fpm7.4",
                                     with_runtime(join(php_conf, {"/etc/hosts"})), {dns, "172.17.0.4:9000"}, 1.0, 1);
  // One pool per site user.
  std::vector<BackgroundProfile> pools;
  for (const char* user : {"33", "1001", "1002"}) {
    pools.push_back(persistent(std::string("php-fpm-") + user, user, "/usr/sbin/php-fpm7.4",
                               with_runtime(join(join(php_conf, site), {"/etc/hosts"})),
                               {dns, "172.17.0.3:6432"}, 2.0, 2));
  }
  // Database container: postgres and its pooler share the socket directory
  // and access rules.
  const std::vector<std::string> pg_shared = {"/var/lib/postgresql/data/pg_hba.conf",
                                              "/var/run/postgresql/.s.PGSQL.5432.lock", "/etc/hosts"};
  const auto postgres = persistent("postgres", "999", "/usr/lib/postgresql/13/bin/postgres",
                                   with_runtime(join(join(pgdata, pg_shared), {"/var/lib/postgresql/data/postgresql.conf"})),
                                   {dns, "172.17.0.3:5432"}, 4.0, 3);
  const auto pooler = persistent("pgbouncer", "999", "/usr/sbin/pgbouncer",
                                 with_runtime(join(pg_shared, {"/var/lib/postgresql/data/postgresql.conf"})),
                                 {dns, "172.17.0.3:5432", "172.17.0.3:6432"}, 2.0, 1);
  const auto backup = persistent("pg-backup", "999", "/usr/lib/postgresql/13/bin/pg_basebackup",
                                 with_runtime(join(pgdata, {"/var/lib/postgresql/data/postgresql.conf"})),
                                 {dns, "172.17.0.3:5432"}, 0.5, 1);
  const auto pg_root = persistent("pgbouncer-admin", "0", "/usr/sbin/pgbouncer", with_runtime(pg_shared),
                                  {dns, "172.17.0.3:6432"}, 0.5, 1);
  // Health-check container: cron spawns a short-lived curl.
  BackgroundProfile cron;
  cron.name = "healthcheck";
  cron.user = "0";
  cron.exe = "/usr/bin/curl";
  cron.parent_exe = "/usr/sbin/cron";
  cron.files = {"/etc/hosts"};
  cron.rate = 0.5;
  cron.short_lived = true;

  // Rare maintenance jobs touch files nothing else opens.
  std::vector<BackgroundProfile> jobs;
  auto job = [&](std::string name, std::string exe, std::vector<std::string> files) {
    BackgroundProfile p = cron;
    p.name = std::move(name);
    p.exe = std::move(exe);
    p.files = std::move(files);
    p.rate = 0.01;
    jobs.push_back(std::move(p));
  };
  job("logrotate", "/usr/sbin/logrotate", {"/etc/logrotate.conf", "/var/lib/logrotate/status"});
  job("apt-daily", "/usr/lib/apt/apt.systemd.daily", {"/etc/apt/apt.conf.d/10periodic"});
  job("mandb", "/usr/bin/mandb", {"/var/cache/man/index.db"});

  s.profiles = {nginx, nginx_master, php_master};
  s.profiles.insert(s.profiles.end(), pools.begin(), pools.end());
  s.profiles.insert(s.profiles.end(), {postgres, pooler, backup, pg_root, cron});
  s.profiles.insert(s.profiles.end(), jobs.begin(), jobs.end());
  return s;
}

nlohmann::ordered_json spec_to_json(const ScenarioSpec& spec) {
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  j["duration"] = spec.duration;
  j["epoch"] = spec.epoch;
  j["attack"] = to_string(spec.attack);
  j["attack_start"] = spec.attack_start ? nlohmann::ordered_json(*spec.attack_start) : nlohmann::ordered_json();
  j["attack_scale"] = spec.attack_scale;
  j["other_fraction"] = spec.other_fraction;
  j["seed"] = spec.seed;
  j["profiles"] = nlohmann::ordered_json::array();
  for (const BackgroundProfile& p : spec.profiles) {
    j["profiles"].push_back({{"name", p.name},
                             {"user", p.user},
                             {"exe", p.exe},
                             {"parent_exe", p.parent_exe},
                             {"files", p.files},
                             {"sockets", p.sockets},
                             {"rate", p.rate},
                             {"short_lived", p.short_lived},
                             {"workers", p.workers},
                             {"jitter", p.jitter}});
  }
  return j;
}

ScenarioSpec spec_from_json(const nlohmann::json& j) {
  ScenarioSpec s;
  try {
    s.name = j.value("name", s.name);
    s.duration = j.value("duration", s.duration);
    s.epoch = j.value("epoch", s.epoch);
    if (j.contains("attack")) {
      auto kind = parse_attack_kind(j.at("attack").get<std::string>());
      if (!kind) throw DataError("spec: unknown attack '" + j.at("attack").get<std::string>() + "'");
      s.attack = *kind;
    }
    if (j.contains("attack_start") && !j.at("attack_start").is_null()) s.attack_start = j.at("attack_start").get<double>();
    s.attack_scale = j.value("attack_scale", s.attack_scale);
    s.other_fraction = j.value("other_fraction", s.other_fraction);
    s.seed = j.value("seed", s.seed);
    if (j.contains("profiles")) {
      for (const auto& pj : j.at("profiles")) {
        BackgroundProfile p;
        p.name = pj.value("name", p.name);
        p.user = pj.at("user").get<std::string>();
        p.exe = pj.at("exe").get<std::string>();
        p.parent_exe = pj.value("parent_exe", p.parent_exe);
        p.files = pj.value("files", p.files);
        p.sockets = pj.value("sockets", p.sockets);
        p.rate = pj.value("rate", p.rate);
        p.short_lived = pj.value("short_lived", p.short_lived);
        p.workers = pj.value("workers", p.workers);
        p.jitter = pj.value("jitter", p.jitter);
        s.profiles.push_back(std::move(p));
      }
    } else {
      s.profiles = default_scenario(s.attack, s.seed).profiles;
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("spec: ") + e.what());
  }
  return s;
}

GeneratedLog generate(const ScenarioSpec& spec) {
  if (!(spec.duration > 0)) throw DataError("synth: duration must be positive");
  if (spec.attack_start && (*spec.attack_start < 0 || *spec.attack_start >= spec.duration)) {
    throw DataError("synth: attack_start must lie in [0, duration)");
  }
  if (!(spec.other_fraction >= 0 && spec.other_fraction < 1)) throw DataError("synth: other_fraction must be in [0,1)");
  if (spec.attack_scale < 1) throw DataError("synth: attack_scale must be at least 1");
  for (const BackgroundProfile& p : spec.profiles) {
    if (!(p.rate > 0)) throw DataError("synth: profile '" + p.name + "' needs a positive rate");
    if (p.user.empty() || p.exe.empty()) throw DataError("synth: profile '" + p.name + "' needs user and exe");
    for (const std::string& s : p.sockets) sockaddr_hex(s);
  }

  Rng root(spec.seed);
  const std::int64_t begin = std::llround(spec.epoch * 1000.0);
  const std::int64_t end = begin + std::llround(spec.duration * 1000.0);
  EventSink sink(1200);
  for (std::size_t i = 0; i < spec.profiles.size(); ++i) {
    Rng rng = root.fork(i + 1);
    if (spec.profiles[i].short_lived) {
      short_lived_profile(spec.profiles[i], i, begin, end, sink, rng);
    } else {
      persistent_profile(spec.profiles[i], i, begin, end, sink, rng);
    }
  }

  GeneratedLog out;
  if (spec.attack != AttackKind::None) {
    Rng rng = root.fork(1000);
    const double offset = spec.attack_start ? *spec.attack_start : spec.duration * rng.uniform(0.4, 0.7);
    // The entry point is the first worker of the first persistent profile.
    std::string entry = "1";
    std::string entry_ppid = "0";
    std::string entry_exe = "/sbin/init";
    for (const SynthEvent& e : sink.events()) {
      if (e.syscall != kClone && e.syscall != kExecve && e.syscall != kExitGroup) {
        entry = e.pid;
        entry_ppid = e.ppid;
        entry_exe = e.exe;
        break;
      }
    }
    AttackScript a(sink, rng, begin + std::llround(offset * 1000.0));
    if (spec.attack == AttackKind::DosLike) {
      dos_like(a, entry, entry_ppid, entry_exe, spec.attack_scale);
    } else {
      privesc_like(a, entry, entry_ppid, entry_exe, spec.attack_scale);
    }
    out.attack_events = a.count();
    AttackWindow w;
    w.start = Timestamp{a.first()};
    w.duration_ms = std::max<std::int64_t>(1, a.last() - a.first());
    out.window = w;
  }

  std::size_t syscalls = 0;
  for (const SynthEvent& e : sink.events()) syscalls += e.syscall >= 0;
  const auto others = static_cast<std::size_t>(
      std::llround(static_cast<double>(syscalls) * spec.other_fraction / (1.0 - spec.other_fraction)));
  Rng noise = root.fork(2000);
  for (std::size_t i = 0; i < others; ++i) {
    const auto t = begin + static_cast<std::int64_t>(noise.index(static_cast<std::size_t>(end - begin)));
    const char* type = kOtherTypes[noise.index(std::size(kOtherTypes))];
    sink.add_other(t, type,
                   "pid=" + std::to_string(700 + noise.index(200)) +
                       " uid=0 auid=4294967295 ses=4294967295 msg='op=PAM:session acct=\"root\" "
                       "exe=\"/usr/sbin/cron\" hostname=? addr=? terminal=cron res=success'");
  }

  std::vector<SynthEvent>& events = sink.events();
  std::sort(events.begin(), events.end(),
            [](const SynthEvent& a, const SynthEvent& b) { return std::tie(a.ms, a.order) < std::tie(b.ms, b.order); });
  out.syscall_events = syscalls;
  out.other_events = others;
  out.text = render(events);
  return out;
}

}  // namespace rigkit
