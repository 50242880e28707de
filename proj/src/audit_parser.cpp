#include "rigkit/audit_parser.hpp"

#include <arpa/inet.h>
#include <sys/socket.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <list>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rigkit {

RecordType record_type_from_name(std::string_view name) {
  if (name == "SYSCALL") return RecordType::Syscall;
  if (name == "EXECVE") return RecordType::Execve;
  if (name == "CWD") return RecordType::Cwd;
  if (name == "PATH") return RecordType::Path;
  if (name == "SOCKADDR") return RecordType::Sockaddr;
  if (name == "PROCTITLE") return RecordType::Proctitle;
  if (name == "EOE") return RecordType::Eoe;
  return RecordType::Other;
}

const std::string* AuditRecord::find(std::string_view name) const {
  for (const auto& [k, v] : fields) {
    if (k == name) return &v;
  }
  return nullptr;
}

namespace {

bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

bool is_hex_string(std::string_view s) {
  return !s.empty() && s.size() % 2 == 0 && std::all_of(s.begin(), s.end(), is_hex_digit);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  return std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
}

std::string hex_decode(std::string_view hex) {
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    out.push_back(static_cast<char>(hex_value(hex[i]) * 16 + hex_value(hex[i + 1])));
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

struct Token {
  std::string_view key;
  std::string_view value;
  bool quoted = false;
};

/// Splits `k=v k="v w" k='v'` into tokens. Bare words without '=' are dropped.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= n) break;
    std::size_t key_start = i;
    while (i < n && line[i] != '=' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= n || line[i] != '=') continue;  // bare word
    Token tok;
    tok.key = line.substr(key_start, i - key_start);
    ++i;
    if (i < n && (line[i] == '"' || line[i] == '\'')) {
      const char quote = line[i++];
      std::size_t value_start = i;
      while (i < n && line[i] != quote) ++i;
      tok.value = line.substr(value_start, i - value_start);
      tok.quoted = true;
      if (i < n) ++i;
    } else {
      std::size_t value_start = i;
      while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tok.value = line.substr(value_start, i - value_start);
    }
    if (!tok.key.empty()) tokens.push_back(tok);
  }
  return tokens;
}

bool is_execve_arg_key(std::string_view key) {
  if (key.size() < 2 || key[0] != 'a') return false;
  std::size_t i = 1;
  while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
  if (i == 1) return false;
  if (i == key.size()) return true;
  return key[i] == '[' && key.back() == ']';
}

/// auditd writes untrusted strings unquoted as hex.
bool hex_encoded_field(RecordType type, std::string_view key) {
  switch (type) {
    case RecordType::Syscall: return key == "exe" || key == "comm";
    case RecordType::Execve: return is_execve_arg_key(key);
    case RecordType::Cwd: return key == "cwd";
    case RecordType::Path: return key == "name";
    case RecordType::Proctitle: return key == "proctitle";
    default: return false;
  }
}

void append_fields(const std::vector<Token>& tokens, std::size_t first, RecordType type,
                   std::vector<std::pair<std::string, std::string>>& out) {
  for (std::size_t i = first; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    std::string value;
    if (!t.quoted && hex_encoded_field(type, t.key) && is_hex_string(t.value)) {
      value = hex_decode(t.value);
    } else {
      value = std::string(t.value);
    }
    out.emplace_back(std::string(t.key), std::move(value));
  }
}

std::optional<EventKey> parse_header(std::string_view value) {
  // audit(1632851805.333:76118):
  if (!value.starts_with("audit(")) return std::nullopt;
  value.remove_prefix(6);
  while (!value.empty() && value.back() == ':') value.remove_suffix(1);
  if (value.empty() || value.back() != ')') return std::nullopt;
  value.remove_suffix(1);
  const auto colon = value.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view stamp = value.substr(0, colon);
  std::string_view serial = value.substr(colon + 1);
  const auto dot = stamp.find('.');
  std::string_view secs = stamp.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : stamp.substr(dot + 1);
  auto s = parse_int<std::int64_t>(secs);
  auto ser = parse_int<std::uint64_t>(serial);
  if (!s || !ser || frac.size() > 9) return std::nullopt;
  std::int64_t millis = 0;
  if (!frac.empty()) {
    auto f = parse_int<std::int64_t>(frac);
    if (!f) return std::nullopt;
    std::int64_t scaled = *f;
    // Normalise any fraction width to milliseconds.
    for (std::size_t d = frac.size(); d < 3; ++d) scaled *= 10;
    for (std::size_t d = 3; d < frac.size(); ++d) scaled /= 10;
    millis = scaled;
  }
  return EventKey{Timestamp{*s * 1000 + millis}, *ser};
}

std::string hex_lower(const std::vector<unsigned char>& bytes, std::size_t from) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = from; i < bytes.size(); ++i) {
    out.push_back(kDigits[bytes[i] >> 4]);
    out.push_back(kDigits[bytes[i] & 0xF]);
  }
  return out;
}

}  // namespace

SocketAddress decode_sockaddr(std::string_view hex) {
  if (!is_hex_string(hex)) return {-1, "fam?:" + to_lower(hex)};
  std::vector<unsigned char> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    bytes.push_back(static_cast<unsigned char>(hex_value(hex[i]) * 16 + hex_value(hex[i + 1])));
  }
  const std::string truncated = "fam?:" + hex_lower(bytes, 0);
  if (bytes.size() < 2) return {-1, truncated};
  const int family = bytes[0] | (bytes[1] << 8);
  switch (family) {
    case AF_INET: {
      if (bytes.size() < 8) return {-1, truncated};
      const int port = (bytes[2] << 8) | bytes[3];
      std::ostringstream os;
      os << int(bytes[4]) << '.' << int(bytes[5]) << '.' << int(bytes[6]) << '.' << int(bytes[7])
         << ':' << port;
      return {family, os.str()};
    }
    case AF_INET6: {
      if (bytes.size() < 24) return {-1, truncated};
      const int port = (bytes[2] << 8) | bytes[3];
      char buf[INET6_ADDRSTRLEN] = {};
      inet_ntop(AF_INET6, bytes.data() + 8, buf, sizeof(buf));
      return {family, "[" + std::string(buf) + "]:" + std::to_string(port)};
    }
    case AF_UNIX: {
      std::string path;
      std::size_t i = 2;
      if (i < bytes.size() && bytes[i] == 0 && bytes.size() > 3) {
        path.push_back('@');  // abstract namespace
        ++i;
      }
      for (; i < bytes.size() && bytes[i] != 0; ++i) path.push_back(static_cast<char>(bytes[i]));
      return {family, "unix:" + path};
    }
    default:
      return {family, "fam" + std::to_string(family) + ":" + hex_lower(bytes, 2)};
  }
}

namespace {

/// Interpreted form: `saddr={ fam=inet laddr=127.0.0.1 lport=80 }`.
std::optional<SocketAddress> sockaddr_from_fields(const AuditRecord& rec) {
  const std::string* fam = rec.find("fam");
  if (fam == nullptr) return std::nullopt;
  auto get = [&](std::string_view k) {
    const std::string* v = rec.find(k);
    return v ? *v : std::string();
  };
  if (*fam == "inet") return SocketAddress{AF_INET, get("laddr") + ":" + get("lport")};
  if (*fam == "inet6") return SocketAddress{AF_INET6, "[" + get("laddr") + "]:" + get("lport")};
  if (*fam == "local" || *fam == "unix") return SocketAddress{AF_UNIX, "unix:" + get("path")};
  return SocketAddress{-1, "fam?:" + *fam};
}

}  // namespace

std::optional<ParsedLine> parse_record_line(std::string_view line, std::string* error) {
  auto fail = [&](std::string msg) -> std::optional<ParsedLine> {
    if (error) *error = std::move(msg);
    return std::nullopt;
  };
  const auto tokens = tokenize(line);
  if (tokens.empty() || tokens[0].key != "type") return fail("line does not start with type=");
  ParsedLine out;
  std::string_view type_name = tokens[0].value;
  while (!type_name.empty() && type_name.back() == ':') type_name.remove_suffix(1);
  if (type_name.empty()) return fail("empty record type");
  out.record.type_name = std::string(type_name);
  out.record.type = record_type_from_name(type_name);
  std::size_t first_field = 1;
  if (tokens.size() > 1 && tokens[1].key == "msg") {
    auto key = parse_header(tokens[1].value);
    if (!key) return fail("unparseable event header: " + std::string(tokens[1].value));
    out.record.key = *key;
    out.has_key = true;
    first_field = 2;
  }
  append_fields(tokens, first_field, out.record.type, out.record.fields);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct EventKeyHash {
  std::size_t operator()(const EventKey& k) const noexcept {
    return std::hash<std::int64_t>()(k.time.ms) * 1000003u ^ std::hash<std::uint64_t>()(k.serial);
  }
};

struct OpenEvent {
  std::vector<AuditRecord> records;
  std::size_t first_line = 0;
  std::list<EventKey>::iterator lru_pos;
};

}  // namespace

struct AuditStreamParser::Impl {
  const SyscallTable& table;
  Sink sink;
  std::size_t open_limit;

  std::list<EventKey> lru;  // front = most recently touched
  std::unordered_map<EventKey, OpenEvent, EventKeyHash> open;
  std::unordered_set<EventKey, EventKeyHash> closed;
  std::optional<EventKey> last_key;
  bool last_record_attached = false;

  std::vector<ParseWarning> warnings;
  std::size_t line_no = 0;
  std::size_t emitted = 0;
  std::size_t skipped = 0;
  bool finished = false;

  Impl(const SyscallTable& t, Sink s, std::size_t limit)
      : table(t), sink(std::move(s)), open_limit(std::max<std::size_t>(limit, 1)) {}

  void warn(std::string message) { warnings.push_back({line_no, std::move(message)}); }

  void attach(AuditRecord&& rec) {
    const EventKey key = rec.key;
    if (closed.contains(key)) {
      warn("record for an already closed event; dropped");
      last_record_attached = false;
      return;
    }
    auto it = open.find(key);
    if (it == open.end()) {
      lru.push_front(key);
      OpenEvent ev;
      ev.first_line = line_no;
      ev.lru_pos = lru.begin();
      it = open.emplace(key, std::move(ev)).first;
    } else {
      lru.splice(lru.begin(), lru, it->second.lru_pos);
    }
    const bool eoe = rec.type == RecordType::Eoe;
    it->second.records.push_back(std::move(rec));
    last_key = key;
    last_record_attached = true;
    if (eoe) {
      close(key);
    } else if (open.size() > open_limit) {
      close(lru.back());
    }
  }

  void close(const EventKey& key) {
    auto it = open.find(key);
    if (it == open.end()) return;
    OpenEvent ev = std::move(it->second);
    lru.erase(ev.lru_pos);
    open.erase(it);
    closed.insert(key);
    if (last_key && *last_key == key) last_record_attached = false;
    if (auto event = assemble(key, ev)) {
      ++emitted;
      sink(std::move(*event));
    } else {
      ++skipped;
    }
  }

  std::optional<AuditEvent> assemble(const EventKey& key, const OpenEvent& ev) {
    const AuditRecord* syscall_rec = nullptr;
    for (const auto& r : ev.records) {
      if (r.type == RecordType::Syscall) {
        syscall_rec = &r;
        break;
      }
    }
    if (syscall_rec == nullptr) return std::nullopt;

    AuditEvent e;
    e.timestamp = key.time;
    e.serial = key.serial;
    const std::string* sc = syscall_rec->find("syscall");
    std::optional<int> number;
    if (sc != nullptr) {
      number = parse_int<int>(*sc);
      if (!number) number = table.number(*sc);
    }
    if (!number || *number < 0) {
      warnings.push_back({ev.first_line, "event " + std::to_string(key.serial) +
                                             ": missing or unresolvable syscall; skipped"});
      return std::nullopt;
    }
    e.syscall = *number;
    auto copy = [&](const char* name, std::string& dst) {
      if (const std::string* v = syscall_rec->find(name)) dst = *v;
    };
    copy("pid", e.pid);
    copy("ppid", e.ppid);
    copy("uid", e.uid);
    copy("exe", e.exe);
    if (e.exe == "(null)") e.exe.clear();

    for (const auto& r : ev.records) {
      switch (r.type) {
        case RecordType::Execve: fold_execve(r, e); break;
        case RecordType::Cwd:
          if (const std::string* v = r.find("cwd")) e.cwd = *v;
          break;
        case RecordType::Path: {
          PathEntry p;
          if (const std::string* v = r.find("name")) p.name = (*v == "(null)") ? "" : *v;
          if (const std::string* v = r.find("inode")) p.inode = parse_int<std::uint64_t>(*v).value_or(0);
          e.paths.push_back(std::move(p));
          break;
        }
        case RecordType::Sockaddr: {
          const std::string* saddr = r.find("saddr");
          if (auto fields = sockaddr_from_fields(r)) {
            e.sockaddr = std::move(fields);
          } else if (saddr != nullptr) {
            e.sockaddr = decode_sockaddr(*saddr);
          }
          break;
        }
        default: break;
      }
    }
    return e;
  }

  static void fold_execve(const AuditRecord& r, AuditEvent& e) {
    std::map<int, std::string> whole;
    std::map<int, std::map<int, std::string>> pieces;
    for (const auto& [k, v] : r.fields) {
      if (!is_execve_arg_key(k)) continue;
      std::string_view key(k);
      key.remove_prefix(1);
      const auto bracket = key.find('[');
      auto idx = parse_int<int>(key.substr(0, bracket));
      if (!idx) continue;
      if (bracket == std::string_view::npos) {
        whole[*idx] = v;
      } else {
        auto part = parse_int<int>(key.substr(bracket + 1, key.size() - bracket - 2));
        if (part) pieces[*idx][*part] = v;
      }
    }
    for (auto& [idx, parts] : pieces) {
      std::string joined;
      for (auto& [_, s] : parts) joined += s;
      whole[idx] = std::move(joined);
    }
    e.execve_args.clear();
    for (auto& [_, arg] : whole) e.execve_args.push_back(arg);
  }

  void feed(std::string_view line) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    if (lead == line.size()) return;  // blank

    if (lead > 0 && !line.substr(lead).starts_with("type=")) {
      continuation(line.substr(lead));
      return;
    }
    std::string error;
    auto parsed = parse_record_line(line.substr(lead), &error);
    if (!parsed) {
      warn(error);
      last_record_attached = false;
      return;
    }
    if (!parsed->has_key) {
      // Abbreviated listings omit the header on follow-on records.
      if (!last_key || !open.contains(*last_key)) {
        warn("record without msg=audit(...) header and no open event");
        last_record_attached = false;
        return;
      }
      parsed->record.key = *last_key;
    }
    attach(std::move(parsed->record));
  }

  void continuation(std::string_view text) {
    if (!last_record_attached || !last_key) {
      warn("continuation line without an open record; skipped");
      return;
    }
    auto it = open.find(*last_key);
    if (it == open.end() || it->second.records.empty()) {
      warn("continuation line without an open record; skipped");
      return;
    }
    AuditRecord& rec = it->second.records.back();
    append_fields(tokenize(text), 0, rec.type, rec.fields);
  }

  void finish() {
    if (finished) return;
    finished = true;
    while (!lru.empty()) close(lru.back());
  }
};

AuditStreamParser::AuditStreamParser(const SyscallTable& table, Sink sink, std::size_t open_limit)
    : impl_(std::make_unique<Impl>(table, std::move(sink), open_limit)) {}

AuditStreamParser::~AuditStreamParser() = default;

void AuditStreamParser::feed_line(std::string_view line) {
  if (impl_->finished) throw std::logic_error("AuditStreamParser: feed after finish");
  impl_->feed(line);
}

void AuditStreamParser::finish() { impl_->finish(); }

const std::vector<ParseWarning>& AuditStreamParser::warnings() const { return impl_->warnings; }
std::size_t AuditStreamParser::emitted() const { return impl_->emitted; }
std::size_t AuditStreamParser::skipped() const { return impl_->skipped; }
std::size_t AuditStreamParser::distinct_keys() const {
  return impl_->closed.size() + impl_->open.size();
}

ParseResult parse_stream(std::istream& in, const SyscallTable& table) {
  ParseResult result;
  AuditStreamParser parser(table, [&](AuditEvent&& e) { result.events.push_back(std::move(e)); });
  std::string line;
  while (std::getline(in, line)) parser.feed_line(line);
  parser.finish();
  std::stable_sort(result.events.begin(), result.events.end(),
                   [](const AuditEvent& a, const AuditEvent& b) {
                     return std::tie(a.timestamp, a.serial) < std::tie(b.timestamp, b.serial);
                   });
  result.warnings = parser.warnings();
  result.skipped_events = parser.skipped();
  result.distinct_keys = parser.distinct_keys();
  return result;
}

ParseResult parse_text(std::string_view text, const SyscallTable& table) {
  std::istringstream in{std::string(text)};
  return parse_stream(in, table);
}

}  // namespace rigkit
