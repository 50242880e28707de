#include "rigkit/event_json.hpp"

namespace rigkit {

nlohmann::ordered_json event_to_json(const AuditEvent& e, const SyscallTable* table) {
  nlohmann::ordered_json j;
  j["timestamp"] = e.timestamp.seconds();
  j["serial"] = e.serial;
  j["syscall"] = e.syscall;
  if (table != nullptr) {
    if (auto name = table->name(e.syscall)) j["syscall_name"] = std::string(*name);
  }
  j["pid"] = e.pid;
  j["ppid"] = e.ppid;
  j["uid"] = e.uid;
  j["exe"] = e.exe;
  j["cwd"] = e.cwd ? nlohmann::ordered_json(*e.cwd) : nlohmann::ordered_json(nullptr);
  auto paths = nlohmann::ordered_json::array();
  for (const auto& p : e.paths) {
    nlohmann::ordered_json pj;
    pj["name"] = p.name;
    pj["inode"] = p.inode;
    paths.push_back(std::move(pj));
  }
  j["paths"] = std::move(paths);
  j["execve_args"] = e.execve_args;
  if (e.sockaddr) {
    nlohmann::ordered_json sj;
    sj["family"] = e.sockaddr->family;
    sj["address"] = e.sockaddr->address;
    j["sockaddr"] = std::move(sj);
  } else {
    j["sockaddr"] = nullptr;
  }
  return j;
}

AuditEvent event_from_json(const nlohmann::ordered_json& j) {
  try {
    AuditEvent e;
    e.timestamp = Timestamp::from_seconds(j.at("timestamp").get<double>());
    e.serial = j.at("serial").get<std::uint64_t>();
    e.syscall = j.at("syscall").get<int>();
    e.pid = j.at("pid").get<std::string>();
    e.ppid = j.at("ppid").get<std::string>();
    e.uid = j.at("uid").get<std::string>();
    e.exe = j.at("exe").get<std::string>();
    if (!j.at("cwd").is_null()) e.cwd = j.at("cwd").get<std::string>();
    for (const auto& pj : j.at("paths")) {
      e.paths.push_back({pj.at("name").get<std::string>(), pj.at("inode").get<std::uint64_t>()});
    }
    e.execve_args = j.at("execve_args").get<std::vector<std::string>>();
    if (!j.at("sockaddr").is_null()) {
      const auto& sj = j.at("sockaddr");
      e.sockaddr = SocketAddress{sj.at("family").get<int>(), sj.at("address").get<std::string>()};
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("event json: ") + ex.what());
  }
}

void write_ndjson(std::ostream& out, std::span<const AuditEvent> events, const SyscallTable* table) {
  for (const auto& e : events) out << event_to_json(e, table).dump() << '\n';
}

}  // namespace rigkit
