#include "flowgame/instance.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace flowgame {

namespace {
using ordered_json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;
}  // namespace

int Instance::node_index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == name) return static_cast<int>(i);
  return -1;
}

int Instance::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  return -1;
}

int Instance::player_index(const std::string& id) const {
  for (std::size_t i = 0; i < players.size(); ++i)
    if (players[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> Instance::out_edges(int node) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].tail == node) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Instance::in_edges(int node) const {
  std::vector<int> in;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].head == node) in.push_back(static_cast<int>(i));
  return in;
}

double Instance::total_supply() const {
  double d = 0.0;
  for (const auto& p : players) d += p.rate;
  return d;
}

double Instance::total_capacity() const {
  double nu = 0.0;
  for (const auto& e : edges) nu += e.capacity;
  return nu;
}

namespace {

bool reaches(const Instance& inst, int from, int to) {
  if (from == to) return true;
  std::vector<char> seen(inst.nodes.size(), 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& e : inst.edges) {
      if (e.tail == v && e.head >= 0 && !seen[e.head]) {
        if (e.head == to) return true;
        seen[e.head] = 1;
        queue.push_back(e.head);
      }
    }
  }
  return false;
}

InstanceKind classify(const Instance& inst) {
  if (inst.players.empty()) return InstanceKind::General;
  int s = inst.players.front().origin;
  int t = inst.players.front().destination;
  for (const auto& p : inst.players)
    if (p.origin != s || p.destination != t) return InstanceKind::General;
  for (const auto& e : inst.edges)
    if (e.tail != s || e.head != t) return InstanceKind::General;
  return InstanceKind::Parallel;
}

}  // namespace

ValidationOutcome validate_instance(const Instance& raw) {
  ValidationOutcome out;
  auto flag = [&](Errc c, const std::string& subject, const std::string& msg) {
    out.violations.push_back({c, subject, msg});
  };

  std::set<std::string> seen;
  for (const auto& n : raw.nodes)
    if (!seen.insert(n).second) flag(Errc::DuplicateId, n, "duplicate node id");
  seen.clear();
  for (const auto& e : raw.edges)
    if (!seen.insert(e.id).second) flag(Errc::DuplicateId, e.id, "duplicate edge id");
  seen.clear();
  for (const auto& p : raw.players)
    if (!seen.insert(p.id).second) flag(Errc::DuplicateId, p.id, "duplicate player id");

  int n = static_cast<int>(raw.nodes.size());
  for (const auto& e : raw.edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      flag(Errc::UnknownNode, e.id, "edge endpoint is not a declared node");
    if (!(e.capacity > 0.0))
      flag(Errc::NonPositiveCapacity, e.id, "capacity must be positive");
    if (e.transit < 0.0) flag(Errc::NegativeTransit, e.id, "transit time must be nonnegative");
  }
  for (const auto& p : raw.players) {
    if (p.origin < 0 || p.origin >= n || p.destination < 0 || p.destination >= n) {
      flag(Errc::UnknownNode, p.id, "player terminal is not a declared node");
      continue;
    }
    if (!(p.rate > 0.0)) flag(Errc::NonPositiveSupply, p.id, "supply rate must be positive");
    if (!reaches(raw, p.origin, p.destination))
      flag(Errc::UnreachableDestination, p.id, "destination unreachable from origin");
  }
  if (!(raw.horizon > 0.0)) flag(Errc::NonPositiveHorizon, "horizon", "horizon must be positive");

  InstanceKind kind = classify(raw);
  if (kind == InstanceKind::General) {
    for (const auto& e : raw.edges)
      if (e.transit == 0.0)
        flag(Errc::ZeroTransitOnGeneral, e.id,
             "zero transit time is only permitted on parallel-edge instances");
  }

  if (out.ok()) {
    out.instance = raw;
    out.instance->kind = kind;
  }
  return out;
}

Instance validate_or_throw(const Instance& raw) {
  ValidationOutcome out = validate_instance(raw);
  if (!out.ok()) {
    const Violation& v = out.violations.front();
    fail(v.code, v.subject + ": " + v.message);
  }
  return *out.instance;
}

namespace {

double require_number(const ordered_json& j, const std::string& field, const std::string& ctx) {
  if (!j.contains(field) || !j[field].is_number())
    fail(Errc::ParseError, ctx + ": missing or non-numeric field '" + field + "'");
  return j[field].get<double>();
}

std::string require_string(const ordered_json& j, const std::string& field,
                           const std::string& ctx) {
  if (!j.contains(field) || !j[field].is_string())
    fail(Errc::ParseError, ctx + ": missing or non-string field '" + field + "'");
  return j[field].get<std::string>();
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  if (!j.is_object()) fail(Errc::ParseError, origin + ": top level must be an object");
  if (!j.contains("version") || !j["version"].is_number_integer())
    fail(Errc::ParseError, origin + ": missing integer field 'version'");
  if (j["version"].get<int>() != kSchemaVersion)
    fail(Errc::SchemaVersionMismatch,
         origin + ": unsupported instance schema version " + j["version"].dump());

  Instance inst;
  inst.horizon = require_number(j, "horizon", origin);
  if (!j.contains("nodes") || !j["nodes"].is_array())
    fail(Errc::ParseError, origin + ": missing array field 'nodes'");
  for (const auto& nj : j["nodes"]) {
    if (!nj.is_string()) fail(Errc::ParseError, origin + ": node ids must be strings");
    inst.nodes.push_back(nj.get<std::string>());
  }
  if (j.contains("edges")) {
    for (const auto& ej : j["edges"]) {
      Edge e;
      e.id = require_string(ej, "id", origin + " edge");
      std::string tail = require_string(ej, "tail", origin + " edge " + e.id);
      std::string head = require_string(ej, "head", origin + " edge " + e.id);
      e.tail = inst.node_index(tail);
      e.head = inst.node_index(head);
      if (e.tail < 0)
        fail(Errc::ParseError, origin + " edge " + e.id + ": unknown tail node '" + tail + "'");
      if (e.head < 0)
        fail(Errc::ParseError, origin + " edge " + e.id + ": unknown head node '" + head + "'");
      e.transit = require_number(ej, "transit", origin + " edge " + e.id);
      e.capacity = require_number(ej, "capacity", origin + " edge " + e.id);
      inst.edges.push_back(std::move(e));
    }
  }
  if (j.contains("players")) {
    for (const auto& pj : j["players"]) {
      Player p;
      p.id = require_string(pj, "id", origin + " player");
      std::string o = require_string(pj, "origin", origin + " player " + p.id);
      std::string d = require_string(pj, "destination", origin + " player " + p.id);
      p.origin = inst.node_index(o);
      p.destination = inst.node_index(d);
      if (p.origin < 0)
        fail(Errc::ParseError, origin + " player " + p.id + ": unknown origin '" + o + "'");
      if (p.destination < 0)
        fail(Errc::ParseError, origin + " player " + p.id + ": unknown destination '" + d + "'");
      p.rate = require_number(pj, "rate", origin + " player " + p.id);
      inst.players.push_back(std::move(p));
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), path);
}

std::string serialize_instance(const Instance& inst) {
  // Canonical form: fixed field order, arrays sorted by id.
  ordered_json j;
  j["version"] = kSchemaVersion;
  j["horizon"] = inst.horizon;
  std::vector<std::string> nodes = inst.nodes;
  std::sort(nodes.begin(), nodes.end());
  j["nodes"] = nodes;

  std::vector<Edge> edges = inst.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  j["edges"] = ordered_json::array();
  for (const auto& e : edges) {
    ordered_json ej;
    ej["id"] = e.id;
    ej["tail"] = inst.nodes.at(e.tail);
    ej["head"] = inst.nodes.at(e.head);
    ej["transit"] = e.transit;
    ej["capacity"] = e.capacity;
    j["edges"].push_back(std::move(ej));
  }

  std::vector<Player> players = inst.players;
  std::sort(players.begin(), players.end(),
            [](const Player& a, const Player& b) { return a.id < b.id; });
  j["players"] = ordered_json::array();
  for (const auto& p : players) {
    ordered_json pj;
    pj["id"] = p.id;
    pj["origin"] = inst.nodes.at(p.origin);
    pj["destination"] = inst.nodes.at(p.destination);
    pj["rate"] = p.rate;
    j["players"].push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write instance file '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace flowgame
