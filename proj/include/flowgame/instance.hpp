#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowgame/common.hpp"

namespace flowgame {

struct Edge {
  std::string id;
  int tail = -1;
  int head = -1;
  double transit = 0.0;   // tau_e
  double capacity = 0.0;  // nu_e
};

struct Player {
  std::string id;
  int origin = -1;       // s_j
  int destination = -1;  // t_j
  double rate = 0.0;     // d_j
};

enum class InstanceKind { Unclassified, General, Parallel };

struct Instance {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::vector<Player> players;
  double horizon = 0.0;
  InstanceKind kind = InstanceKind::Unclassified;

  int node_index(const std::string& name) const;  // -1 if absent
  int edge_index(const std::string& id) const;
  int player_index(const std::string& id) const;

  std::vector<int> out_edges(int node) const;
  std::vector<int> in_edges(int node) const;
  double total_supply() const;
  double total_capacity() const;
};

struct Violation {
  Errc code;
  std::string subject;  // offending id or node name
  std::string message;
};

struct ValidationOutcome {
  std::optional<Instance> instance;  // kind classified; present iff violations empty
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Classifies kind and checks all instance invariants. Never mutates or drops
// data; violations are returned, not thrown.
ValidationOutcome validate_instance(const Instance& raw);

// validate_instance, throwing the first violation as an Error.
Instance validate_or_throw(const Instance& raw);

Instance load_instance(const std::string& path);
Instance parse_instance(const std::string& text, const std::string& origin = "<string>");
void save_instance(const Instance& instance, const std::string& path);
std::string serialize_instance(const Instance& instance);  // canonical form

}  // namespace flowgame
