#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "respec/core.hpp"

namespace respec {

// Application control-flow graph: basic-block entry addresses plus the
// edges between them. Ordered containers keep the writer output canonical.
struct CfgModel {
    std::set<Address> nodes;
    std::set<std::pair<Address, Address>> edges;
    Address entry = 0;

    bool has_node(Address a) const { return nodes.count(a) != 0; }
    bool has_edge(Address from, Address to) const {
        return edges.count({from, to}) != 0;
    }

    bool operator==(const CfgModel&) const = default;
};

// Validates entry/edge membership; throws ConfigError.
CfgModel make_cfg(Address entry, std::vector<Address> nodes,
                  std::vector<std::pair<Address, Address>> edges);

// A concrete executed sequence of branch destinations. Traces built to model
// control-flow hijacks are tagged at construction.
struct Trace {
    std::vector<Address> destinations;
    bool attack = false;

    bool operator==(const Trace&) const = default;
};

struct CfgVerdict {
    bool valid = true;
    std::size_t first_violation_index = 0;  // meaningful only when !valid
};

// Valid iff (entry -> t[0]) is an edge and every consecutive pair is an
// edge. Empty traces are vacuously valid.
CfgVerdict cfg_check_trace(const CfgModel& cfg, const Trace& trace);

// Text formats:
//   CFG file:   lines `node <hex32>`, `edge <hex32> <hex32>`, `entry <hex32>`;
//               `#` starts a comment.
//   Trace file: one hex32 destination per line, execution order.
CfgModel parse_cfg(const std::string& text);
std::string write_cfg(const CfgModel& cfg);
Trace parse_trace(const std::string& text);
std::string write_trace(const Trace& trace);

CfgModel load_cfg_file(const std::string& path);
Trace load_trace_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

}  // namespace respec
