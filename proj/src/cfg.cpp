#include "respec/cfg.hpp"

#include <fstream>
#include <sstream>

namespace respec {

CfgModel make_cfg(Address entry, std::vector<Address> nodes,
                  std::vector<std::pair<Address, Address>> edges) {
    CfgModel cfg;
    cfg.entry = entry;
    for (Address n : nodes) {
        if (!cfg.nodes.insert(n).second)
            throw ConfigError("duplicate node " + format_address(n));
    }
    if (!cfg.has_node(entry))
        throw ConfigError("entry " + format_address(entry) + " is not a node");
    for (const auto& [from, to] : edges) {
        if (!cfg.has_node(from) || !cfg.has_node(to))
            throw ConfigError("edge endpoint missing: " + format_address(from) +
                              " -> " + format_address(to));
        cfg.edges.insert({from, to});
    }
    return cfg;
}

CfgVerdict cfg_check_trace(const CfgModel& cfg, const Trace& trace) {
    const auto& d = trace.destinations;
    if (d.empty()) return {};
    if (!cfg.has_edge(cfg.entry, d[0])) return {false, 0};
    for (std::size_t i = 1; i < d.size(); ++i)
        if (!cfg.has_edge(d[i - 1], d[i])) return {false, i};
    return {};
}

namespace {

// strips comments and surrounding whitespace; empty result means skip
std::string clean_line(const std::string& raw) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (in >> field) out.push_back(field);
    return out;
}

}  // namespace

CfgModel parse_cfg(const std::string& text) {
    CfgModel cfg;
    bool have_entry = false;
    std::vector<std::pair<Address, Address>> pending_edges;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        const auto f = split_fields(line);
        const std::string where = " (line " + std::to_string(lineno) + ")";
        try {
            if (f[0] == "node" && f.size() == 2) {
                if (!cfg.nodes.insert(parse_address(f[1])).second)
                    throw ParseError("duplicate node " + f[1]);
            } else if (f[0] == "edge" && f.size() == 3) {
                pending_edges.emplace_back(parse_address(f[1]), parse_address(f[2]));
            } else if (f[0] == "entry" && f.size() == 2) {
                if (have_entry) throw ParseError("duplicate entry line");
                cfg.entry = parse_address(f[1]);
                have_entry = true;
            } else {
                throw ParseError("malformed line '" + line + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + where);
        }
    }

    if (!have_entry) throw ParseError("missing entry line");
    if (!cfg.has_node(cfg.entry))
        throw ParseError("entry " + format_address(cfg.entry) + " is not a node");
    for (const auto& [from, to] : pending_edges) {
        if (!cfg.has_node(from) || !cfg.has_node(to))
            throw ParseError("edge endpoint missing: " + format_address(from) +
                             " -> " + format_address(to));
        cfg.edges.insert({from, to});
    }
    return cfg;
}

std::string write_cfg(const CfgModel& cfg) {
    std::string out;
    out += "entry " + format_address(cfg.entry) + "\n";
    for (Address n : cfg.nodes) out += "node " + format_address(n) + "\n";
    for (const auto& [from, to] : cfg.edges)
        out += "edge " + format_address(from) + " " + format_address(to) + "\n";
    return out;
}

Trace parse_trace(const std::string& text) {
    Trace t;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        if (split_fields(line).size() != 1)
            throw ParseError("malformed trace line " + std::to_string(lineno));
        try {
            t.destinations.push_back(parse_address(line));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (line " +
                             std::to_string(lineno) + ")");
        }
    }
    return t;
}

std::string write_trace(const Trace& trace) {
    std::string out;
    for (Address a : trace.destinations) out += format_address(a) + "\n";
    return out;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

CfgModel load_cfg_file(const std::string& path) {
    return parse_cfg(load_text_file(path));
}

Trace load_trace_file(const std::string& path) {
    return parse_trace(load_text_file(path));
}

}  // namespace respec
