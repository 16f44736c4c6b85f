#include "divrank/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "divrank/errors.hpp"

namespace divrank::io {

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return slurp(in);
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

// Lines with comments and surrounding blanks removed; empty lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

std::vector<Chips> parse_integers(const std::string& line, const char* what) {
    std::vector<Chips> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        Chips value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw InputError(std::string("malformed ") + what + " entry '" + token + "'");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<Chips> single_row(const std::string& text, const char* what) {
    auto lines = content_lines(text);
    if (lines.size() != 1) {
        throw InputError(std::string(what) + " file must contain exactly one line of integers");
    }
    return parse_integers(lines.front(), what);
}

std::vector<Chips> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an integer array");
    std::vector<Chips> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InputError(std::string(what) + " must be an integer array");
        out.push_back(e.get<Chips>());
    }
    return out;
}

json roles_json(const std::vector<VertexRole>& roles) {
    json out = json::array();
    for (const auto& r : roles) out.push_back(r.tag());
    return out;
}

}  // namespace

Multigraph graph_from_json(const json& j) {
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<Chips>() < 0) {
        throw InputError("graph JSON needs a nonnegative integer \"n\"");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            auto triple = int_array(e, "edge");
            if (triple.size() != 3 || triple[0] < 0 || triple[1] < 0 || triple[2] < 1) {
                throw InputError("edges must be [u, v, m] with m >= 1");
            }
            edges.push_back({static_cast<VertexId>(triple[0]), static_cast<VertexId>(triple[1]), triple[2]});
        }
    }
    return Multigraph(n, edges);
}

Divisor divisor_from_json(const json& j) {
    if (j.is_array()) return Divisor(int_array(j, "chips"));
    if (!j.is_object() || !j.contains("chips")) throw InputError("divisor JSON needs \"chips\"");
    return Divisor(int_array(j.at("chips"), "chips"));
}

Multigraph parse_graph(const std::string& text) {
    if (looks_like_json(text)) return graph_from_json(parse_json(text));
    auto lines = content_lines(text);
    if (lines.empty()) throw InputError("graph file is empty");
    auto header = parse_integers(lines.front(), "vertex count");
    if (header.size() != 1 || header[0] < 0) {
        throw InputError("graph file must start with the vertex count");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto row = parse_integers(lines[i], "edge");
        if (row.size() != 3 || row[0] < 0 || row[1] < 0 || row[2] < 1) {
            throw InputError("graph line " + std::to_string(i + 1) + " must be 'u v m' with m >= 1");
        }
        edges.push_back({static_cast<VertexId>(row[0]), static_cast<VertexId>(row[1]), row[2]});
    }
    return Multigraph(static_cast<std::size_t>(header[0]), edges);
}

Multigraph parse_graph(std::istream& in) { return parse_graph(slurp(in)); }
Multigraph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Divisor parse_divisor(const std::string& text) {
    if (looks_like_json(text)) return divisor_from_json(parse_json(text));
    return Divisor(single_row(text, "divisor"));
}

Divisor parse_divisor(std::istream& in) { return parse_divisor(slurp(in)); }
Divisor read_divisor_file(const std::string& path) { return parse_divisor(read_file(path)); }

Thresholds parse_thresholds(const std::string& text) {
    std::vector<Chips> tau;
    if (looks_like_json(text)) {
        json j = parse_json(text);
        tau = int_array(j.is_object() && j.contains("tau") ? j.at("tau") : j, "tau");
    } else {
        tau = single_row(text, "thresholds");
    }
    for (Chips t : tau) {
        if (t < 0) throw InputError("thresholds must be nonnegative");
    }
    return Thresholds(std::move(tau));
}

Thresholds parse_thresholds(std::istream& in) { return parse_thresholds(slurp(in)); }
Thresholds read_thresholds_file(const std::string& path) { return parse_thresholds(read_file(path)); }

std::string graph_text(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.mult) + "\n";
    }
    return out;
}

std::string divisor_text(const Divisor& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f[i]);
    }
    return out + "\n";
}

json to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

json to_json(const Divisor& f) { return {{"chips", f.vector()}}; }

json to_json(const GameTrace& t) {
    return {{"order", t.order}, {"counts", t.counts}, {"final", t.final.vector()}};
}

json to_json(const DistanceResult& r) {
    return {{"value", r.value}, {"witness", r.witness.vector()}};
}

json to_json(const TargetSet& s) { return s.members; }

json to_json(const oracles::OracleReport& r) {
    return {{"quantity", r.quantity},
            {"pipeline", r.pipeline},
            {"oracle", r.oracle},
            {"relation", r.relation == oracles::Relation::Equal ? "eq" : "gt"},
            {"agrees", r.agrees},
            {"fingerprint", r.fingerprint}};
}

json to_json(const TssToRecInstance& inst) {
    return {{"graph", to_json(inst.gprime)},
            {"chips", inst.x.vector()},
            {"N", inst.N},
            {"M", nullptr},
            {"roles", roles_json(inst.roles)}};
}

json to_json(const RecToNonhaltInstance& inst) {
    return {{"graph", to_json(inst.gpp)},
            {"chips", inst.fpp.vector()},
            {"N", nullptr},
            {"M", inst.M},
            {"new_vertex", inst.new_vertex},
            {"roles", roles_json(inst.roles)}};
}

json to_json(const TssToNonhaltInstance& inst) {
    auto roles = inst.first.roles;
    roles.push_back(VertexRole::apex());
    return {{"graph", to_json(inst.second.gpp)},
            {"chips", inst.second.fpp.vector()},
            {"N", inst.first.N},
            {"M", inst.second.M},
            {"new_vertex", inst.second.new_vertex},
            {"roles", roles_json(roles)}};
}

json to_json(const SubdividedInstance& inst) {
    return {{"graph", to_json(inst.graph)},
            {"chips", inst.divisor.vector()},
            {"N", nullptr},
            {"M", nullptr},
            {"roles", roles_json(inst.roles)}};
}

}  // namespace divrank::io
