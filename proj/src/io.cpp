#include "cdg/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace cdg {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::int64_t require_int(const json& value, const std::string& field) {
    if (!value.is_number_integer()) throw InputError(field + ": expected an integer, got " + value.dump());
    return value.get<std::int64_t>();
}

const json& require_key(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

}  // namespace

GameInstance load_instance(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("instance: expected a JSON object");

    const auto k = require_int(require_key(doc, "k", "instance"), "k");
    if (k < 1 || k > std::numeric_limits<int>::max())
        throw InputError("k: player count must be at least 1, got " + std::to_string(k));
    const json& vertices = require_key(doc, "vertices", "instance");
    if (!vertices.is_array()) throw InputError("vertices: expected an array");
    const json& edges = require_key(doc, "edges", "instance");
    if (!edges.is_array()) throw InputError("edges: expected an array");

    const auto n = static_cast<int>(vertices.size());
    std::vector<Weight> weights(n);
    std::vector<std::optional<std::string>> names(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const json& vertex = vertices[i];
        if (!vertex.is_object()) throw InputError(where + ": expected an object");
        const auto id = require_int(require_key(vertex, "id", where), where + ".id");
        if (id < 0 || id >= n)
            throw InputError(where + ".id: " + std::to_string(id) + " outside 0.." + std::to_string(n - 1) +
                             " (ids must be dense)");
        if (seen[id]) throw InputError(where + ".id: duplicate id " + std::to_string(id));
        seen[id] = 1;
        weights[id] = require_int(require_key(vertex, "weight", where), where + ".weight");
        if (auto it = vertex.find("name"); it != vertex.end() && !it->is_null()) {
            if (!it->is_string()) throw InputError(where + ".name: expected a string");
            names[id] = it->get<std::string>();
        }
    }

    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2) throw InputError(where + ": expected a pair [u, v]");
        const auto u = require_int(e[0], where + "[0]");
        const auto v = require_int(e[1], where + "[1]");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError(where + ": endpoint outside 0.." + std::to_string(n - 1));
        edge_list.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    std::vector<std::vector<Vertex>> adjacency(n);
    for (const auto& [u, v] : edge_list) {
        adjacency[u].push_back(v);
        if (u != v) adjacency[v].push_back(u);
    }
    GameInstance instance{WeightedGraph(std::move(adjacency), std::move(weights), std::move(names)),
                          static_cast<int>(k)};
    if (auto violation = validate(instance)) throw InputError(violation->message);
    return instance;
}

std::string save_instance(const GameInstance& instance) {
    using ojson = nlohmann::ordered_json;
    const auto& g = instance.graph;
    ojson doc;
    doc["k"] = instance.k;
    doc["vertices"] = ojson::array();
    for (Vertex v = 0; v < g.size(); ++v) {
        ojson vertex;
        vertex["id"] = v;
        vertex["weight"] = g.weight(v);
        if (g.names()[v]) vertex["name"] = *g.names()[v];
        doc["vertices"].push_back(std::move(vertex));
    }
    doc["edges"] = ojson::array();
    for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump(2) + "\n";
}

std::vector<Vertex> load_profile(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_array()) throw InputError("profile: expected a JSON array of vertex ids");
    std::vector<Vertex> profile;
    for (std::size_t i = 0; i < doc.size(); ++i)
        profile.push_back(static_cast<Vertex>(require_int(doc[i], "profile[" + std::to_string(i) + "]")));
    return profile;
}

std::string save_profile(const std::vector<Vertex>& profile) { return json(profile).dump() + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace cdg
