#include "greengrade/tree.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace greengrade {

using nlohmann::json;

const std::string& BrauerTree::other_end(const std::string& edge, const std::string& vertex) const {
    const auto& [a, b] = edges.at(edge);
    if (vertex == a)
        return b;
    if (vertex == b)
        return a;
    throw std::logic_error("vertex " + vertex + " is not an endpoint of edge " + edge);
}

void BrauerTree::validate() const {
    if (multiplicity < 1)
        throw std::invalid_argument("multiplicity must be >= 1");
    if (edges.empty())
        throw std::invalid_argument("tree must have at least one edge");
    if (!rotation.count(exceptional))
        throw std::invalid_argument("unknown exceptional vertex: " + exceptional);

    // each edge appears exactly in the rotation lists of its two endpoints
    std::map<std::string, std::multiset<std::string>> seen;
    for (const auto& [v, rot] : rotation)
        for (const auto& eid : rot) {
            if (!edges.count(eid))
                throw std::invalid_argument("dangling edge id in rotation: " + eid);
            seen[eid].insert(v);
        }
    for (const auto& [eid, ends] : edges) {
        if (!rotation.count(ends.first) || !rotation.count(ends.second))
            throw std::invalid_argument("edge " + eid + " references unknown vertex");
        if (ends.first == ends.second)
            throw std::invalid_argument("edge " + eid + " is a loop");
        std::multiset<std::string> expect{ends.first, ends.second};
        auto it = seen.find(eid);
        if (it == seen.end() || it->second != expect)
            throw std::invalid_argument("edge " + eid +
                                        " must appear exactly in the rotation lists of its endpoints");
    }

    // connectivity
    std::set<std::string> visited;
    std::deque<std::string> queue{exceptional};
    visited.insert(exceptional);
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const auto& eid : rotation.at(v)) {
            const std::string& w = other_end(eid, v);
            if (visited.insert(w).second)
                queue.push_back(w);
        }
    }
    if (visited.size() != rotation.size())
        throw std::invalid_argument("not connected");
    if (edges.size() + 1 != rotation.size())
        throw std::invalid_argument("not a tree: edge count must be vertex count - 1");
}

BrauerTree parse_tree(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed tree document: ") + ex.what());
    }
    BrauerTree t;
    try {
        t.multiplicity = doc.at("multiplicity").get<int>();
        t.exceptional = doc.at("exceptional").get<std::string>();
        for (const auto& [v, rot] : doc.at("vertices").items()) {
            std::vector<std::string> r;
            for (const auto& eid : rot)
                r.push_back(eid.get<std::string>());
            t.rotation[v] = std::move(r);
        }
        for (const auto& [eid, ends] : doc.at("edges").items()) {
            if (!ends.is_array() || ends.size() != 2)
                throw std::invalid_argument("edge " + eid + " must list exactly two endpoints");
            t.edges[eid] = {ends[0].get<std::string>(), ends[1].get<std::string>()};
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed tree document: ") + ex.what());
    }
    t.validate();
    return t;
}

std::string serialize_tree(const BrauerTree& t) {
    json doc;
    doc["multiplicity"] = t.multiplicity;
    doc["exceptional"] = t.exceptional;
    json verts = json::object();
    for (const auto& [v, rot] : t.rotation)
        verts[v] = rot;
    doc["vertices"] = std::move(verts);
    json edges = json::object();
    for (const auto& [eid, ends] : t.edges)
        edges[eid] = json::array({ends.first, ends.second});
    doc["edges"] = std::move(edges);
    return doc.dump(2);
}

BrauerTree star_tree(int m, int e) {
    if (m < 1 || e < 1)
        throw std::invalid_argument("star_tree requires m >= 1 and e >= 1");
    BrauerTree t;
    t.multiplicity = m;
    t.exceptional = "c";
    std::vector<std::string> rot;
    for (int i = 1; i <= e; ++i) {
        std::string eid = "E" + std::to_string(i);
        std::string leaf = "v" + std::to_string(i);
        rot.push_back(eid);
        t.rotation[leaf] = {eid};
        t.edges[eid] = {"c", leaf};
    }
    t.rotation["c"] = std::move(rot);
    t.validate();
    return t;
}

BrauerTree line_tree(int m, int e) {
    if (m < 1 || e < 1)
        throw std::invalid_argument("line_tree requires m >= 1 and e >= 1");
    BrauerTree t;
    t.multiplicity = m;
    t.exceptional = "v0";
    for (int i = 0; i <= e; ++i) {
        std::string v = "v" + std::to_string(i);
        std::vector<std::string> rot;
        if (i > 0)
            rot.push_back("E" + std::to_string(i));
        if (i < e)
            rot.push_back("E" + std::to_string(i + 1));
        t.rotation[v] = std::move(rot);
    }
    for (int i = 1; i <= e; ++i)
        t.edges["E" + std::to_string(i)] = {"v" + std::to_string(i - 1), "v" + std::to_string(i)};
    t.validate();
    return t;
}

EdgeDistance distances(const BrauerTree& t) {
    EdgeDistance d;
    std::map<std::string, std::string> entry_edge; // vertex -> edge toward the exceptional vertex
    std::deque<std::pair<std::string, int>> queue; // (vertex, distance of vertex)
    std::set<std::string> visited{t.exceptional};
    queue.push_back({t.exceptional, 0});
    while (!queue.empty()) {
        auto [v, dist] = queue.front();
        queue.pop_front();
        for (const auto& eid : t.rotation.at(v)) {
            const std::string& w = t.other_end(eid, v);
            if (!visited.insert(w).second)
                continue;
            d.delta[eid] = dist + 1;
            entry_edge[w] = eid;
            if (dist + 1 >= 2)
                d.predecessor[eid] = entry_edge.at(v);
            queue.push_back({w, dist + 1});
        }
    }
    return d;
}

} // namespace greengrade
