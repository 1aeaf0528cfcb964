#include "hyperchip/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hyperchip {

int VertexSet::count() const { return std::popcount(bits_); }

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

RootedHypergraph::RootedHypergraph(std::vector<std::string> vertex_labels,
                                   std::vector<std::vector<std::string>> edge_labels,
                                   const std::string& sink_label)
    : labels_(std::move(vertex_labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw invalid_input("duplicate vertex label: " + l);

    auto index_of = [&](const std::string& l) {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) throw invalid_input("unknown vertex label: " + l);
        return static_cast<int>(it - labels_.begin());
    };

    auto sit = std::find(labels_.begin(), labels_.end(), sink_label);
    if (sit == labels_.end()) throw invalid_input("sink label not among vertices: " + sink_label);
    sink_ = static_cast<int>(sit - labels_.begin());

    for (const auto& el : edge_labels) {
        std::vector<int> e;
        for (const auto& l : el) e.push_back(index_of(l));
        std::set<int> distinct(e.begin(), e.end());
        if (distinct.size() != e.size())
            throw invalid_input("edge has a repeated vertex");
        if (e.size() < 2)
            throw invalid_input("edge has fewer than 2 vertices");
        edges_.push_back(std::move(e));
    }

    nonsink_index_.assign(labels_.size(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
        if (v == sink_) continue;
        nonsink_index_[v] = static_cast<int>(nonsink_.size());
        nonsink_.push_back(v);
    }
    if (nonsink_count() > 63)
        throw invalid_input("too many nonsink vertices (limit 63)");

    // connectivity: union vertices through shared edges
    std::vector<int> uf(labels_.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& e : edges_)
        for (std::size_t i = 1; i < e.size(); ++i) uf[find(e[i])] = find(e[0]);
    for (int v = 0; v < vertex_count(); ++v)
        if (find(v) != find(sink_))
            throw invalid_input("hypergraph is disconnected (vertex " + labels_[v] +
                                " unreachable from sink)");
}

int RootedHypergraph::vertex_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw domain_error("unknown vertex: " + label);
    return static_cast<int>(it - labels_.begin());
}

bool RootedHypergraph::edge_contains(int e, int v) const {
    const auto& m = edges_[e];
    return std::find(m.begin(), m.end(), v) != m.end();
}

bool RootedHypergraph::edge_within(int e, VertexSet T) const {
    for (int v : edges_[e]) {
        int i = nonsink_index_[v];
        if (i < 0 || !T.contains(i)) return false;
    }
    return true;
}

int RootedHypergraph::degree(int v) const {
    if (v < 0 || v >= vertex_count()) throw domain_error("vertex index out of range");
    int d = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (edge_contains(e, v)) ++d;
    return d;
}

int RootedHypergraph::degree_in_set(VertexSet T, int i) const {
    if (!T.contains(i)) throw domain_error("vertex not in T");
    int v = nonsink_[i];
    int d = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (edge_contains(e, v) && !edge_within(e, T)) ++d;
    return d;
}

RootedHypergraph parse_hypergraph(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("sink"))
        throw invalid_input("expected object with \"vertices\", \"edges\", \"sink\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : j.at("edges")) {
        std::vector<std::string> members;
        for (const auto& v : e) members.push_back(v.get<std::string>());
        edges.push_back(std::move(members));
    }
    return RootedHypergraph(std::move(vertices), std::move(edges),
                            j.at("sink").get<std::string>());
}

RootedHypergraph parse_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_hypergraph(ss.str());
}

std::string serialize_hypergraph(const RootedHypergraph& h) {
    nlohmann::json j;
    j["vertices"] = h.vertex_labels();
    auto edges = nlohmann::json::array();
    for (const auto& e : h.edges()) {
        auto je = nlohmann::json::array();
        for (int v : e) je.push_back(h.label(v));
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["sink"] = h.label(h.sink());
    return j.dump();
}

BipartiteIncidence bipartite_incidence(const RootedHypergraph& h) {
    BipartiteIncidence b;
    b.edge_nodes = h.edge_count();
    b.vertex_nodes = h.vertex_count();
    b.adj.assign(b.node_count(), {});
    for (int e = 0; e < h.edge_count(); ++e) {
        for (int v : h.edge(e)) {
            b.incidences.emplace_back(e, v);
            b.adj[b.edge_node(e)].push_back(b.vertex_node(v));
            b.adj[b.vertex_node(v)].push_back(b.edge_node(e));
        }
    }
    b.sink_node = b.vertex_node(h.sink());
    return b;
}

RootedHypergraph complete_hypergraph(int vertices, int d) {
    if (d < 2 || d > vertices) throw domain_error("need 2 <= d <= vertex count");
    std::vector<std::string> labels;
    for (int i = 1; i <= vertices; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> edges;
    std::vector<int> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::string> e;
        for (int i : pick) e.push_back(labels[i]);
        edges.push_back(std::move(e));
        int k = d - 1;
        while (k >= 0 && pick[k] == vertices - d + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int i = k + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
    }
    return RootedHypergraph(std::move(labels), std::move(edges), std::to_string(vertices));
}

}  // namespace hyperchip
