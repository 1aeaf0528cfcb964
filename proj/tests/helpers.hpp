#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace testutil {

inline hyperchip::RootedHypergraph h_star() {
    return hyperchip::parse_hypergraph(
        R"({"vertices":["1","2","3","4"],"edges":[["1","2","3"],["1","2","4"],["1","3","4"]],"sink":"4"})");
}

inline hyperchip::RootedHypergraph s_star() {
    return hyperchip::parse_hypergraph(
        R"({"vertices":["1","2","3","q"],"edges":[["1","2","3","q"],["1","2","q"],["1","3","q"]],"sink":"q"})");
}

inline hyperchip::RootedHypergraph single_edge() {
    return hyperchip::parse_hypergraph(
        R"({"vertices":["1","2"],"edges":[["1","2"]],"sink":"2"})");
}

/// Random connected hypergraph with <= 5 nonsink vertices and <= 6 edge
/// occurrences (repeats allowed), rejection-sampled until connected.
inline hyperchip::RootedHypergraph random_hypergraph(std::mt19937& rng) {
    while (true) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);  // nonsink count
        int total = n + 1;
        std::vector<std::string> labels;
        for (int v = 1; v <= total; ++v) labels.push_back(std::to_string(v));
        int m = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<std::vector<std::string>> edges;
        for (int e = 0; e < m; ++e) {
            int sz = std::uniform_int_distribution<int>(2, total)(rng);
            std::vector<int> pool(total);
            for (int v = 0; v < total; ++v) pool[v] = v;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<std::string> edge;
            for (int k = 0; k < sz; ++k) edge.push_back(labels[pool[k]]);
            edges.push_back(std::move(edge));
        }
        try {
            return hyperchip::RootedHypergraph(labels, edges, labels.back());
        } catch (const hyperchip::invalid_input&) {
            continue;  // disconnected draw, resample
        }
    }
}

/// Every configuration in the box [0, deg(i)-1] per nonsink coordinate.
inline std::vector<hyperchip::Configuration> degree_box(const hyperchip::RootedHypergraph& h) {
    int n = h.nonsink_count();
    std::vector<hyperchip::Configuration> out;
    hyperchip::Configuration c(n, 0);
    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i) bound[i] = h.degree(h.nonsink_vertices()[i]);
    while (true) {
        out.push_back(c);
        int k = n - 1;
        while (k >= 0 && c[k] == bound[k] - 1) c[k--] = 0;
        if (k < 0) break;
        ++c[k];
    }
    return out;
}

}  // namespace testutil
