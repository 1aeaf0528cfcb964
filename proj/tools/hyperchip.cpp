// hyperchip: parking functions and chip-firing on hypergraphs.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hyperchip/counting.hpp"
#include "hyperchip/digraph.hpp"
#include "hyperchip/firing.hpp"
#include "hyperchip/ideal.hpp"
#include "hyperchip/parking.hpp"
#include "hyperchip/trees.hpp"
#include "json.hpp"

using namespace hyperchip;
using nlohmann::json;

namespace {

Configuration parse_config(const RootedHypergraph& h, const std::string& s) {
    Configuration c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            c.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw domain_error("bad --config entry '" + tok + "'");
        }
    }
    if (static_cast<int>(c.size()) != h.nonsink_count())
        throw domain_error("--config needs one entry per nonsink vertex (" +
                           std::to_string(h.nonsink_count()) + ")");
    for (int x : c)
        if (x < 0) throw domain_error("--config entries must be nonnegative");
    return c;
}

std::string config_line(const Configuration& c) { return json(c).dump(); }

std::string node_name(const RootedHypergraph& h, const BipartiteIncidence& b, int id) {
    if (b.is_edge_node(id)) return "e" + std::to_string(id + 1);
    return h.label(id - b.edge_nodes);
}

// Tokens are vertex labels or e<k> for the k-th edge occurrence; vertex labels win.
Beta parse_beta(const RootedHypergraph& h, const BipartiteIncidence& b,
                const std::string& s) {
    Beta beta(b.node_count(), -1);
    std::stringstream ss(s);
    std::string tok;
    int rank = 0;
    while (std::getline(ss, tok, ',')) {
        int id = -1;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.label(v) == tok) id = b.vertex_node(v);
        if (id < 0 && tok.size() > 1 && tok[0] == 'e') {
            int k = std::stoi(tok.substr(1));
            if (k >= 1 && k <= b.edge_nodes) id = b.edge_node(k - 1);
        }
        if (id < 0) throw domain_error("unknown --beta token '" + tok + "'");
        if (beta[id] >= 0) throw domain_error("--beta repeats '" + tok + "'");
        beta[id] = rank++;
    }
    if (rank != b.node_count())
        throw domain_error("--beta must rank all " + std::to_string(b.node_count()) +
                           " nodes of the incidence graph");
    return beta;
}

std::string dot_of_tree(const RootedHypergraph& h, const BipartiteIncidence& b,
                        const BTree& t) {
    std::ostringstream out;
    out << "graph {\n";
    for (auto [u, v] : t.edges)
        out << "  \"" << node_name(h, b, u) << "\" -- \"" << node_name(h, b, v) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string dot_of_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& [arc, m] : d.arcs)
        for (int k = 0; k < m; ++k)
            out << "  \"" << d.labels[arc.first] << "\" -> \"" << d.labels[arc.second]
                << "\";\n";
    out << "}\n";
    return out.str();
}

json class_json(const RootedHypergraph& h, const TreeClass& k) {
    json lr = json::array();
    for (auto [i, e] : k.lr)
        lr.push_back({h.label(h.nonsink_vertices()[i]), "e" + std::to_string(e + 1)});
    return lr;
}

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorics of parking functions and chip-firing on hypergraphs"};
    app.require_subcommand(1);

    std::string file, config_str, beta_str, script_path, u_str, complete_str;
    long long max_size = 0;
    bool dot = false;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "hypergraph JSON file")->required();
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a hypergraph");
    add_file(validate);

    auto* check = app.add_subcommand("check", "test one configuration");
    add_file(check);
    check->add_option("--config", config_str, "chip counts, e.g. 2,1,0")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all parking functions");
    add_file(enumerate);

    auto* maximal = app.add_subcommand("maximal", "maximal parking functions");
    add_file(maximal);

    auto* orientations = app.add_subcommand("orientations",
                                            "acyclic unique-source orientations");
    add_file(orientations);

    auto* trees = app.add_subcommand("trees", "burning-equivalence classes");
    add_file(trees);
    trees->add_flag("--dot", dot, "emit canonical trees as DOT");
    trees->add_option("--max-size", max_size, "override enumeration guard");

    auto* bijection = app.add_subcommand("bijection", "roundtrip audit");
    add_file(bijection);
    bijection->add_option("--beta", beta_str, "node order, e.g. 4,3,2,1,e3,e2,e1");

    auto* fire = app.add_subcommand("fire", "apply a firing script");
    add_file(fire);
    fire->add_option("--config", config_str, "starting chips")->required();
    fire->add_option("script", script_path, "JSON firing script")->required();

    auto* cyclings = app.add_subcommand("cyclings", "vertex-induced cyclings");
    add_file(cyclings);
    cyclings->add_flag("--dot", dot, "emit each cycling digraph as DOT");
    cyclings->add_option("--max-size", max_size, "override order guard");

    auto* star = app.add_subcommand("star", "star-hypergraph digraph and determinant");
    add_file(star);
    star->add_flag("--dot", dot, "emit the digraph as DOT");

    auto* count = app.add_subcommand("count", "Steck determinant count");
    count->add_option("--u", u_str, "vector, e.g. 3,5,6,6");
    count->add_option("--complete", complete_str, "n=4,d=3 for the complete case");

    auto* ideal = app.add_subcommand("ideal", "cut-ideal minimal generators");
    add_file(ideal);
    ideal->add_option("--max-size", max_size, "override vertex-count guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    if (validate->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        std::cout << "ok: " << h.vertex_count() << " vertices, " << h.edge_count()
                  << " edges, sink " << h.label(h.sink()) << "\n";
        return 0;
    }

    if (check->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        Configuration c = parse_config(h, config_str);
        if (is_parking_burn(h, c)) {
            std::cout << "parking function\n";
        } else {
            VertexSet t = bounded_sets(h, c).front();
            std::string set;
            for (int i : t.members()) {
                if (!set.empty()) set += ",";
                set += h.label(h.nonsink_vertices()[i]);
            }
            std::cout << "not a parking function; bounded set {" << set << "}\n";
        }
        return 0;
    }

    if (enumerate->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        for (const auto& c : enumerate_parking(h)) std::cout << config_line(c) << "\n";
        return 0;
    }

    if (maximal->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        for (const auto& c : maximal_parking(h)) std::cout << config_line(c) << "\n";
        return 0;
    }

    if (orientations->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        for (const auto& o : enumerate_acyclic_orientations(h)) {
            json chosen = json::array();
            for (int v : o.chosen) chosen.push_back(h.label(v));
            std::cout << json{{"chosen", chosen},
                              {"config", orientation_to_config(h, o)}}
                             .dump()
                      << "\n";
        }
        return 0;
    }

    if (trees->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        BipartiteIncidence b = bipartite_incidence(h);
        int guard = max_size > 0 ? static_cast<int>(max_size) : 14;
        auto classes = tree_classes(h, guard);
        std::cout << "spanning trees: " << all_spanning_trees(b, guard).size()
                  << ", classes: " << classes.size() << "\n";
        Beta beta = default_beta(h, b);
        for (const auto& k : classes) {
            BTree t = class_canonical_tree(h, k, beta);
            json line{{"lr", class_json(h, k)}, {"hypertree", hypertree_of(b, t)}};
            std::cout << line.dump() << "\n";
            if (dot) std::cout << dot_of_tree(h, b, t);
        }
        return 0;
    }

    if (bijection->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        BipartiteIncidence b = bipartite_incidence(h);
        Beta beta = beta_str.empty() ? default_beta(h, b) : parse_beta(h, b, beta_str);
        bool all_ok = true;
        for (const auto& c : enumerate_parking(h)) {
            auto [t, k] = parking_to_tree(h, c, beta);
            Configuration back = restrict_to_vertices(h, b, tree_to_parking(b, t, beta));
            bool ok = back == c;
            all_ok = all_ok && ok;
            std::cout << config_line(c) << " -> " << class_json(h, k).dump() << " -> "
                      << config_line(back) << " " << (ok ? "pass" : "fail") << "\n";
        }
        std::cout << (all_ok ? "all pass" : "FAILURES") << "\n";
        return all_ok ? 0 : 1;
    }

    if (fire->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        Configuration c = parse_config(h, config_str);
        std::ifstream in(script_path);
        if (!in) throw invalid_input("cannot open script " + script_path);
        json script = json::parse(in);
        if (!script.is_array()) throw invalid_input("script must be a JSON array");
        auto parse_choice = [&](const json& step, const std::string& label) {
            FiringChoice fc;
            fc.vertex = h.vertex_index(label);
            for (auto& [ek, tv] : step.items())
                fc.targets[std::stoi(ek)] = h.vertex_index(tv.get<std::string>());
            return fc;
        };
        for (const json& step : script) {
            FireResult r{};
            if (step.contains("vertex")) {
                r = fire_vertex(h, c, parse_choice(step.at("choice"),
                                                   step.at("vertex").get<std::string>()));
            } else if (step.contains("set")) {
                VertexSet t;
                for (const json& lbl : step.at("set")) {
                    int i = h.nonsink_index(h.vertex_index(lbl.get<std::string>()));
                    if (i < 0) throw domain_error("the sink cannot fire");
                    t = t.with(i);
                }
                SetFiringChoice sc;
                for (auto& [lbl, ch] : step.at("choices").items()) {
                    int i = h.nonsink_index(h.vertex_index(lbl));
                    sc.by_vertex[i] = parse_choice(ch, lbl);
                }
                r = fire_set(h, c, t, sc);
            } else {
                throw invalid_input("script step needs \"vertex\" or \"set\"");
            }
            c = r.config;
            std::cout << config_line(c) << (r.nonnegative ? "" : " negative") << "\n";
        }
        return 0;
    }

    if (cyclings->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        long long guard = max_size > 0 ? max_size : 500'000;
        std::set<Configuration> uni;
        for (const Cycling& cy : all_vertex_induced_cyclings(h, guard)) {
            json cyc = json::array();
            for (const auto& cycle : cy.cycles) {
                json one = json::array();
                for (int v : cycle) one.push_back(h.label(v));
                cyc.push_back(one);
            }
            Digraph d = digraph_from_cycling(h, cy);
            auto pf = digraph_parking_enumerate(d);
            uni.insert(pf.begin(), pf.end());
            std::cout << json{{"cycling", cyc}, {"parking", pf}}.dump() << "\n";
            if (dot) std::cout << dot_of_digraph(d);
        }
        json u = json::array();
        for (const auto& c : uni) u.push_back(c);
        std::cout << json{{"union", u}}.dump() << "\n";
        return 0;
    }

    if (star->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        Digraph d = star_digraph(h);
        Matrix l = reduced_laplacian(d);
        std::cout << json{{"laplacian", l}}.dump() << "\n";
        std::cout << "determinant: " << laplacian_determinant(l).get_str() << "\n";
        for (const auto& c : maximal_parking(h))
            std::cout << "maximal: " << config_line(c) << "\n";
        if (dot) std::cout << dot_of_digraph(d);
        return 0;
    }

    if (count->parsed()) {
        std::vector<int> u;
        if (!u_str.empty()) {
            std::stringstream ss(u_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) u.push_back(std::stoi(tok));
        } else if (!complete_str.empty()) {
            int n = -1, d = -1;
            std::stringstream ss(complete_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
                if (tok.rfind("d=", 0) == 0) d = std::stoi(tok.substr(2));
            }
            if (n < 0 || d < 0) throw domain_error("--complete needs n=...,d=...");
            u = u_vector_complete(n, d);
        } else {
            throw domain_error("count needs --u or --complete");
        }
        std::cout << steck_count(u).get_str() << "\n";
        return 0;
    }

    if (ideal->parsed()) {
        RootedHypergraph h = parse_hypergraph_file(file);
        int guard = max_size > 0 ? static_cast<int>(max_size) : 20;
        for (const auto& g : minimal_generators(cut_ideal_generators(h, guard)))
            std::cout << monomial_to_string(g) << " " << json(g).dump() << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const size_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
