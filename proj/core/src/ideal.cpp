#include "hyperchip/ideal.hpp"

#include <algorithm>

namespace hyperchip {

std::vector<Monomial> cut_ideal_generators(const RootedHypergraph& h, int max_vertices) {
    int n = h.nonsink_count();
    if (n > max_vertices)
        throw size_guard_error("too many vertices for generator enumeration", max_vertices);
    std::vector<Monomial> gens;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet t(mask);
        Monomial m(n, 0);
        for (int i : t.members()) m[i] = h.degree_in_set(t, i);
        gens.push_back(std::move(m));
    }
    return gens;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<Monomial> minimal_generators(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                redundant = j < i;  // keep the first copy of duplicates
            } else if (divides(gens[j], gens[i])) {
                redundant = true;
            }
        }
        if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_standard_monomial(const std::vector<Monomial>& gens, const Configuration& c) {
    for (const auto& g : gens) {
        if (g.size() != c.size()) throw domain_error("monomial length mismatch");
        if (divides(g, c)) return false;
    }
    return true;
}

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1) + "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace hyperchip
