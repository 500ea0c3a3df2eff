// SPDX-License-Identifier: MIT

#include "dvdp/singularity_config.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace dvdp {

// ---------------------------------------------------------------------------
// ADE labels

std::string AdeType::label() const {
    const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(n);
}

namespace {

int family_rank(Family f) { return f == Family::E ? 0 : f == Family::D ? 1 : 2; }

}  // namespace

bool display_less(const AdeType& a, const AdeType& b) {
    if (family_rank(a.family) != family_rank(b.family)) return family_rank(a.family) < family_rank(b.family);
    return a.n > b.n;
}

AdeType parse_ade(const std::string& text) {
    if (text.size() < 2) throw InputError("invalid ADE label '" + text + "'");
    AdeType t;
    switch (text[0]) {
        case 'A': t.family = Family::A; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        default: throw InputError("invalid ADE family in '" + text + "'");
    }
    try {
        std::size_t used = 0;
        t.n = std::stoi(text.substr(1), &used);
        if (used != text.size() - 1) throw InputError("invalid ADE rank in '" + text + "'");
    } catch (const std::logic_error&) {
        throw InputError("invalid ADE rank in '" + text + "'");
    }
    const bool ok = (t.family == Family::A && t.n >= 1) || (t.family == Family::D && t.n >= 4) ||
                    (t.family == Family::E && t.n >= 6 && t.n <= 8);
    if (!ok) throw InputError("no Dynkin diagram named '" + text + "'");
    return t;
}

std::string singularity_label(std::vector<AdeType> types) {
    if (types.empty()) return "smooth";
    std::sort(types.begin(), types.end(), display_less);
    std::ostringstream os;
    for (std::size_t i = 0; i < types.size();) {
        std::size_t j = i;
        while (j < types.size() && types[j] == types[i]) ++j;
        if (i) os << '+';
        if (j - i > 1) os << (j - i);
        os << types[i].label();
        i = j;
    }
    return os.str();
}

std::vector<AdeType> parse_singularity_label(const std::string& text) {
    std::vector<AdeType> out;
    if (text == "smooth" || text.empty()) return out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::size_t i = 0;
        while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
        const int mult = i == 0 ? 1 : std::stoi(part.substr(0, i));
        const AdeType t = parse_ade(part.substr(i));
        for (int k = 0; k < mult; ++k) out.push_back(t);
    }
    std::sort(out.begin(), out.end(), display_less);
    return out;
}

std::vector<std::pair<int, int>> canonical_edges(const AdeType& t) {
    std::vector<std::pair<int, int>> e;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < t.n; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            e.emplace_back(0, 2);
            e.emplace_back(1, 2);
            for (int i = 2; i + 1 < t.n; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::E:
            if (t.n == 6) {
                e = {{0, 2}, {2, 4}, {1, 3}, {3, 4}, {4, 5}};
            } else {
                e = {{0, 2}, {2, 3}, {1, 3}};
                for (int i = 3; i + 1 < t.n; ++i) e.emplace_back(i, i + 1);
            }
            break;
    }
    return e;
}

namespace {

std::vector<std::vector<int>> adjacency_of(const AdeType& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [a, b] : canonical_edges(t)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Breadth-first order of the canonical diagram from vertex 0, so that every
// vertex after the first has an earlier neighbour.
std::vector<int> bfs_order(const AdeType& t) {
    const auto adj = adjacency_of(t);
    std::vector<int> order{0};
    std::vector<bool> seen(t.n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    return order;
}

// Recognises the Dynkin type of a connected simple graph given by adjacency
// lists, or returns nothing.
std::optional<AdeType> recognise(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::size_t edge_ends = 0;
    for (const auto& a : adj) edge_ends += a.size();
    if (edge_ends != 2 * static_cast<std::size_t>(n - 1)) return std::nullopt;  // not a tree
    int branch = -1;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) {
            if (branch >= 0) return std::nullopt;
            branch = v;
        }
    }
    if (branch < 0) return AdeType{Family::A, n};
    std::vector<int> arms;
    for (int start : adj[branch]) {
        int prev = branch, cur = start, len = 1;
        while (adj[cur].size() == 2) {
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return AdeType{Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return AdeType{Family::E, n};
    return std::nullopt;
}

// All bijections canonical-vertex -> element of `nodes` respecting adjacency,
// where `adjacent(a, b)` reports adjacency of two nodes.
void isomorphisms(const AdeType& t, const std::vector<int>& nodes, const std::function<bool(int, int)>& adjacent,
                  const std::function<void(const std::vector<int>&)>& emit) {
    const auto adj = adjacency_of(t);
    const auto order = bfs_order(t);
    std::vector<int> image(t.n, -1);
    std::vector<bool> used(nodes.size(), false);
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == order.size()) {
            emit(image);
            return;
        }
        const int v = order[k];
        for (std::size_t c = 0; c < nodes.size(); ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < k && ok; ++p) {
                const int w = order[p];
                const bool want = std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end();
                if (adjacent(nodes[c], image[w]) != want) ok = false;
            }
            if (!ok) continue;
            used[c] = true;
            image[v] = nodes[c];
            step(k + 1);
            used[c] = false;
        }
    };
    step(0);
}

std::vector<DivisorClass> roots_in_order(const SingularityProfile& p, const std::vector<int>& idx) {
    std::vector<DivisorClass> out;
    for (int i : idx) out.push_back(p.simple_roots[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Profiles

std::vector<AdeType> SingularityProfile::singularities() const {
    std::vector<AdeType> out;
    for (const auto& p : points) out.push_back(p.type);
    std::sort(out.begin(), out.end(), display_less);
    return out;
}

const SingularPointData& SingularityProfile::point(const std::string& id) const {
    for (const auto& p : points)
        if (p.id == id) return p;
    throw InputError("no singular point with id '" + id + "'");
}

std::vector<DivisorClass> SingularityProfile::point_roots(const SingularPointData& p) const {
    return roots_in_order(*this, p.ordered_components);
}

SingularPointData classify_component(const SingularityProfile& profile, std::size_t component) {
    if (component >= profile.components.size()) throw PreconditionError("classify_component: no such component");
    const auto& nodes = profile.components[component];
    std::vector<std::vector<int>> adj(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (i != j && pair(profile.form, profile.simple_roots[nodes[i]], profile.simple_roots[nodes[j]]) == 1)
                adj[i].push_back(static_cast<int>(j));
    const auto type = recognise(adj);
    if (!type) throw ConfigError("component is not a Dynkin diagram of type A, D or E");
    std::optional<std::vector<int>> best;
    std::vector<DivisorClass> best_key;
    isomorphisms(
        *type, nodes,
        [&](int a, int b) { return pair(profile.form, profile.simple_roots[a], profile.simple_roots[b]) == 1; },
        [&](const std::vector<int>& image) {
            auto key = roots_in_order(profile, image);
            if (!best || key < best_key) {
                best = image;
                best_key = std::move(key);
            }
        });
    SingularPointData out;
    out.type = *type;
    out.ordered_components = *best;
    return out;
}

SingularityProfile validate_config(const IntersectionForm& form, const std::vector<DivisorClass>& roots,
                                   const std::string& name) {
    SingularityProfile p;
    p.form = form;
    p.simple_roots = roots;
    p.name = name;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].size() != static_cast<std::size_t>(form.rank))
            throw InputError("expected " + std::to_string(form.rank) + " coefficients",
                             "roots[" + std::to_string(i) + "]");
        if (square(form, roots[i]) != -2 || pair(form, roots[i], form.canonical) != 0)
            throw ConfigError("roots[" + std::to_string(i) + "] is not a root class (needs D^2 = -2, D.K = 0)");
    }
    const auto bound = static_cast<std::size_t>(9 - form.degree);
    if (roots.size() > bound)
        throw ConfigError(std::to_string(roots.size()) + " roots exceed the bound 9 - d = " + std::to_string(bound));
    std::vector<int> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const auto v = pair(form, roots[i], roots[j]);
            if (v != 0 && v != 1)
                throw ConfigError("roots[" + std::to_string(i) + "] and roots[" + std::to_string(j) +
                                  "] pair to " + std::to_string(v) + ", outside {0, 1}");
            if (v == 1) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
        }
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < roots.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [_, g] : groups) p.components.push_back(g);

    std::vector<SingularPointData> pts;
    for (std::size_t c = 0; c < p.components.size(); ++c) pts.push_back(classify_component(p, c));
    // Canonical point order: display order of types, then the canonical
    // coefficient sequence, which does not depend on the input order.
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (!(pts[a].type == pts[b].type)) return display_less(pts[a].type, pts[b].type);
        return roots_in_order(p, pts[a].ordered_components) < roots_in_order(p, pts[b].ordered_components);
    });
    std::vector<std::vector<int>> comps;
    std::map<std::string, int> counter;
    for (auto i : perm) {
        comps.push_back(p.components[i]);
        SingularPointData d = pts[i];
        d.id = d.type.label() + "_" + std::to_string(++counter[d.type.label()]);
        p.points.push_back(std::move(d));
    }
    p.components = std::move(comps);

    // Root sublattices that embed but are not realised by a weak del Pezzo
    // surface in characteristic zero.
    const std::string label = dvdp::singularity_label(p.singularities());
    if ((form.degree == 2 && label == "7A1") || (form.degree == 1 && (label == "8A1" || label == "D4+4A1")))
        throw ConfigError("configuration " + label + " in degree " + std::to_string(form.degree) +
                          " is not realised by a surface in characteristic zero");
    return p;
}

CurveSet lines_on_surface(const SingularityProfile& profile) {
    return lines_on_configuration(profile.form, profile.simple_roots);
}

// ---------------------------------------------------------------------------
// Type triplets

std::string TypeTriplet::singularity_label() const { return dvdp::singularity_label(singularities); }

std::optional<std::pair<int, int>> line_count_variants(int degree, const std::string& label) {
    // Line counts of the two embeddings, fewer first. Each entry is checked
    // against an exhaustive embedding search in the test suite.
    static const std::map<std::pair<int, std::string>, std::pair<int, int>> table = {
        {{6, "A1"}, {3, 4}},        {{4, "A3"}, {4, 5}},         {{4, "2A1"}, {8, 9}},
        {{2, "A5+A1"}, {5, 6}},     {{2, "A5"}, {7, 8}},         {{2, "A3+2A1"}, {11, 12}},
        {{2, "A3+A1"}, {15, 16}},   {{1, "A7"}, {7, 8}},         {{1, "A5+A1"}, {20, 21}},
    };
    const auto it = table.find({degree, label});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::optional<int> TypeTriplet::variant() const {
    const auto v = line_count_variants(degree, singularity_label());
    if (!v) return std::nullopt;
    if (num_lines == v->first) return 1;
    if (num_lines == v->second) return 2;
    return std::nullopt;
}

std::string TypeTriplet::name() const {
    const auto v = variant();
    return singularity_label() + (v ? "(" + std::to_string(*v) + ")" : "");
}

TypeTriplet surface_type(const SingularityProfile& profile) {
    TypeTriplet t;
    t.degree = profile.degree();
    t.singularities = profile.singularities();
    t.num_lines = static_cast<int>(lines_on_surface(profile).size());
    return t;
}

CentralVariant central_vertex_variant(const SingularityProfile& profile, const SingularPointData& point) {
    const int d = profile.degree();
    if (d != 1 && d != 2) throw PreconditionError("central_vertex_variant: defined only in degrees 1 and 2");
    const int n = 9 - 2 * d;
    if (!(point.type == AdeType{Family::A, n}))
        throw PreconditionError("central_vertex_variant: point is not of type A" + std::to_string(n));
    const auto& central = profile.simple_roots[point.ordered_components[(n - 1) / 2]];
    for (const auto& line : lines_on_surface(profile).classes)
        if (pair(profile.form, line, central) > 0) return CentralVariant::Prime;
    return CentralVariant::DoublePrime;
}

std::optional<int> construction_case(int degree, const TypeTriplet& type) {
    static const std::map<std::pair<int, std::string>, int> table = {
        {{8, "A1"}, 9},        {{6, "A2+A1"}, 1},  {{6, "A2"}, 6},      {{6, "A1(1)"}, 1},
        {{5, "A4"}, 1},        {{4, "D5"}, 1},     {{4, "A3+2A1"}, 10}, {{4, "D4"}, 6},
        {{4, "A3+A1"}, 2},     {{4, "A2+2A1"}, 4}, {{4, "4A1"}, 8},     {{4, "A3(1)"}, 10},
        {{4, "3A1"}, 5},       {{4, "A2"}, 4},     {{4, "2A1(1)"}, 8},  {{4, "A1"}, 5},
        {{3, "E6"}, 1},        {{3, "A5+A1"}, 2},  {{3, "3A2"}, 2},     {{3, "A5"}, 2},
        {{3, "2A2+A1"}, 3},    {{3, "D4"}, 1},     {{3, "2A2"}, 7},     {{3, "4A1"}, 3},
        {{3, "A2"}, 2},        {{3, "A1"}, 3},
    };
    if (degree < 3) return std::nullopt;
    const auto it = table.find({degree, type.name()});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Embedding search

void for_each_embedding(const IntersectionForm& form, std::vector<AdeType> types, bool up_to_weyl,
                        const std::function<bool(const std::vector<DivisorClass>&)>& visit) {
    std::sort(types.begin(), types.end(), display_less);
    int total = 0;
    for (const auto& t : types) total += t.n;
    if (total > 9 - form.degree) return;
    if (types.empty()) {
        visit({});
        return;
    }
    const auto& all = cached_roots(form);
    const int m = static_cast<int>(all.size());
    std::vector<std::int8_t> pm(static_cast<std::size_t>(m) * m);
    std::vector<std::vector<int>> nbr(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto v = pair(form, all[i], all[j]);
            pm[static_cast<std::size_t>(i) * m + j] = static_cast<std::int8_t>(v);
            if (v == 1) nbr[i].push_back(j);
        }
    auto P = [&](int a, int b) { return pm[static_cast<std::size_t>(a) * m + b]; };

    // Flatten the slots: (component, canonical vertex) in per-component BFS order.
    struct Slot {
        int comp;
        int vertex;
        int anchor;  // earlier slot adjacent to this one, or -1
    };
    std::vector<Slot> slots;
    std::vector<int> comp_start;
    std::vector<std::vector<std::vector<int>>> comp_adj;
    for (std::size_t c = 0; c < types.size(); ++c) {
        comp_start.push_back(static_cast<int>(slots.size()));
        const auto adj = adjacency_of(types[c]);
        comp_adj.push_back(adj);
        const auto order = bfs_order(types[c]);
        for (std::size_t k = 0; k < order.size(); ++k) {
            int anchor = -1;
            for (std::size_t p = 0; p < k; ++p)
                if (std::find(adj[order[k]].begin(), adj[order[k]].end(), order[p]) != adj[order[k]].end()) {
                    anchor = comp_start[c] + static_cast<int>(p);
                    break;
                }
            slots.push_back({static_cast<int>(c), order[k], anchor});
        }
    }
    const int ns = static_cast<int>(slots.size());
    std::vector<int> chosen(ns, -1);
    bool stop = false;
    std::function<void(int)> step = [&](int s) {
        if (stop) return;
        if (s == ns) {
            std::vector<DivisorClass> out;
            for (std::size_t c = 0; c < types.size(); ++c) {
                std::vector<int> canon(types[c].n);
                for (int k = 0; k < types[c].n; ++k) {
                    const auto& sl = slots[comp_start[c] + k];
                    canon[sl.vertex] = chosen[comp_start[c] + k];
                }
                for (int idx : canon) out.push_back(all[idx]);
            }
            if (!visit(out)) stop = true;
            return;
        }
        const Slot& sl = slots[s];
        const bool first_of_comp = s == comp_start[sl.comp];
        auto try_candidate = [&](int r) {
            for (int p = 0; p < s; ++p) {
                const int want = (slots[p].comp == sl.comp &&
                                  std::find(comp_adj[sl.comp][sl.vertex].begin(), comp_adj[sl.comp][sl.vertex].end(),
                                            slots[p].vertex) != comp_adj[sl.comp][sl.vertex].end())
                                     ? 1
                                     : 0;
                if (P(r, chosen[p]) != want) return;
            }
            // Identical consecutive components are generated in increasing
            // order of their first root to avoid listing permutations.
            if (first_of_comp && sl.comp > 0 && types[sl.comp] == types[sl.comp - 1] &&
                r <= chosen[comp_start[sl.comp - 1]])
                return;
            chosen[s] = r;
            step(s + 1);
            chosen[s] = -1;
        };
        if (sl.anchor >= 0) {
            // In degrees <= 3 the stabiliser of a root acts transitively on the
            // roots meeting it, so the second root can be pinned as well.
            const bool pin = up_to_weyl && s == 1 && form.degree <= 3;
            for (int r : nbr[chosen[sl.anchor]]) {
                try_candidate(r);
                if (stop || pin) return;
            }
        } else if (s == 0 && up_to_weyl) {
            try_candidate(0);
        } else {
            for (int r = 0; r < m && !stop; ++r) try_candidate(r);
        }
    };
    step(0);
}

std::vector<std::pair<int, std::vector<DivisorClass>>> line_count_spectrum(const IntersectionForm& form,
                                                                           const std::vector<AdeType>& types) {
    const bool transitive = form.degree <= 5 || form.degree == 8;
    std::map<int, std::vector<DivisorClass>> found;
    const auto& lines = cached_line_classes(form);
    for_each_embedding(form, types, transitive, [&](const std::vector<DivisorClass>& rs) {
        int count = 0;
        for (const auto& l : lines) {
            bool ok = true;
            for (const auto& r : rs)
                if (pair(form, l, r) < 0) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        }
        found.emplace(count, rs);
        return true;
    });
    return {found.begin(), found.end()};
}

}  // namespace dvdp
