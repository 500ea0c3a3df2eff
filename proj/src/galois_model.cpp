// SPDX-License-Identifier: MIT

#include "dvdp/galois_model.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace dvdp {

namespace {

bool preserves_gram(const IntersectionForm& form, const IntMatrix& g) {
    return multiply(multiply(transpose(g), form.gram), g) == form.gram;
}

std::vector<int> index_images(const std::vector<DivisorClass>& classes, const IntMatrix& g) {
    std::vector<int> out(classes.size(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto img = dvdp::apply(g, classes[i]);
        const auto it = std::find(classes.begin(), classes.end(), img);
        if (it != classes.end()) out[i] = static_cast<int>(it - classes.begin());
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> orbit_partition(std::size_t n, const std::vector<std::vector<int>>& perms) {
    UnionFind uf(n);
    for (const auto& p : perms)
        for (std::size_t i = 0; i < n; ++i) uf.unite(static_cast<int>(i), p[i]);
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [_, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void check_generators(const SingularityProfile& profile, const std::vector<IntMatrix>& generators) {
    const auto& form = profile.form;
    const auto lines = lines_on_surface(profile).classes;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& g = generators[k];
        const std::string where = "galois.matrices[" + std::to_string(k) + "]";
        if (g.size() != static_cast<std::size_t>(form.rank))
            throw ActionError(where + ": expected a " + std::to_string(form.rank) + "x" + std::to_string(form.rank) +
                              " matrix");
        for (const auto& row : g)
            if (row.size() != static_cast<std::size_t>(form.rank))
                throw ActionError(where + ": expected a square matrix of size " + std::to_string(form.rank));
        if (!preserves_gram(form, g)) throw ActionError(where + ": not an isometry of the intersection form");
        if (dvdp::apply(g, form.canonical) != form.canonical) throw ActionError(where + ": does not fix the canonical class");
        const auto roots_img = index_images(profile.simple_roots, g);
        if (std::count(roots_img.begin(), roots_img.end(), -1) > 0)
            throw ActionError(where + ": sends a profile root outside the profile");
        const auto line_img = index_images(lines, g);
        if (std::count(line_img.begin(), line_img.end(), -1) > 0)
            throw ActionError(where + ": does not permute the lines of the surface");
    }
}

std::vector<IntMatrix> group_closure(const std::vector<IntMatrix>& generators, std::size_t rank, std::size_t cap) {
    std::set<IntMatrix> seen;
    std::deque<IntMatrix> queue;
    const auto id = identity_matrix(rank);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        IntMatrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            IntMatrix y = multiply(g, x);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw ActionError("group closure exceeds the cap of " + std::to_string(cap) + " elements");
                queue.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::size_t validate_action(const SurfaceOverK& surface, std::size_t cap) {
    check_generators(surface.profile, surface.action.generators);
    return group_closure(surface.action.generators, static_cast<std::size_t>(surface.profile.form.rank), cap).size();
}

int fixed_rank(const IntersectionForm& form, const std::vector<IntMatrix>& generators) {
    QMatrix stacked;
    for (const auto& g : generators)
        for (int i = 0; i < form.rank; ++i) {
            QVector row(form.rank);
            for (int j = 0; j < form.rank; ++j) row[j] = g[i][j] - (i == j ? 1 : 0);
            stacked.push_back(std::move(row));
        }
    return form.rank - static_cast<int>(rank(std::move(stacked)));
}

std::vector<int> root_permutation(const SingularityProfile& profile, const IntMatrix& g) {
    auto out = index_images(profile.simple_roots, g);
    if (std::count(out.begin(), out.end(), -1) > 0) throw ActionError("matrix does not permute the profile roots");
    return out;
}

OrbitData orbits(const SurfaceOverK& surface) {
    const auto& p = surface.profile;
    std::vector<std::vector<int>> perms;
    for (const auto& g : surface.action.generators) perms.push_back(root_permutation(p, g));
    OrbitData out;
    out.root_orbits = orbit_partition(p.simple_roots.size(), perms);

    // Component of each root, then the induced permutation of points.
    std::vector<int> comp_of(p.simple_roots.size(), -1);
    for (std::size_t c = 0; c < p.components.size(); ++c)
        for (int r : p.components[c]) comp_of[r] = static_cast<int>(c);
    std::vector<std::vector<int>> point_perms;
    for (const auto& perm : perms) {
        std::vector<int> pp(p.components.size());
        for (std::size_t c = 0; c < p.components.size(); ++c) pp[c] = comp_of[perm[p.components[c][0]]];
        point_perms.push_back(std::move(pp));
    }
    for (const auto& orbit : orbit_partition(p.components.size(), point_perms)) {
        std::vector<std::string> ids;
        for (int c : orbit) ids.push_back(p.points[c].id);
        out.point_orbits.push_back(ids);
        if (orbit.size() == 1) out.rational_points.push_back(ids[0]);
    }
    // Keep rational points in canonical point order.
    std::vector<std::string> ordered;
    for (const auto& pt : p.points)
        if (std::find(out.rational_points.begin(), out.rational_points.end(), pt.id) != out.rational_points.end())
            ordered.push_back(pt.id);
    out.rational_points = std::move(ordered);
    return out;
}

RhoDrop rho_drop(const SurfaceOverK& surface) {
    const auto& p = surface.profile;
    const auto od = orbits(surface);
    RhoDrop out;
    out.total = static_cast<int>(od.root_orbits.size());
    for (const auto& id : od.rational_points) {
        const auto& pt = p.point(id);
        int count = 0;
        for (const auto& orbit : od.root_orbits)
            if (std::find(pt.ordered_components.begin(), pt.ordered_components.end(), orbit[0]) !=
                pt.ordered_components.end())
                ++count;
        out.per_point[id] = count;
    }
    out.rho_resolution = fixed_rank(p.form, surface.action.generators);
    out.rho_surface = out.rho_resolution - out.total;
    return out;
}

std::string Decoration::label() const {
    const std::string sign_text = sign == Sign::Minus ? "-" : sign == Sign::Plus ? "+" : "++";
    const std::string core = base.label() + "^" + sign_text;
    if (!variant) return core;
    return "(" + core + ")" + (*variant == CentralVariant::Prime ? "'" : "''");
}

Decoration decorate_point(const SurfaceOverK& surface, const std::string& point_id, FlagPolicy policy,
                          std::vector<std::string>* warnings) {
    const auto drop = rho_drop(surface);
    const auto it = drop.per_point.find(point_id);
    if (it == drop.per_point.end())
        throw PreconditionError("decorate_point: point " + point_id + " is not k-rational");
    const auto& pt = surface.profile.point(point_id);
    bool flag = true;
    if (policy != FlagPolicy::ForceTrue) {
        const auto f = surface.point_flags.find(point_id);
        if (f != surface.point_flags.end()) {
            flag = f->second;
        } else if (policy == FlagPolicy::Strict) {
            throw InputError("missing has_k_point flag", "point_flags." + point_id);
        } else if (warnings) {
            warnings->push_back("point_flags." + point_id + " missing; has_k_point defaults to true");
        }
    }
    Decoration d;
    d.base = pt.type;
    const int n = pt.type.n;
    if (pt.type.family == Family::A) {
        if (n >= 2 && it->second == n)
            d.sign = Sign::Minus;
        else
            d.sign = flag ? Sign::Plus : Sign::PlusPlus;
    } else {
        d.sign = it->second == n ? Sign::Minus : Sign::Plus;
    }
    const int deg = surface.degree();
    if ((deg == 1 || deg == 2) && pt.type == AdeType{Family::A, 9 - 2 * deg})
        d.variant = central_vertex_variant(surface.profile, pt);
    return d;
}

RankOneReport rank_one_check(const SurfaceOverK& surface) {
    const auto& p = surface.profile;
    const auto& form = p.form;
    RankOneReport rep;
    const auto drop = rho_drop(surface);
    rep.rho_resolution = drop.rho_resolution;
    rep.root_orbits = drop.total;

    const auto lines = lines_on_surface(p).classes;
    std::vector<std::vector<int>> line_perms;
    for (const auto& g : surface.action.generators) line_perms.push_back(index_images(lines, g));

    // (i) Galois orbits of lines avoiding all roots that are pairwise disjoint.
    std::vector<int> avoiding;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        bool avoid = true;
        for (const auto& r : p.simple_roots)
            if (pair(form, lines[i], r) != 0) {
                avoid = false;
                break;
            }
        if (avoid) avoiding.push_back(static_cast<int>(i));
    }
    for (const auto& orbit : orbit_partition(lines.size(), line_perms)) {
        if (std::find(avoiding.begin(), avoiding.end(), orbit[0]) == avoiding.end()) continue;
        bool disjoint = true;
        for (std::size_t a = 0; a < orbit.size() && disjoint; ++a)
            for (std::size_t b = a + 1; b < orbit.size(); ++b)
                if (pair(form, lines[orbit[a]], lines[orbit[b]]) != 0) {
                    disjoint = false;
                    break;
                }
        if (disjoint) {
            rep.obstructions.push_back("(i) a Galois orbit of " + std::to_string(orbit.size()) +
                                       " pairwise disjoint line(s) meets no root and can be contracted over k");
            break;
        }
    }

    // (ii) Everything individually fixed but fewer than 9 - d roots.
    bool all_fixed = true;
    for (const auto& g : surface.action.generators) {
        const auto rp = root_permutation(p, g);
        for (std::size_t i = 0; i < rp.size(); ++i)
            if (rp[i] != static_cast<int>(i)) all_fixed = false;
        const auto lp = index_images(lines, g);
        for (std::size_t i = 0; i < lp.size(); ++i)
            if (lp[i] != static_cast<int>(i)) all_fixed = false;
    }
    if (all_fixed && static_cast<int>(p.simple_roots.size()) < 9 - p.degree())
        rep.obstructions.push_back("(ii) every root and line is defined over k but there are fewer than 9 - d = " +
                                   std::to_string(9 - p.degree()) + " roots");

    // (iii) The modelled Picard rank.
    if (drop.rho_surface != 1)
        rep.obstructions.push_back("(iii) rho_k(S) = " + std::to_string(drop.rho_resolution) + " - " +
                                   std::to_string(drop.total) + " = " + std::to_string(drop.rho_surface) + " != 1");

    rep.rank_one = rep.obstructions.empty();
    if (surface.rank_one_assertion) {
        if (*surface.rank_one_assertion != rep.rank_one)
            rep.warnings.push_back(std::string("assert_rank_one = ") +
                                   (*surface.rank_one_assertion ? "true" : "false") +
                                   " overrides the computed rank-one check");
        rep.rank_one = *surface.rank_one_assertion;
    }
    return rep;
}

std::vector<IntMatrix> configuration_automorphisms(const SingularityProfile& profile, std::size_t cap) {
    const auto& form = profile.form;
    const auto& roots = profile.simple_roots;
    const auto lines = lines_on_surface(profile).classes;
    const std::size_t n = static_cast<std::size_t>(form.rank);

    // Spanning subset: K, then roots, then lines (0 = K, 1 = root, 2 = line).
    std::vector<DivisorClass> basis;
    std::vector<int> kinds;
    QMatrix rows;
    auto try_add = [&](const DivisorClass& c, int kind) {
        if (basis.size() == n) return;
        QMatrix trial = rows;
        trial.push_back(to_q(c));
        if (rank(trial) == trial.size()) {
            rows = std::move(trial);
            basis.push_back(c);
            kinds.push_back(kind);
        }
    };
    try_add(form.canonical, 0);
    for (const auto& r : roots) try_add(r, 1);
    for (const auto& l : lines) try_add(l, 2);
    if (basis.size() != n) throw ActionError("configuration_automorphisms: negative curves do not span the lattice");

    // Columns of S are the basis classes; g = T S^{-1}.
    QMatrix s(n, QVector(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) s[r][c] = basis[c][r];
    const auto sinv = *inverse(s);

    const std::set<DivisorClass> root_set(roots.begin(), roots.end());
    const std::set<DivisorClass> line_set(lines.begin(), lines.end());
    std::vector<IntMatrix> out;
    std::vector<DivisorClass> image(n);

    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == n) {
            IntMatrix g(n, IntVector(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    Rational v = 0;
                    for (std::size_t t = 0; t < n; ++t) v += Rational(image[t][r]) * sinv[t][c];
                    if (!is_integer(v)) return;
                    g[r][c] = to_int64(v);
                }
            for (const auto& r : roots)
                if (!root_set.count(dvdp::apply(g, r))) return;
            for (const auto& l : lines)
                if (!line_set.count(dvdp::apply(g, l))) return;
            out.push_back(std::move(g));
            if (out.size() > cap) throw ActionError("configuration_automorphisms: more than cap elements");
            return;
        }
        const std::vector<DivisorClass>* pool = nullptr;
        std::vector<DivisorClass> kpool{form.canonical};
        if (kinds[k] == 0) pool = &kpool;
        if (kinds[k] == 1) pool = &roots;
        if (kinds[k] == 2) pool = &lines;
        for (const auto& c : *pool) {
            bool ok = true;
            for (std::size_t q = 0; q < k && ok; ++q) {
                if (image[q] == c || pair(form, c, image[q]) != pair(form, basis[k], basis[q])) ok = false;
            }
            if (!ok) continue;
            image[k] = c;
            step(k + 1);
        }
    };
    step(0);
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix exceptional_permutation_matrix(const IntersectionForm& form, const std::vector<int>& perm) {
    if (form.model != LatticeModel::BlowUp || perm.size() != static_cast<std::size_t>(form.rank - 1))
        throw PreconditionError("exceptional_permutation_matrix: need one image per exceptional class");
    IntMatrix g(form.rank, IntVector(form.rank, 0));
    g[0][0] = 1;
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || hit[perm[i]])
            throw PreconditionError("exceptional_permutation_matrix: not a permutation");
        hit[perm[i]] = true;
        g[perm[i] + 1][i + 1] = 1;
    }
    return g;
}

}  // namespace dvdp
