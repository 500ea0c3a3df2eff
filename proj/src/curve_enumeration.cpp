// SPDX-License-Identifier: MIT

#include "dvdp/curve_enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace dvdp {

bool CurveSet::contains(const DivisorClass& c) const {
    return std::binary_search(classes.begin(), classes.end(), c);
}

namespace {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Fills y[pos..] so that the remaining entries sum to `sum` and their squares
// sum to `sumsq`. Pruned by Cauchy-Schwarz (sum^2 <= m * sumsq) and parity.
void search_tail(std::vector<std::int64_t>& y, std::size_t pos, std::int64_t sum, std::int64_t sumsq,
                 const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    const auto m = static_cast<std::int64_t>(y.size() - pos);
    if (m == 0) {
        if (sum == 0 && sumsq == 0) emit(y);
        return;
    }
    if (sumsq < 0) return;
    if (sum * sum > m * sumsq) return;
    if (((sum - sumsq) % 2) != 0) return;
    const std::int64_t bound = isqrt(sumsq);
    for (std::int64_t v = -bound; v <= bound; ++v) {
        const std::int64_t rest_sum = sum - v;
        const std::int64_t rest_sq = sumsq - v * v;
        if (rest_sum * rest_sum > (m - 1) * rest_sq) continue;
        y[pos] = v;
        search_tail(y, pos + 1, rest_sum, rest_sq, emit);
    }
}

std::vector<DivisorClass> blowup_search(const IntersectionForm& form, std::int64_t self, std::int64_t kdot) {
    // D = x l + sum c_i e_i with y_i = -c_i gives
    //   D.K = -3x + sum y_i,   D^2 = x^2 - sum y_i^2.
    const std::int64_t n = form.rank - 1;
    auto violates = [&](std::int64_t x) {
        const std::int64_t s = kdot + 3 * x;
        const std::int64_t q = x * x - self;
        return q < 0 || s * s > n * q;
    };
    // The constraint (kdot + 3x)^2 <= n (x^2 - self) is a convex quadratic in x
    // when n < 9, so its integer solutions form an interval around the vertex.
    if (n >= 9) throw PreconditionError("coefficient search requires fewer than nine exceptional classes");
    const double vertex = -3.0 * static_cast<double>(kdot) / static_cast<double>(9 - n);
    std::vector<DivisorClass> out;
    std::vector<std::int64_t> y(static_cast<std::size_t>(n));
    auto run = [&](std::int64_t x) {
        search_tail(y, 0, kdot + 3 * x, x * x - self, [&](const std::vector<std::int64_t>& ys) {
            DivisorClass d(form.rank);
            d[0] = x;
            for (std::int64_t i = 0; i < n; ++i) d[i + 1] = -ys[i];
            out.push_back(std::move(d));
        });
    };
    // The integer minimiser of the quadratic is floor(vertex) or the next
    // integer, so scanning outward from both covers the feasible interval.
    const auto lo = static_cast<std::int64_t>(std::floor(vertex));
    for (std::int64_t x = lo; !violates(x); --x) run(x);
    for (std::int64_t x = lo + 1; !violates(x); ++x) run(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DivisorClass> hirzebruch_search(std::int64_t self, std::int64_t kdot) {
    // D = aM + bF gives D.K = -2b and D^2 = -2a^2 + 2ab.
    std::vector<DivisorClass> out;
    if (kdot % 2 != 0) return out;
    const std::int64_t b = -kdot / 2;
    const std::int64_t disc = b * b - 2 * self;
    const std::int64_t r = isqrt(disc);
    if (r < 0 || r * r != disc) return out;
    for (std::int64_t num : {b - r, b + r}) {
        if (num % 2 != 0) continue;
        out.push_back({num / 2, b});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DivisorClass> orbit_closure(const IntersectionForm& form, const std::vector<DivisorClass>& seeds,
                                        const std::vector<DivisorClass>& generators) {
    std::set<DivisorClass> seen(seeds.begin(), seeds.end());
    std::deque<DivisorClass> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        DivisorClass x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            DivisorClass y = reflect(form, x, g);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<DivisorClass> classes_with(const IntersectionForm& form, std::int64_t self, std::int64_t kdot) {
    if (form.model == LatticeModel::Hirzebruch) return hirzebruch_search(self, kdot);
    return blowup_search(form, self, kdot);
}

CurveSet roots(const IntersectionForm& form) { return {form, CurveKind::Root, classes_with(form, -2, 0)}; }

CurveSet line_classes(const IntersectionForm& form) { return {form, CurveKind::Line, classes_with(form, -1, -1)}; }

std::vector<DivisorClass> simple_roots(const IntersectionForm& form) {
    if (form.model == LatticeModel::Hirzebruch) return {{1, 0}};
    const int n = form.rank - 1;
    std::vector<DivisorClass> out;
    if (n >= 3) {
        DivisorClass a0(form.rank, 0);
        a0[0] = 1;
        a0[1] = a0[2] = a0[3] = -1;
        out.push_back(a0);
    }
    for (int i = 1; i < n; ++i) {
        DivisorClass a(form.rank, 0);
        a[i] = 1;
        a[i + 1] = -1;
        out.push_back(a);
    }
    return out;
}

DivisorClass reflect(const IntersectionForm& form, const DivisorClass& x, const DivisorClass& root) {
    return add(x, scale(pair(form, x, root), root));
}

CurveSet roots_by_reflection(const IntersectionForm& form) {
    const auto simple = simple_roots(form);
    std::vector<DivisorClass> seeds = simple;
    for (const auto& s : simple) seeds.push_back(scale(-1, s));
    return {form, CurveKind::Root, orbit_closure(form, seeds, simple)};
}

CurveSet lines_by_orbit(const IntersectionForm& form) {
    if (form.model == LatticeModel::Hirzebruch) return {form, CurveKind::Line, {}};
    const int n = form.rank - 1;
    std::vector<DivisorClass> seeds;
    seeds.push_back(basis_vector(form, n));
    if (n >= 2) {
        DivisorClass l12(form.rank, 0);
        l12[0] = 1;
        l12[1] = l12[2] = -1;
        seeds.push_back(l12);
    }
    return {form, CurveKind::Line, orbit_closure(form, seeds, simple_roots(form))};
}

namespace {

struct EnumerationCache {
    std::mutex mutex;
    std::map<int, std::vector<DivisorClass>> roots;
    std::map<int, std::vector<DivisorClass>> lines;
};

EnumerationCache& cache() {
    static EnumerationCache c;
    return c;
}

bool is_library_form(const IntersectionForm& form) {
    if (form.degree < 1 || form.degree > 8) return false;
    return form == lattice_for_degree(form.degree);
}

}  // namespace

const std::vector<DivisorClass>& cached_line_classes(const IntersectionForm& form) {
    if (!is_library_form(form)) throw PreconditionError("cached_line_classes: form is not a library lattice");
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto it = c.lines.find(form.degree);
    if (it == c.lines.end()) it = c.lines.emplace(form.degree, classes_with(form, -1, -1)).first;
    return it->second;
}

const std::vector<DivisorClass>& cached_roots(const IntersectionForm& form) {
    if (!is_library_form(form)) throw PreconditionError("cached_roots: form is not a library lattice");
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto it = c.roots.find(form.degree);
    if (it == c.roots.end()) it = c.roots.emplace(form.degree, classes_with(form, -2, 0)).first;
    return it->second;
}

CurveSet lines_on_configuration(const IntersectionForm& form, const std::vector<DivisorClass>& config_roots) {
    const std::vector<DivisorClass> all =
        is_library_form(form) ? cached_line_classes(form) : classes_with(form, -1, -1);
    CurveSet out{form, CurveKind::Line, {}};
    for (const auto& line : all) {
        bool ok = true;
        for (const auto& r : config_roots)
            if (pair(form, line, r) < 0) {
                ok = false;
                break;
            }
        if (ok) out.classes.push_back(line);
    }
    return out;
}

std::size_t DualGraph::degree_of(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& e : edges)
        if (e.a == v || e.b == v) d += static_cast<std::size_t>(e.multiplicity);
    return d;
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DualGraph dual_graph(const std::vector<DivisorClass>& classes, const IntersectionForm& form) {
    DualGraph g;
    g.vertices = classes;
    for (const auto& c : classes) g.self_intersection.push_back(square(form, c));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const std::int64_t p = pair(form, classes[i], classes[j]);
            if (p < 0)
                throw ConfigError("dual_graph: classes " + std::to_string(i) + " and " + std::to_string(j) +
                                  " pair negatively (" + std::to_string(p) + ")");
            if (p > 0) g.edges.push_back({i, j, p});
        }
    return g;
}

bool has_cycle(const DualGraph& g) {
    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) {
        if (e.multiplicity >= 2) return true;
        const auto ra = find(e.a);
        const auto rb = find(e.b);
        if (ra == rb) return true;
        parent[ra] = rb;
    }
    return false;
}

std::string render_ascii(const DualGraph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const char* glyph = g.self_intersection[v] == -2 ? "○" : g.self_intersection[v] == -1 ? "●" : "#";
        os << glyph << ' ' << v << " [";
        for (std::size_t i = 0; i < g.vertices[v].size(); ++i) os << (i ? "," : "") << g.vertices[v][i];
        os << "] --";
        for (const auto& e : g.edges) {
            if (e.a != v && e.b != v) continue;
            const std::size_t other = e.a == v ? e.b : e.a;
            os << ' ' << other;
            if (e.multiplicity > 1) os << "(x" << e.multiplicity << ")";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace dvdp
