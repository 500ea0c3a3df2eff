// SPDX-License-Identifier: MIT

#include "dvdp/divisor_calculus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace dvdp {

namespace {

// Intersection matrix of the exceptional curves of a point: -2 on the
// diagonal and 1 for adjacent components.
QMatrix exceptional_matrix(const AdeType& t) {
    QMatrix m(t.n, QVector(t.n, Rational(0)));
    for (int i = 0; i < t.n; ++i) m[i][i] = -2;
    for (auto [a, b] : canonical_edges(t)) m[a][b] = m[b][a] = 1;
    return m;
}

Rational quadratic(const QMatrix& g, const QVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += b[i] * g[i][j] * b[j];
    return s;
}

QVector to_qvec(const std::vector<std::int64_t>& v) {
    QVector out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

bool is_a(const AdeType& t) { return t.family == Family::A; }
bool is_d5(const AdeType& t) { return t.family == Family::D && t.n == 5; }
bool is_e6(const AdeType& t) { return t.family == Family::E && t.n == 6; }

QVector delta(int n, std::initializer_list<int> ones) {
    QVector v(n, Rational(0));
    for (int j : ones) v[j - 1] += 1;
    return v;
}

QVector qv(std::initializer_list<Rational> xs) { return QVector(xs); }

}  // namespace

// ---------------------------------------------------------------------------
// Prescribed pairings

ComponentDivisor solve_cartan(const AdeType& type, const QVector& targets) {
    if (targets.size() != static_cast<std::size_t>(type.n))
        throw PreconditionError("expected " + std::to_string(type.n) + " targets for " + type.label());
    const QMatrix g = exceptional_matrix(type);
    QVector rhs;
    for (const auto& t : targets) rhs.push_back(-t);
    const auto sol = solve(g, rhs);
    if (!sol) throw PreconditionError("singular intersection matrix for " + type.label());
    ComponentDivisor out;
    out.coefficients = *sol;
    out.self_pairing = quadratic(g, *sol);
    return out;
}

Rational cartan_self_pairing(const AdeType& type, const QVector& b) {
    if (b.size() != static_cast<std::size_t>(type.n))
        throw PreconditionError("expected " + std::to_string(type.n) + " coefficients for " + type.label());
    return quadratic(exceptional_matrix(type), b);
}

ComponentDivisor solve_prescribed_pairings(const SingularityProfile& profile, const PrescribedPairing& req) {
    const auto roots = profile.point_roots(req.point);
    const std::size_t n = roots.size();
    if (req.targets.size() != n)
        throw PreconditionError("expected " + std::to_string(n) + " targets for point " + req.point.id);
    QMatrix g(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = pair(profile.form, roots[i], roots[j]);
    QVector rhs;
    for (const auto& t : req.targets) rhs.push_back(-t);
    const auto sol = solve(g, rhs);
    if (!sol) throw PreconditionError("intersection matrix of point " + req.point.id + " is singular");
    ComponentDivisor out;
    out.coefficients = *sol;
    out.divisor = combine_q(*sol, roots);
    out.self_pairing = pair(profile.form, out.divisor, out.divisor);
    return out;
}

ClosedForm closed_form_chain(int n, int j0) {
    if (n < 1 || n > 8 || j0 < 1 || j0 > n)
        throw PreconditionError("closed_form_chain needs 1 <= j0 <= n <= 8, got n=" + std::to_string(n) +
                                ", j0=" + std::to_string(j0));
    ClosedForm f;
    f.label = "A" + std::to_string(n) + " delta_" + std::to_string(j0);
    f.type = {Family::A, n};
    f.targets = delta(n, {j0});
    for (int j = 1; j <= n; ++j) {
        if (j <= j0)
            f.coefficients.push_back(Rational(static_cast<long>((n - j0 + 1) * j), n + 1));
        else
            f.coefficients.push_back(Rational(static_cast<long>(j0 * (n - j + 1)), n + 1));
    }
    f.self_pairing = -Rational(static_cast<long>((n - j0 + 1) * j0), n + 1);
    return f;
}

ClosedForm closed_form_chain_symmetric(int n, int j0) {
    if (n < 1 || n > 8 || j0 < 1 || 2 * j0 > n + 1)
        throw PreconditionError("closed_form_chain_symmetric needs 1 <= j0 <= ceil(n/2), n <= 8");
    ClosedForm f;
    f.label = "A" + std::to_string(n) + " delta_" + std::to_string(j0) + "+delta_" + std::to_string(n - j0 + 1);
    f.type = {Family::A, n};
    f.targets = delta(n, {j0, n - j0 + 1});
    for (int j = 1; j <= n; ++j) f.coefficients.emplace_back(std::min({j, n - j + 1, j0}));
    f.self_pairing = -2 * j0;
    return f;
}

std::vector<ClosedForm> fork_closed_forms(Family family) {
    using R = Rational;
    std::vector<ClosedForm> out;
    if (family == Family::D) {
        const AdeType t{Family::D, 5};
        out.push_back({"D5 delta_1+delta_2", t, delta(5, {1, 2}), qv({2, 2, 3, 2, 1}), R(-4)});
        out.push_back({"D5 delta_1", t, delta(5, {1}), qv({R(5, 4), R(3, 4), R(3, 2), 1, R(1, 2)}), R(-5, 4)});
        out.push_back({"D5 delta_3", t, delta(5, {3}), qv({R(3, 2), R(3, 2), 3, 2, 1}), R(-3)});
        out.push_back({"D5 delta_4", t, delta(5, {4}), qv({1, 1, 2, 2, 1}), R(-2)});
        out.push_back({"D5 delta_5", t, delta(5, {5}), qv({R(1, 2), R(1, 2), 1, 1, 1}), R(-1)});
    } else if (family == Family::E) {
        const AdeType t{Family::E, 6};
        out.push_back({"E6 delta_1+delta_2", t, delta(6, {1, 2}), qv({2, 2, 3, 3, 4, 2}), R(-4)});
        out.push_back({"E6 delta_3+delta_4", t, delta(6, {3, 4}), qv({3, 3, 6, 6, 8, 4}), R(-12)});
        out.push_back(
            {"E6 delta_1", t, delta(6, {1}), qv({R(4, 3), R(2, 3), R(5, 3), R(4, 3), 2, 1}), R(-4, 3)});
        out.push_back(
            {"E6 delta_3", t, delta(6, {3}), qv({R(5, 3), R(4, 3), R(10, 3), R(8, 3), 4, 2}), R(-10, 3)});
        out.push_back({"E6 delta_5", t, delta(6, {5}), qv({2, 2, 4, 4, 6, 3}), R(-6)});
        out.push_back({"E6 delta_6", t, delta(6, {6}), qv({1, 1, 2, 2, 3, 2}), R(-2)});
    } else {
        throw PreconditionError("fork closed forms exist for D_5 and E_6 only");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Self-intersection bounds

namespace {

// Completed-square forms scaled to integers: returns (scale, scale * (M)^2).
std::pair<std::int64_t, std::int64_t> scaled_completed_square(const AdeType& t, const std::int64_t* b) {
    auto sq = [](std::int64_t x) { return x * x; };
    if (is_a(t)) {
        const int n = t.n;
        std::int64_t s = -(sq(b[0]) + sq(b[n - 1]));
        for (int j = 0; j + 1 < n; ++j) s -= sq(b[j] - b[j + 1]);
        return {1, s};
    }
    if (is_d5(t)) {
        const std::int64_t s = -sq(2 * b[0] - b[2]) - sq(2 * b[1] - b[2]) - 2 * sq(b[2] - b[3]) -
                               2 * sq(b[3] - b[4]) - 2 * sq(b[4]);
        return {2, s};
    }
    if (is_e6(t)) {
        const std::int64_t s = -3 * sq(2 * b[0] - b[2]) - 3 * sq(2 * b[1] - b[3]) - sq(3 * b[2] - 2 * b[4]) -
                               sq(3 * b[3] - 2 * b[4]) - sq(2 * b[4] - 3 * b[5]) - 3 * sq(b[5]);
        return {6, s};
    }
    throw PreconditionError("no completed-square formula for " + t.label());
}

// Direct evaluation against the exceptional matrix, in integers.
std::int64_t gram_self_pairing_int(const std::vector<std::pair<int, int>>& edges, int n, const std::int64_t* b) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s -= 2 * b[i] * b[i];
    for (auto [i, j] : edges) s += 2 * b[i] * b[j];
    return s;
}

}  // namespace

Rational completed_square_self_pairing(const AdeType& type, const std::vector<std::int64_t>& b) {
    if (b.size() != static_cast<std::size_t>(type.n))
        throw PreconditionError("expected " + std::to_string(type.n) + " coefficients");
    const auto [scale, value] = scaled_completed_square(type, b.data());
    return Rational(value, scale);
}

std::optional<BoundCase> bound_case(const AdeType& type, int case_no) {
    const int n = type.n;
    BoundCase c;
    switch (case_no) {
        case 2:
            if (!is_a(type)) return std::nullopt;
            c.lower.assign(n, 1);
            c.bound = -2;
            break;
        case 3:
            if (!is_a(type) || n < 3) return std::nullopt;
            c.lower.assign(n, 2);
            c.lower.front() = c.lower.back() = 1;
            c.bound = -4;
            break;
        case 4:
            if (!is_a(type) || n < 5) return std::nullopt;
            c.lower.assign(n, 3);
            c.lower[0] = c.lower[n - 1] = 1;
            c.lower[1] = c.lower[n - 2] = 2;
            c.bound = -6;
            break;
        case 5:
            if (!is_d5(type)) return std::nullopt;
            c.lower = {2, 2, 3, 2, 1};
            c.bound = -4;
            break;
        case 6:
            if (!is_e6(type)) return std::nullopt;
            c.lower = {2, 2, 3, 3, 4, 2};
            c.bound = -4;
            break;
        default:
            return std::nullopt;
    }
    c.equality = c.lower;
    return c;
}

bool ade1_check(const AdeType& type, const std::vector<std::int64_t>& b, int case_no) {
    if (b.size() != static_cast<std::size_t>(type.n))
        throw PreconditionError("expected " + std::to_string(type.n) + " coefficients for " + type.label());
    if (!is_a(type) && !is_d5(type) && !is_e6(type))
        throw PreconditionError("self-intersection bounds cover A_n, D_5 and E_6 only");
    const Rational gram = cartan_self_pairing(type, to_qvec(b));
    if (completed_square_self_pairing(type, b) != gram) return false;
    if (case_no == 1) return is_integer(gram) && gram <= 0 && boost::multiprecision::numerator(gram) % 2 == 0;
    const auto c = bound_case(type, case_no);
    if (!c) throw PreconditionError("case " + std::to_string(case_no) + " does not apply to " + type.label());
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] < c->lower[j])
            throw PreconditionError("coefficient b_" + std::to_string(j + 1) + " is below the hypothesis of case " +
                                    std::to_string(case_no));
    if (gram > c->bound) return false;
    return (gram == c->bound) == (b == c->equality);
}

namespace {

// Runs `body` over all vectors in the box [lo_j, hi], split over threads by
// the first coordinate. `body` returns false to report a counterexample.
SweepReport sweep_box(const std::vector<std::int64_t>& lo, std::int64_t hi,
                      const std::function<bool(const std::int64_t*)>& body) {
    const int n = static_cast<int>(lo.size());
    SweepReport report;
    std::atomic<std::uint64_t> checked{0};
    std::mutex mu;
    std::vector<std::int64_t> first_bad;
    bool bad = false;
    std::vector<std::int64_t> firsts;
    for (std::int64_t x = lo[0]; x <= hi; ++x) firsts.push_back(x);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<std::int64_t> b(n);
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= firsts.size()) return;
            b[0] = firsts[k];
            for (int j = 1; j < n; ++j) b[j] = lo[j];
            std::uint64_t local = 0;
            for (;;) {
                ++local;
                if (!body(b.data())) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!bad || b < first_bad) first_bad = b;
                    bad = true;
                }
                int j = n - 1;
                while (j >= 1 && b[j] == hi) {
                    b[j] = lo[j];
                    --j;
                }
                if (j < 1) break;
                ++b[j];
            }
            checked += local;
        }
    };
    const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < hw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    report.checked = checked.load();
    if (bad) report.counterexample = first_bad;
    return report;
}

}  // namespace

SweepReport completed_square_sweep(const AdeType& type, std::int64_t lo, std::int64_t hi) {
    if (!is_a(type) && !is_d5(type) && !is_e6(type))
        throw PreconditionError("no completed-square formula for " + type.label());
    const auto edges = canonical_edges(type);
    const int n = type.n;
    return sweep_box(std::vector<std::int64_t>(n, lo), hi, [&](const std::int64_t* b) {
        const auto [scale, value] = scaled_completed_square(type, b);
        return value == scale * gram_self_pairing_int(edges, n, b);
    });
}

SweepReport bound_case_sweep(const AdeType& type, int case_no, std::int64_t hi) {
    const auto c = bound_case(type, case_no);
    if (!c) throw PreconditionError("case " + std::to_string(case_no) + " does not apply to " + type.label());
    const auto edges = canonical_edges(type);
    const int n = type.n;
    return sweep_box(c->lower, hi, [&](const std::int64_t* b) {
        const std::int64_t m2 = gram_self_pairing_int(edges, n, b);
        if (m2 > c->bound) return false;
        const bool at_equality = std::equal(b, b + n, c->equality.begin());
        return (m2 == c->bound) == at_equality;
    });
}

// ---------------------------------------------------------------------------
// Lines -K - M

DivisorClass anticanonical_line(const SingularityProfile& profile, const std::string& point_id, ForkKind kind,
                                const SurfaceOverK* surface) {
    const auto& form = profile.form;
    if (form.degree != 1) throw PreconditionError("anticanonical_line needs a degree-1 surface");
    const auto& pt = profile.point(point_id);
    std::vector<std::int64_t> coeffs;
    switch (kind) {
        case ForkKind::Chain:
            if (!is_a(pt.type)) throw PreconditionError("point " + point_id + " is not a chain");
            coeffs.assign(pt.type.n, 1);
            break;
        case ForkKind::ForkD5:
            if (!is_d5(pt.type)) throw PreconditionError("point " + point_id + " is not of type D5");
            coeffs = {1, 1, 2, 2, 1};
            break;
        case ForkKind::ForkE6:
            if (!is_e6(pt.type)) throw PreconditionError("point " + point_id + " is not of type E6");
            coeffs = {1, 1, 2, 2, 3, 2};
            break;
    }
    const auto roots = profile.point_roots(pt);
    const DivisorClass e = subtract(anticanonical(form), combine(coeffs, roots));
    if (square(form, e) != -1 || pair(form, e, form.canonical) != -1)
        throw ConfigError("-K - M is not a line class for point " + point_id);
    for (std::size_t i = 0; i < profile.simple_roots.size(); ++i)
        if (pair(form, e, profile.simple_roots[i]) < 0)
            throw ConfigError("-K - M meets root " + std::to_string(i) + " negatively");
    if (surface)
        for (std::size_t k = 0; k < surface->action.generators.size(); ++k)
            if (dvdp::apply(surface->action.generators[k], e) != e)
                throw ConfigError("-K - M is moved by galois.matrices[" + std::to_string(k) + "]");
    return e;
}

// ---------------------------------------------------------------------------
// Special divisors D

char case_letter(DivDCase c) { return static_cast<char>('a' + static_cast<int>(c)); }

DivDCase parse_divd_case(char letter) {
    if (letter < 'a' || letter > 'g') throw InputError(std::string("unknown divisor case '") + letter + "'");
    return static_cast<DivDCase>(letter - 'a');
}

std::vector<std::vector<std::int64_t>> divd_expected_pattern(DivDCase which, const std::vector<int>& lens) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < lens.size(); ++i) out.emplace_back(lens[i], 0);
    auto bump = [&](std::size_t i, int j) { out[i][j - 1] += 1; };  // 1-based j
    switch (which) {
        case DivDCase::a:
        case DivDCase::c:
            for (std::size_t i = 0; i < lens.size(); ++i) {
                bump(i, 1);
                bump(i, lens[i]);
            }
            break;
        case DivDCase::b:
            bump(0, 2);
            bump(0, lens[0] - 1);
            break;
        case DivDCase::d:
            bump(0, 2);
            bump(0, lens[0] - 1);
            bump(1, 1);
            bump(1, lens[1]);
            break;
        case DivDCase::e:
            bump(0, 3);
            bump(0, lens[0] - 2);
            break;
        case DivDCase::f:
        case DivDCase::g:
            bump(0, 1);
            bump(0, 2);
            bump(1, 1);
            bump(1, lens[1]);
            break;
    }
    return out;
}

DivDResult table_divD(DivDCase which, const SingularityProfile& profile, const std::vector<std::string>& chain_ids) {
    const auto& form = profile.form;
    const int d = form.degree;
    const int r = static_cast<int>(chain_ids.size());
    const std::string row = std::string("row (") + case_letter(which) + ")";
    DivDResult out;
    out.which = which;
    std::vector<SingularPointData> pts;
    for (const auto& id : chain_ids) pts.push_back(profile.point(id));
    {
        std::set<std::string> distinct(chain_ids.begin(), chain_ids.end());
        if (distinct.size() != chain_ids.size()) throw PreconditionError(row + ": repeated point id");
    }
    for (const auto& p : pts) {
        out.chains.push_back(profile.point_roots(p));
        out.chain_lengths.push_back(p.type.n);
    }
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw PreconditionError(row + ": " + what);
    };
    auto all_chains = [&](int from) {
        for (int i = from; i < r; ++i) need(is_a(pts[i].type), "point " + chain_ids[i] + " must be of type A");
    };
    switch (which) {
        case DivDCase::a:
            need(d == 2 && r == 2, "needs degree 2 and two chains");
            all_chains(0);
            break;
        case DivDCase::b:
            need(d == 2 && r == 1, "needs degree 2 and one chain");
            all_chains(0);
            need(out.chain_lengths[0] >= 4, "needs n(1) >= 4");
            break;
        case DivDCase::c:
            need(d == 1 && r == 3, "needs degree 1 and three chains");
            all_chains(0);
            break;
        case DivDCase::d:
            need(d == 1 && r == 2, "needs degree 1 and two chains");
            all_chains(0);
            need(out.chain_lengths[0] >= 4, "needs n(1) >= 4");
            break;
        case DivDCase::e:
            need(d == 1 && r == 1, "needs degree 1 and one chain");
            all_chains(0);
            need(out.chain_lengths[0] >= 6, "needs n(1) >= 6");
            break;
        case DivDCase::f:
            need(d == 1 && r == 2, "needs degree 1, a D5 point and a chain");
            need(is_d5(pts[0].type), "first point must be of type D5");
            all_chains(1);
            break;
        case DivDCase::g:
            need(d == 1 && r == 2, "needs degree 1, an E6 point and a chain");
            need(is_e6(pts[0].type), "first point must be of type E6");
            all_chains(1);
            break;
    }

    const DivisorClass mk = anticanonical(form);
    DivisorClass D = (d == 2) ? mk : scale(2, mk);
    auto sub_chain = [&](std::size_t i, const std::vector<std::int64_t>& c) {
        D = subtract(D, combine(c, out.chains[i]));
    };
    auto ones = [](int n, std::int64_t v) { return std::vector<std::int64_t>(n, v); };
    switch (which) {
        case DivDCase::a:
        case DivDCase::c:
            for (int i = 0; i < r; ++i) sub_chain(i, ones(out.chain_lengths[i], 1));
            break;
        case DivDCase::b:
        case DivDCase::d: {
            auto c = ones(out.chain_lengths[0], 2);
            c.front() = c.back() = 1;
            sub_chain(0, c);
            if (which == DivDCase::d) sub_chain(1, ones(out.chain_lengths[1], 1));
            break;
        }
        case DivDCase::e: {
            const int n = out.chain_lengths[0];
            auto c = ones(n, 3);
            c[0] = c[n - 1] = 1;
            c[1] = c[n - 2] = 2;
            sub_chain(0, c);
            break;
        }
        case DivDCase::f:
            sub_chain(0, {2, 2, 3, 2, 1});
            sub_chain(1, ones(out.chain_lengths[1], 1));
            break;
        case DivDCase::g:
            sub_chain(0, {2, 2, 3, 3, 4, 2});
            sub_chain(1, ones(out.chain_lengths[1], 1));
            break;
    }
    out.divisor = D;

    if (square(form, D) != -2) throw ConfigError(row + ": D^2 = " + std::to_string(square(form, D)) + ", expected -2");
    if (pair(form, D, mk) != 2) throw ConfigError(row + ": D.(-K) = " + std::to_string(pair(form, D, mk)));
    for (std::size_t i = 0; i < out.chains.size(); ++i) {
        std::vector<std::int64_t> p;
        for (const auto& m : out.chains[i]) p.push_back(pair(form, D, m));
        out.pairings.push_back(std::move(p));
    }
    if (out.pairings != divd_expected_pattern(which, out.chain_lengths))
        throw ConfigError(row + ": pairing pattern of D differs from the expected one");
    return out;
}

std::vector<std::vector<int>> admissible_lengths(DivDCase which, SpecialCondition condition) {
    if (condition == SpecialCondition::A) {
        switch (which) {
            case DivDCase::a: return {{5, 2}, {3, 3}};
            case DivDCase::b: return {{7}};
            case DivDCase::c: return {{5, 2, 1}, {3, 3, 1}};
            case DivDCase::d: return {{7, 1}, {5, 2}, {4, 4}};
            case DivDCase::e: return {{8}};
            case DivDCase::f: return {{5, 3}};
            case DivDCase::g: return {{6, 2}};
        }
    } else {
        switch (which) {
            case DivDCase::a: return {{3, 1}};
            case DivDCase::b: return {{5}};
            case DivDCase::d: return {{5, 1}};
            case DivDCase::e: return {{7}};
            default: return {};
        }
    }
    return {};
}

namespace {

// Chain lengths in the order used by the admissible lists: rows (a) and (c)
// treat their chains symmetrically and are compared in descending order.
std::vector<int> normalised_lengths(DivDCase which, std::vector<int> lens) {
    if (which == DivDCase::a || which == DivDCase::c) std::sort(lens.rbegin(), lens.rend());
    return lens;
}

// Solver for "R is a non-negative integer combination of the chain roots".
struct RootSpanSolver {
    const IntersectionForm& form;
    std::vector<DivisorClass> roots;
    IntMatrix numer;  // denom * inverse Gram
    std::int64_t denom = 1;

    RootSpanSolver(const IntersectionForm& f, std::vector<DivisorClass> rs) : form(f), roots(std::move(rs)) {
        const std::size_t n = roots.size();
        QMatrix g(n, QVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g[i][j] = pair(form, roots[i], roots[j]);
        const auto inv = inverse(g);
        if (!inv) throw ConfigError("chain roots are linearly dependent");
        Integer l = 1;
        for (const auto& row : *inv)
            for (const auto& x : row) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
        denom = static_cast<std::int64_t>(l);
        numer.assign(n, IntVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) numer[i][j] = to_int64((*inv)[i][j] * denom);
    }

    // Coefficients c with R = sum c_i r_i, when they exist and are integral.
    std::optional<std::vector<std::int64_t>> coefficients(const DivisorClass& r) const {
        const std::size_t n = roots.size();
        IntVector p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = pair(form, r, roots[i]);
        std::vector<std::int64_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(numer[i][j], p[j]));
            if (s % denom != 0) return std::nullopt;
            c[i] = s / denom;
        }
        if (combine(c, roots) != r) return std::nullopt;
        return c;
    }
};

}  // namespace

Decomposition decompose_special(const DivDResult& dres, const SingularityProfile& profile) {
    const auto& form = profile.form;
    std::vector<DivisorClass> chain_roots;
    for (const auto& ch : dres.chains) chain_roots.insert(chain_roots.end(), ch.begin(), ch.end());
    const RootSpanSolver solver(form, chain_roots);
    const auto lines = lines_on_surface(profile).classes;

    struct Candidate {
        std::vector<DivisorClass> parts;
        std::vector<std::int64_t> rem;
    };
    auto effective = [](const std::vector<std::int64_t>& c) {
        return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
    };
    auto is_zero = [](const std::vector<std::int64_t>& c) {
        return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
    };

    std::optional<Candidate> best;
    SpecialCondition cond = SpecialCondition::A;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (pair(form, lines[i], lines[j]) != 0) continue;
            const DivisorClass rem = subtract(subtract(dres.divisor, lines[i]), lines[j]);
            const auto c = solver.coefficients(rem);
            if (!c || !effective(*c)) continue;
            if (!best || (is_zero(*c) && !is_zero(best->rem))) best = Candidate{{lines[i], lines[j]}, *c};
            if (is_zero(*c)) break;
        }
        if (best && is_zero(best->rem)) break;
    }
    if (!best) {
        cond = SpecialCondition::B;
        for (const auto& e : lines) {
            const DivisorClass rem = subtract(dres.divisor, scale(2, e));
            const auto c = solver.coefficients(rem);
            if (!c || !effective(*c)) continue;
            if (!best || (is_zero(*c) && !is_zero(best->rem))) best = Candidate{{e}, *c};
            if (is_zero(*c)) break;
        }
    }
    if (!best)
        throw ConfigError(std::string("row (") + case_letter(dres.which) +
                          "): no decomposition into lines found; the profile violates the hypotheses");

    Decomposition out;
    out.condition = cond;
    out.parts = best->parts;
    out.chain_lengths = dres.chain_lengths;
    std::size_t off = 0;
    for (const auto& ch : dres.chains) {
        out.remainder.emplace_back(best->rem.begin() + off, best->rem.begin() + off + ch.size());
        off += ch.size();
    }
    out.equivalent_to_parts = is_zero(best->rem);
    if (cond == SpecialCondition::A && !out.equivalent_to_parts)
        out.notes.push_back("condition (A) found only with a non-zero root remainder");

    out.meets_each_chain_once = true;
    for (const auto& e : out.parts)
        for (const auto& ch : dres.chains) {
            std::int64_t s = 0;
            for (const auto& m : ch) s += pair(form, e, m);
            if (s != 1) out.meets_each_chain_once = false;
        }

    QMatrix span;
    span.push_back(to_q(form.canonical));
    for (const auto& m : chain_roots) span.push_back(to_q(m));
    const std::size_t base_rank = rank(span);
    out.parts_in_span = true;
    for (const auto& e : out.parts) {
        auto with = span;
        with.push_back(to_q(e));
        if (rank(with) != base_rank) out.parts_in_span = false;
    }

    const auto lens = normalised_lengths(dres.which, dres.chain_lengths);
    const auto admissible = admissible_lengths(dres.which, cond);
    const bool listed = std::find(admissible.begin(), admissible.end(), lens) != admissible.end();
    if (cond == SpecialCondition::A) {
        out.lengths_admissible = !out.parts_in_span || listed;
        if (!out.parts_in_span) out.notes.push_back("parts outside the span of K and the chains: no length constraint");
    } else {
        out.lengths_admissible = listed;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corti systems

bool corti_evaluate(const CortiParams& p, const Rational& u, const Rational& v) {
    if (u < 0) return false;
    if (!(p.alpha - u > 0)) return false;
    if (!(p.alpha - u - v >= 0)) return false;
    if (p.d == 2) return 2 * p.alpha * u + p.beta * v - p.gamma >= 0 && 4 * u * u + 4 * u * v + 2 * v * v - p.gamma <= 0;
    if (p.d == 1)
        return p.alpha * u + p.beta * v - p.gamma >= 0 && 4 * u * u + 4 * u * v + 4 * v * v - 3 * p.gamma <= 0;
    throw PreconditionError("Corti systems are defined for degrees 1 and 2");
}

bool corti_special(int d, const Rational& alpha, const Rational& gamma) {
    if (d == 2) return 2 * alpha * alpha - gamma > 0 && gamma - alpha * alpha <= 0;
    if (d == 1) return alpha * alpha - gamma > 0 && 4 * gamma - 3 * alpha * alpha <= 0;
    throw PreconditionError("Corti systems are defined for degrees 1 and 2");
}

std::pair<Rational, Rational> corti_special_witness(int d, const Rational& alpha, const Rational& gamma) {
    if (d == 2) return {gamma / (2 * alpha), Rational(0)};
    if (d == 1) return {gamma / alpha, Rational(0)};
    throw PreconditionError("Corti systems are defined for degrees 1 and 2");
}

std::optional<std::pair<Rational, Rational>> corti_search(const CortiParams& p, int bound) {
    if (bound < 1) throw PreconditionError("denominator bound must be at least 1");
    if (p.d != 1 && p.d != 2) throw PreconditionError("Corti systems are defined for degrees 1 and 2");
    // The quadratic inequality confines (u, v) to a box: |v| <= sqrt(gamma)
    // and 0 <= u <= (sqrt(3 gamma) + sqrt(gamma)) / 2 covers both degrees.
    const double g = std::max(0.0, p.gamma.convert_to<double>());
    const double vmax = std::sqrt(g) + 1.0;
    const double umax = (std::sqrt(3.0 * g) + std::sqrt(g)) / 2.0 + 1.0;
    std::set<Rational> us, vs;
    const long pmax = 8L * bound;
    for (long q = 1; q <= bound; ++q)
        for (long num = -pmax; num <= pmax; ++num) {
            const double x = static_cast<double>(num) / static_cast<double>(q);
            if (std::abs(x) <= vmax) vs.insert(Rational(num, q));
            if (num >= 0 && x <= umax) us.insert(Rational(num, q));
        }
    for (const auto& u : us)
        for (const auto& v : vs)
            if (corti_evaluate(p, u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

bool pencil_degeneration(int d, const Rational& gamma) {
    if (d != 1 && d != 2) throw PreconditionError("pencil degeneration is defined for degrees 1 and 2");
    if (gamma <= 0) throw PreconditionError("gamma must be positive");
    return is_rational_square(gamma / d);
}

// ---------------------------------------------------------------------------
// Boundary cycles

CycleWitness boundary_cycle_witness(const SingularityProfile& profile, const std::string& point_id) {
    const auto& form = profile.form;
    const int d = form.degree;
    const auto& pt = profile.point(point_id);
    const auto roots = profile.point_roots(pt);
    const int n = pt.type.n;
    const DivisorClass mk = anticanonical(form);
    CycleWitness w;
    std::optional<QVector> pencil_m;  // M of the degenerate pencil, if any
    Rational pencil_a;
    if (is_a(pt.type) && d == 2) {
        w.curve = subtract(mk, combine(std::vector<std::int64_t>(n, 1), roots));
        for (int j = 0; j < n; ++j) w.cycle_components.push_back(j);
    } else if (is_a(pt.type) && d == 1 && n >= 3) {
        std::vector<std::int64_t> c(n, 2);
        c.front() = c.back() = 1;
        w.curve = subtract(scale(2, mk), combine(c, roots));
        for (int j = 1; j + 1 < n; ++j) w.cycle_components.push_back(j);
    } else if (is_d5(pt.type) && d == 1) {
        w.curve = subtract(scale(2, mk), combine({2, 2, 3, 2, 1}, roots));
        w.cycle_components = {0, 1, 2};
    } else {
        throw PreconditionError("boundary cycles need an A_n point in degree 2, an A_n point with n >= 3 or a D_5 "
                                "point in degree 1");
    }
    for (const auto& m : roots) w.pairings.push_back(pair(form, w.curve, m));

    std::vector<DivisorClass> verts;
    for (int j : w.cycle_components) verts.push_back(roots[j]);
    verts.push_back(w.curve);
    w.cycle = dual_graph(verts, form);
    w.is_cycle = has_cycle(w.cycle);

    // Degenerate pencil a(-K) - M (b = 1) for the symmetric chain pattern at
    // i0 = 1 (d = 2) or i0 = 2 (d = 1), the two cases where d a^2 = 2 i0 b^2.
    if (is_a(pt.type)) {
        const int i0 = d == 2 ? 1 : 2;
        const auto cf = closed_form_chain_symmetric(n, i0);
        const Rational gamma = -cf.self_pairing;
        if (pencil_degeneration(d, gamma)) {
            pencil_m = cf.coefficients;
            pencil_a = 0;
            // a^2 d = gamma with a > 0.
            for (int k = 1; k <= 16 && pencil_a == 0; ++k)
                if (Rational(k * k) * d == gamma) pencil_a = k;
        }
    } else if (is_d5(pt.type)) {
        for (const auto& cf : fork_closed_forms(Family::D)) {
            const bool single = std::count_if(cf.targets.begin(), cf.targets.end(), [](const Rational& x) {
                                    return x != 0;
                                }) == 1;
            const bool tail = cf.targets[2] != 0 || cf.targets[3] != 0 || cf.targets[4] != 0;
            if (!single || !tail) continue;
            if (pencil_degeneration(1, -cf.self_pairing)) {
                pencil_m = cf.coefficients;
                pencil_a = 1;
                for (int k = 1; k <= 16; ++k)
                    if (Rational(k * k) == -cf.self_pairing) pencil_a = k;
            }
        }
    }
    if (pencil_m) {
        QDivisor pencil = to_q(mk);
        for (auto& x : pencil) x *= pencil_a;
        const QDivisor m = combine_q(*pencil_m, roots);
        for (std::size_t i = 0; i < pencil.size(); ++i) pencil[i] -= m[i];
        w.degenerate_pencil = pencil;
        w.pencil_pairing = pair(form, pencil, to_q(w.curve));
    }
    return w;
}

// ---------------------------------------------------------------------------
// D_5^+ and E_6^+ families

std::string position_label(FamilyPosition position) {
    switch (position) {
        case FamilyPosition::D5_M3M4: return "D5+ at M3uM4";
        case FamilyPosition::D5_M5: return "D5+ at M5";
        case FamilyPosition::E6_M5M6: return "E6+ at M5uM6";
    }
    return {};
}

FamilyValue de_plus_family(FamilyPosition position, const Rational& t) {
    FamilyValue f;
    AdeType type;
    switch (position) {
        case FamilyPosition::D5_M3M4:
            type = {Family::D, 5};
            f.t_min = 1;
            f.t_max = Rational(3, 2);
            f.coefficients = {t, t, 2 * t, Rational(2), Rational(1)};
            f.gamma = 4 * t * t - 8 * t + 6;
            break;
        case FamilyPosition::D5_M5:
            type = {Family::D, 5};
            f.t_min = 1;
            f.t_max = 2;
            f.coefficients = {Rational(1), Rational(1), Rational(2), Rational(2), t};
            f.gamma = 2 * t * t - 4 * t + 4;
            break;
        case FamilyPosition::E6_M5M6:
            type = {Family::E, 6};
            f.t_min = 1;
            f.t_max = Rational(4, 3);
            f.coefficients = {t, t, 2 * t, 2 * t, 3 * t, Rational(2)};
            f.gamma = 6 * t * t - 12 * t + 8;
            break;
    }
    if (t < f.t_min || t > f.t_max)
        throw PreconditionError("t = " + to_string(t) + " outside [" + to_string(f.t_min) + ", " + to_string(f.t_max) +
                                "] for " + position_label(position));
    f.gamma_gram = -cartan_self_pairing(type, f.coefficients);
    return f;
}

}  // namespace dvdp
