// SPDX-License-Identifier: MIT
//
// Regenerates the fixture catalog: one surface per catalog row and Picard
// rank value, the worked examples, and the no-minus counterparts of the
// minus-decoration rows. Each surface is found by searching the automorphism
// group of a representative configuration for cyclic and two-generator
// subgroups with the required rank and decorations.
//
// Usage: dvdp-make-fixtures <output dir>

#include "dvdp/catalog.hpp"
#include "dvdp/cylinder_oracle.hpp"
#include "dvdp/json_io.hpp"
#include "dvdp/reference_tables.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>

using namespace dvdp;

namespace {

using Predicate = std::function<bool(const SurfaceOverK&)>;

std::vector<std::string> rational_decorations(const SurfaceOverK& s) {
    std::vector<std::string> out;
    for (const auto& id : orbits(s).rational_points) {
        auto dec = decorate_point(s, id, FlagPolicy::ForceTrue);
        dec.variant.reset();
        out.push_back(dec.label());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_identity(const IntMatrix& g) { return g == identity_matrix(g.size()); }

// Searches for an action with rho_k(resolution) = rho, rank one and `extra`.
// Cyclic groups are tried first, then groups generated by two elements.
std::optional<SurfaceOverK> find_action(const SingularityProfile& profile, int rho, const Predicate& extra,
                                        const std::string& name) {
    const auto group = configuration_automorphisms(profile);
    auto attempt = [&](std::vector<IntMatrix> gens) -> std::optional<SurfaceOverK> {
        SurfaceOverK s;
        s.profile = profile;
        s.name = name;
        s.action.generators = std::move(gens);
        if (fixed_rank(profile.form, s.action.generators) != rho) return std::nullopt;
        if (rho_drop(s).rho_surface != 1) return std::nullopt;
        if (!rank_one_check(s).rank_one) return std::nullopt;
        if (!extra(s)) return std::nullopt;
        return s;
    };
    if (auto s = attempt({})) return s;
    std::vector<const IntMatrix*> candidates;
    for (const auto& g : group)
        if (!is_identity(g)) candidates.push_back(&g);
    for (const auto* g : candidates)
        if (auto s = attempt({*g})) return s;
    const std::size_t budget = 400;
    const std::size_t m = std::min(candidates.size(), budget);
    for (std::size_t i = 0; i < m; ++i) {
        if (fixed_rank(profile.form, {*candidates[i]}) < rho) continue;
        for (std::size_t j = i + 1; j < m; ++j)
            if (auto s = attempt({*candidates[i], *candidates[j]})) return s;
    }
    return std::nullopt;
}

std::string file_stem(const std::string& table, int d, const std::string& type, int rho) {
    std::string t;
    for (char c : type) {
        if (c == '(' || c == ')') continue;
        if (c == '\'') {
            t += "p";
            continue;
        }
        t += (c == '+') ? '_' : c;
    }
    std::string tab = table;
    tab.erase(std::remove_if(tab.begin(), tab.end(), [](char c) { return c == '(' || c == ')' || c == '-'; }),
              tab.end());
    return tab + "_d" + std::to_string(d) + "_" + t + "_rho" + std::to_string(rho);
}

void set_all_flags(SurfaceOverK& s, bool value) {
    s.point_flags.clear();
    for (const auto& id : orbits(s).rational_points) s.point_flags[id] = value;
}

void write(const std::filesystem::path& dir, const std::string& stem, SurfaceOverK s, Json meta) {
    s.name = stem;
    const auto v = meta.value("mode", "decide") == "decide_fibration" ? decide_fibration(s) : decide(s);
    meta["rho_resolution"] = rho_drop(s).rho_resolution;
    if (!meta.contains("expected")) meta["expected"] = Json{{"answer", answer_name(v.answer)}, {"rule", rule_name(v.rule)}};
    const auto exp = meta["expected"];
    if (exp["answer"] != answer_name(v.answer) || (exp.contains("rule") && exp["rule"] != rule_name(v.rule)))
        std::cerr << "warning: " << stem << " decides " << rule_name(v.rule) << " (expected " << exp.dump() << ")\n";
    save_surface_file((dir / (stem + ".json")).string(), SurfaceDocument{s, meta});
    std::cout << stem << ": " << answer_name(v.answer) << " via " << rule_name(v.rule) << "\n";
}

Json expect(Answer a, Rule r) { return Json{{"answer", answer_name(a)}, {"rule", rule_name(r)}}; }

// Surfaces modelling the worked examples.
int write_examples(const std::filesystem::path& dir) {
    int missing = 0;
    auto need = [&](std::optional<SurfaceOverK> s, const char* what) {
        if (!s) {
            std::cerr << "no action found for " << what << "\n";
            ++missing;
        }
        return s;
    };
    auto rational_count = [](const SurfaceOverK& s) { return orbits(s).rational_points.size(); };

    // eg1: cubic surface with three A1 points permuted cyclically.
    const auto p1 = catalog_profile(3, "3A1");
    auto eg1 = need(find_action(p1, 2,
                                [&](const SurfaceOverK& s) {
                                    const auto o = orbits(s);
                                    return o.rational_points.empty() && o.point_orbits.size() == 1;
                                },
                                "eg1"),
                    "eg1");
    // eg2: quartic surface with a k-rational A1 point and a swapped pair.
    const auto p2 = catalog_profile(4, "3A1");
    auto eg2 = need(find_action(p2, 3,
                                [&](const SurfaceOverK& s) {
                                    const auto o = orbits(s);
                                    if (o.rational_points.size() != 1) return false;
                                    for (const auto& po : o.point_orbits)
                                        if (po.size() == 2) return true;
                                    return false;
                                },
                                "eg2"),
                    "eg2");
    // eg3: degree 2, A5+A2 with both points k-rational.
    const auto p3 = catalog_profile(2, "A5+A2");
    auto no_minus = [](const SurfaceOverK& s) {
        for (const auto& id : orbits(s).rational_points)
            if (decorate_point(s, id, FlagPolicy::ForceTrue).sign == Sign::Minus) return false;
        return true;
    };
    auto eg3_minus = need(find_action(p3, 8, [](const SurfaceOverK&) { return true; }, "eg3_minus"), "eg3_minus");
    std::optional<SurfaceOverK> eg3_plus;
    for (int rho = 2; rho <= 8 && !eg3_plus; ++rho)
        eg3_plus = find_action(
            p3, rho, [&](const SurfaceOverK& s) { return rational_count(s) == 2 && no_minus(s); }, "eg3_plus");
    need(eg3_plus, "eg3_plus");
    if (missing) return missing;

    set_all_flags(*eg1, true);
    set_all_flags(*eg2, false);
    set_all_flags(*eg3_minus, true);
    set_all_flags(*eg3_plus, true);
    auto meta = [](const char* example, const char* mode, Json exp) {
        return Json{{"table", "examples"}, {"example", example}, {"mode", mode}, {"expected", exp}};
    };
    write(dir, "eg1", *eg1, meta("eg1", "decide", expect(Answer::NoCylinder, Rule::Deg34None)));
    write(dir, "eg2", *eg2, meta("eg2", "decide", expect(Answer::NoCylinder, Rule::Deg34None)));
    write(dir, "eg3_minus", *eg3_minus,
          meta("eg3", "decide", expect(Answer::ContainsCylinder, Rule::LowDegMinusDecoration)));
    write(dir, "eg3_plus", *eg3_plus, meta("eg3", "decide", expect(Answer::NoCylinder, Rule::LowDegNone)));
    write(dir, "eg4_rational", *eg2,
          meta("eg4", "decide_fibration", expect(Answer::ContainsCylinder, Rule::Deg34KRationalNonA1pp)));
    write(dir, "eg4_none", *eg1, meta("eg4", "decide_fibration", expect(Answer::NoCylinder, Rule::Deg34None)));
    write(dir, "eg6_even", *eg3_minus,
          meta("eg6", "decide_fibration", expect(Answer::ContainsCylinder, Rule::LowDegMinusDecoration)));
    write(dir, "eg6_odd", *eg3_plus, meta("eg6", "decide_fibration", expect(Answer::NoCylinder, Rule::LowDegNone)));

    // eg5: constant fibrations, every negative curve defined over k.
    const std::vector<std::pair<int, const char*>> constant = {
        {8, "A1"}, {6, "A2+A1"}, {5, "A4"}, {4, "D5"}, {3, "E6"}, {2, "E7"}, {2, "A5+A2"},
        {1, "E8"}, {1, "A8"}, {1, "E6+A2"}, {1, "2D4"}, {1, "4A2"}, {1, "2A3+2A1"},
    };
    for (const auto& [d, type] : constant) {
        SurfaceOverK s;
        s.profile = catalog_profile(d, type);
        set_all_flags(s, true);
        const auto& small = small_singularities(1);
        const auto sing = s.profile.singularities();
        const bool only_small = d == 1 && std::all_of(sing.begin(), sing.end(), [&](const AdeType& t) {
                                    return std::find(small.begin(), small.end(), t) != small.end();
                                });
        Json exp{{"answer", answer_name(only_small ? Answer::NoCylinder : Answer::ContainsCylinder)}};
        std::string stem = file_stem("eg5", d, type, 10 - d);
        Json m = meta("eg5", "decide_fibration", exp);
        m["type"] = type;
        m["degree"] = d;
        write(dir, stem, s, m);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: dvdp-make-fixtures <output dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    int missing = write_examples(dir);

    for (const auto& row : reference::all_catalog_rows()) {
        const auto profile = catalog_profile(row.degree, row.type);
        for (int rho : row.rho_values) {
            Predicate extra;
            Json exp;
            if (row.table == "list(1-1)") {
                extra = [](const SurfaceOverK& s) { return !orbits(s).rational_points.empty(); };
                exp = expect(Answer::ContainsCylinder, row.degree >= 5 ? Rule::Deg5Plus : Rule::Deg34KRationalNonA1pp);
            } else if (row.table == "list(1-2)") {
                extra = [](const SurfaceOverK& s) { return orbits(s).rational_points.empty(); };
                exp = expect(Answer::NoCylinder, Rule::Deg34None);
            } else if (row.table == "list(3)") {
                auto want = row.decorations;
                std::sort(want.begin(), want.end());
                extra = [want](const SurfaceOverK& s) { return rational_decorations(s) == want; };
                exp = expect(Answer::ContainsCylinder, Rule::LowDegMinusDecoration);
            } else {
                extra = [](const SurfaceOverK& s) {
                    const auto v = decide(s, FlagPolicy::ForceTrue);
                    return v.answer == Answer::ContainsCylinder &&
                           (v.rule == Rule::LowDegBigSingList || v.rule == Rule::LowDegDoublePrime);
                };
                exp = Json();
            }
            const auto stem = file_stem(row.table, row.degree, row.type, rho);
            if (row.table == "list(1-1)" && row.degree == 4 && row.type == "4A1" && rho == 5) {
                // The only automorphism of this configuration fixing all four
                // roots is the identity, so rank 5 with four root orbits does
                // not occur. The test suite checks this.
                std::cout << stem << ": skipped, not realisable in the lattice model\n";
                continue;
            }
            auto s = find_action(profile, rho, extra, stem);
            if (!s) {
                std::cerr << "no action found for " << row.table << " d=" << row.degree << " " << row.type
                          << " rho=" << rho << "\n";
                ++missing;
                continue;
            }
            set_all_flags(*s, true);
            Json meta{{"table", row.table}, {"degree", row.degree}, {"type", row.type}, {"rho", rho}, {"mode", "decide"}};
            if (!exp.is_null()) meta["expected"] = exp;
            write(dir, stem, *s, meta);
        }
    }

    // Rank-one actions on list(3) types without any minus decoration.
    for (const auto& row : reference::list_3()) {
        const auto profile = catalog_profile(row.degree, row.type);
        Predicate no_minus = [](const SurfaceOverK& s) {
            for (const auto& id : orbits(s).rational_points)
                if (decorate_point(s, id, FlagPolicy::ForceTrue).sign == Sign::Minus) return false;
            return true;
        };
        bool found = false;
        for (int rho = 2; rho <= 10 - row.degree && !found; ++rho) {
            const auto stem = file_stem("nominus", row.degree, row.type, rho);
            if (auto s = find_action(profile, rho, no_minus, stem)) {
                set_all_flags(*s, true);
                Json meta{{"table", "nominus"}, {"degree", row.degree}, {"type", row.type}, {"mode", "decide"},
                          {"expected", expect(Answer::NoCylinder, Rule::LowDegNone)}};
                write(dir, stem, *s, meta);
                found = true;
            }
        }
        if (!found) std::cout << "no rank-one action without minus decorations for d=" << row.degree << " " << row.type << "\n";
    }
    return missing == 0 ? 0 : 1;
}
