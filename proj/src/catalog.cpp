// SPDX-License-Identifier: MIT

#include "dvdp/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dvdp {

TypeName parse_type_name(int degree, const std::string& text) {
    TypeName out;
    out.degree = degree;
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        const auto close = body.find(')');
        if (close == std::string::npos) throw InputError("unbalanced parenthesis in type name '" + text + "'");
        const std::string primes = body.substr(close + 1);
        if (primes == "'")
            out.central = CentralVariant::Prime;
        else if (primes == "''")
            out.central = CentralVariant::DoublePrime;
        else
            throw InputError("expected ' or '' after the parenthesis in '" + text + "'");
        body = body.substr(1, close - 1);
    } else if (body.size() > 3 && body.back() == ')' && body[body.size() - 3] == '(') {
        const char v = body[body.size() - 2];
        if (v != '1' && v != '2') throw InputError("line-count variant must be (1) or (2) in '" + text + "'");
        out.line_variant = v - '0';
        body = body.substr(0, body.size() - 3);
    }
    out.singularities = parse_singularity_label(body);
    // Types with two embeddings use primes as names for the line-count
    // variants; the order of the names differs between degrees 2 and 1.
    if (out.central && line_count_variants(degree, singularity_label(out.singularities))) {
        const bool prime = *out.central == CentralVariant::Prime;
        out.line_variant = (degree == 2) == prime ? 1 : 2;
        out.central.reset();
    }
    if (out.central) {
        if (degree != 1 && degree != 2)
            throw InputError("central vertex variants exist in degrees 1 and 2 only: '" + text + "'");
        const AdeType central{Family::A, 9 - 2 * degree};
        if (std::find(out.singularities.begin(), out.singularities.end(), central) == out.singularities.end())
            throw InputError("'" + text + "' has no point of type " + central.label());
    }
    return out;
}

bool matches_type(const SingularityProfile& profile, const TypeName& name) {
    if (profile.degree() != name.degree) return false;
    const auto t = surface_type(profile);
    if (t.singularities != name.singularities) return false;
    if (name.line_variant && t.variant() != name.line_variant) return false;
    if (name.central) {
        const AdeType central{Family::A, 9 - 2 * name.degree};
        for (const auto& p : profile.points)
            if (p.type == central) return central_vertex_variant(profile, p) == *name.central;
        return false;
    }
    return true;
}

std::vector<SingularityProfile> catalog_variants(int degree, const std::vector<AdeType>& types) {
    static std::mutex mu;
    static std::map<std::pair<int, std::string>, std::vector<SingularityProfile>> cache;
    const auto key = std::make_pair(degree, singularity_label(types));
    {
        std::lock_guard<std::mutex> lock(mu);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto form = lattice_for_degree(degree);
    std::vector<SingularityProfile> out;
    for (const auto& [count, roots] : line_count_spectrum(form, types)) out.push_back(validate_config(form, roots));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

SingularityProfile catalog_profile(int degree, const std::string& name) {
    const auto parsed = parse_type_name(degree, name);
    for (auto& p : catalog_variants(degree, parsed.singularities))
        if (matches_type(p, parsed)) {
            p.name = name;
            return p;
        }
    throw ConfigError("no configuration of type " + name + " in degree " + std::to_string(degree));
}

}  // namespace dvdp
