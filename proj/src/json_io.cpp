// SPDX-License-Identifier: MIT

#include "dvdp/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace dvdp {

namespace {

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw InputError("expected an object", path);
    const auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field", path.empty() ? key : path + "." + key);
    return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw InputError("integer out of range", path);
        return static_cast<std::int64_t>(u);
    }
    throw InputError("expected an integer", path);
}

IntVector as_int_vector(const Json& j, const std::string& path, std::size_t expected) {
    if (!j.is_array()) throw InputError("expected an array", path);
    if (j.size() != expected)
        throw InputError("expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()), path);
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], index_path(path, i)));
    return v;
}

Json int_matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw InputError("expected a rational string such as \"-5/4\"", path);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(e.what(), path);
    }
}

SurfaceDocument surface_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("expected a surface object", "$");
    SurfaceDocument doc;
    const Json& deg = require(j, "degree", "");
    const auto d = as_int(deg, "degree");
    if (d < 1 || d > 8) throw InputError("degree must lie in 1..8", "degree");
    IntersectionForm form;
    try {
        form = lattice_for_degree(static_cast<int>(d));
    } catch (const Error& e) {
        throw InputError(e.what(), "degree");
    }
    const Json& rj = require(j, "roots", "");
    if (!rj.is_array()) throw InputError("expected an array", "roots");
    std::vector<DivisorClass> roots;
    for (std::size_t i = 0; i < rj.size(); ++i)
        roots.push_back(as_int_vector(rj[i], index_path("roots", i), static_cast<std::size_t>(form.rank)));
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("expected a string", "name");
        name = j["name"].get<std::string>();
    }
    try {
        doc.surface.profile = validate_config(form, roots, name);
    } catch (const ConfigError& e) {
        throw InputError(e.what(), "roots");
    }
    doc.surface.name = name;

    if (j.contains("galois")) {
        const Json& g = j["galois"];
        if (!g.is_object()) throw InputError("expected an object", "galois");
        if (g.contains("matrices")) {
            const Json& ms = g["matrices"];
            if (!ms.is_array()) throw InputError("expected an array", "galois.matrices");
            for (std::size_t k = 0; k < ms.size(); ++k) {
                const std::string mp = index_path("galois.matrices", k);
                if (!ms[k].is_array() || ms[k].size() != static_cast<std::size_t>(form.rank))
                    throw InputError("expected " + std::to_string(form.rank) + " rows", mp);
                IntMatrix m;
                for (std::size_t r = 0; r < ms[k].size(); ++r)
                    m.push_back(as_int_vector(ms[k][r], index_path(mp, r), static_cast<std::size_t>(form.rank)));
                doc.surface.action.generators.push_back(std::move(m));
            }
        }
    }
    if (j.contains("point_flags")) {
        const Json& pts = j["point_flags"];
        if (!pts.is_object()) throw InputError("expected an object keyed by point id", "point_flags");
        for (const auto& [id, val] : pts.items()) {
            const std::string pp = "point_flags." + id;
            try {
                (void)doc.surface.profile.point(id);
            } catch (const InputError&) {
                throw InputError("no singular point with this id", pp);
            }
            if (!val.is_boolean()) throw InputError("expected a boolean", pp);
            doc.surface.point_flags[id] = val.get<bool>();
        }
    }
    if (j.contains("assert_rank_one")) {
        if (!j["assert_rank_one"].is_boolean()) throw InputError("expected a boolean", "assert_rank_one");
        doc.surface.rank_one_assertion = j["assert_rank_one"].get<bool>();
    }
    if (j.contains("meta")) doc.meta = j["meta"];
    return doc;
}

Json surface_to_json(const SurfaceDocument& doc) {
    const auto& s = doc.surface;
    Json j = Json::object();
    j["name"] = s.name;
    j["degree"] = s.degree();
    Json roots = Json::array();
    for (const auto& r : s.profile.simple_roots) roots.push_back(r);
    j["roots"] = roots;
    Json ms = Json::array();
    for (const auto& m : s.action.generators) ms.push_back(int_matrix_json(m));
    j["galois"] = Json{{"matrices", ms}};
    Json pts = Json::object();
    for (const auto& [id, flag] : s.point_flags) pts[id] = flag;
    j["point_flags"] = pts;
    if (s.rank_one_assertion) j["assert_rank_one"] = *s.rank_one_assertion;
    if (!doc.meta.is_null()) j["meta"] = doc.meta;
    return j;
}

Json surface_to_json(const SurfaceOverK& surface) { return surface_to_json(SurfaceDocument{surface, Json()}); }

SurfaceDocument load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON syntax error: ") + e.what(), "$");
    }
    return surface_from_json(j);
}

void save_surface_file(const std::string& path, const SurfaceDocument& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file " + path);
    out << surface_to_json(doc).dump(2) << "\n";
}

Json verdict_to_json(const Verdict& v) {
    Json trace = Json::array();
    for (const auto& t : v.trace) trace.push_back(Json{{"cite", t.cite}, {"quote", t.quote}});
    Json j = Json::object();
    j["answer"] = answer_name(v.answer);
    j["rule"] = rule_name(v.rule);
    j["trace"] = trace;
    j["construction_case"] = v.construction_case ? Json(*v.construction_case) : Json(nullptr);
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    const Json& a = require(j, "answer", "");
    if (!a.is_string()) throw InputError("expected a string", "answer");
    v.answer = parse_answer(a.get<std::string>());
    const Json& r = require(j, "rule", "");
    if (!r.is_string()) throw InputError("expected a string", "rule");
    v.rule = parse_rule(r.get<std::string>());
    const Json& t = require(j, "trace", "");
    if (!t.is_array()) throw InputError("expected an array", "trace");
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string tp = index_path("trace", i);
        const Json& c = require(t[i], "cite", tp);
        const Json& q = require(t[i], "quote", tp);
        if (!c.is_string() || !q.is_string()) throw InputError("cite and quote must be strings", tp);
        v.trace.push_back({c.get<std::string>(), q.get<std::string>()});
    }
    if (j.contains("construction_case") && !j["construction_case"].is_null())
        v.construction_case = static_cast<int>(as_int(j["construction_case"], "construction_case"));
    return v;
}

Json profile_to_json(const SingularityProfile& profile) {
    const auto t = surface_type(profile);
    Json j = Json::object();
    j["degree"] = profile.degree();
    j["type"] = t.name();
    j["num_lines"] = t.num_lines;
    Json roots = Json::array();
    for (const auto& r : profile.simple_roots) roots.push_back(r);
    j["roots"] = roots;
    Json pts = Json::array();
    for (const auto& p : profile.points)
        pts.push_back(Json{{"id", p.id}, {"type", p.type.label()}, {"components", p.ordered_components}});
    j["points"] = pts;
    return j;
}

Json curve_set_to_json(const CurveSet& set) {
    Json classes = Json::array();
    for (const auto& c : set.classes) classes.push_back(c);
    return Json{{"degree", set.form.degree},
                {"kind", set.kind == CurveKind::Root ? "roots" : "lines"},
                {"count", set.size()},
                {"classes", classes}};
}

}  // namespace dvdp
