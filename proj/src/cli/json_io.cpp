#include "toricic/cli.hpp"

#include "toricic/error.hpp"

#include <algorithm>
#include <fstream>

namespace toricic::cli {

json poly_json(const LaurentPolynomial& p, std::string_view variable) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e}, {"c", to_string(c)}});
    return {{"terms", terms}, {"text", p.to_string(variable)}};
}

json poly_json(const BiLaurentPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json k = e.k_twice % 2 == 0 ? json(e.k_twice / 2) : json(e.k_twice / 2.0);
        terms.push_back({{"k", k}, {"l", e.l}, {"c", to_string(c)}});
    }
    return {{"terms", terms}, {"text", p.to_string()}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

Integer parse_integer(const json& x) {
    if (x.is_number_integer()) return Integer(std::to_string(x.get<long long>()));
    if (x.is_string()) {
        Integer z;
        if (z.set_str(x.get<std::string>(), 10) != 0) malformed("not an integer: " + x.get<std::string>());
        return z;
    }
    malformed("expected an integer, got " + x.dump());
}

std::vector<LatticeVector> parse_rays(const json& j, int rank) {
    if (!j.is_array()) malformed("rays must be an array");
    std::vector<LatticeVector> rays;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != static_cast<std::size_t>(rank)) {
            malformed("every ray must be an array of length " + std::to_string(rank));
        }
        LatticeVector v;
        for (const auto& x : r) v.push_back(parse_integer(x));
        rays.push_back(std::move(v));
    }
    return rays;
}

json rays_json(const std::vector<LatticeVector>& rays) {
    json out = json::array();
    for (const auto& r : rays) {
        json v = json::array();
        for (const auto& x : r) {
            if (x.fits_slong_p()) {
                v.push_back(x.get_si());
            } else {
                v.push_back(x.get_str());
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

ConeSpec parse_cone_spec(const json& j) {
    if (!j.is_object()) malformed("cone spec must be a JSON object");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) malformed("cone spec needs an integer rank");
    ConeSpec spec;
    spec.name = j.value("name", std::string("cone"));
    spec.rank = j["rank"].get<int>();
    if (spec.rank < 0) malformed("rank must be nonnegative");
    if (!j.contains("rays")) malformed("cone spec needs rays");
    spec.rays = parse_rays(j["rays"], spec.rank);
    if (j.contains("expected")) {
        const auto& e = j["expected"];
        if (!e.is_object()) malformed("expected must be an object");
        ExpectedCounts c;
        try {
            c.v = e.value("v", 0);
            c.e = e.value("e", 0);
            c.f = e.value("f", 0);
            c.facet_rays = e.value("facet_rays", std::vector<int>{});
        } catch (const json::exception& ex) {
            malformed(std::string("bad expected block: ") + ex.what());
        }
        spec.expected = c;
    }
    return spec;
}

json cone_spec_json(const ConeSpec& spec) {
    json j{{"name", spec.name}, {"rank", spec.rank}, {"rays", rays_json(spec.rays)}};
    if (spec.expected) {
        j["expected"] = {{"v", spec.expected->v}};
        if (spec.rank == 4) {
            j["expected"]["e"] = spec.expected->e;
            j["expected"]["f"] = spec.expected->f;
            j["expected"]["facet_rays"] = spec.expected->facet_rays;
        }
    }
    return j;
}

ConeSpec load_cone_spec(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.starts_with(prefix)) {
        const std::string name = source.substr(prefix.size());
        for (auto& spec : builtin_corpus()) {
            if (spec.name == name) return spec;
        }
        malformed("no built-in cone named " + name);
    }
    std::ifstream in(source);
    if (!in) malformed("cannot read " + source);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& ex) {
        malformed(source + ": " + ex.what());
    }
    return parse_cone_spec(j);
}

json face_lattice_json(const PolyhedralCone& cone) {
    const auto& lat = cone.lattice();
    json faces = json::array();
    for (const auto& f : lat.faces()) faces.push_back({{"id", f.id}, {"dim", f.dim}, {"rays", f.rays}});
    json covers = json::array();
    for (auto [lo, hi] : lat.cover_pairs()) covers.push_back({lo, hi});
    return {{"rays", rays_json(cone.rays())}, {"faces", faces}, {"covers", covers}};
}

json subdivision_json(const SubdivisionMap& sub, const ConeSpec& spec) {
    const auto& lat = sub.target.lattice();
    json rays = json::array();
    json added = json::array();
    for (std::size_t i = 0; i < sub.source.rays.size(); ++i) {
        const int face = sub.source.ray_face[i];
        json vec = rays_json({sub.source.rays[i]})[0];
        rays.push_back({{"vector", vec}, {"face_id", face}});
        if (lat.face(face).dim >= 2) added.push_back({{"index", i}, {"vector", vec}, {"face_id", face}});
    }
    return {{"cone", cone_spec_json(spec)},
            {"rays", rays},
            {"added_rays", added},
            {"maximal_cones", sub.source.maximal_cones}};
}

SubdivisionMap parse_subdivision(const json& j) {
    if (!j.is_object() || !j.contains("cone") || !j.contains("rays") || !j.contains("maximal_cones")) {
        malformed("fan file needs cone, rays and maximal_cones");
    }
    const ConeSpec spec = parse_cone_spec(j["cone"]);
    PolyhedralCone cone = cone_of(spec);
    SimplicialFan fan;
    fan.rank = spec.rank;
    for (const auto& r : j["rays"]) {
        if (!r.is_object() || !r.contains("vector")) malformed("fan rays need a vector");
        fan.rays.push_back(parse_rays(json::array({r["vector"]}), spec.rank)[0]);
        fan.ray_face.push_back(cone.minimal_face_containing(fan.rays.back()));
    }
    try {
        fan.maximal_cones = j["maximal_cones"].get<std::vector<std::vector<int>>>();
    } catch (const json::exception& ex) {
        malformed(std::string("bad maximal_cones: ") + ex.what());
    }
    for (auto& c : fan.maximal_cones) {
        std::sort(c.begin(), c.end());
        for (int r : c) {
            if (r < 0 || static_cast<std::size_t>(r) >= fan.rays.size()) malformed("ray index out of range");
        }
        std::vector<LatticeVector> vs;
        for (int r : c) vs.push_back(fan.rays[static_cast<std::size_t>(r)]);
        if (integer_rank(vs) != c.size()) throw Error(ErrorKind::NotSimplicialResult, "fan cone is not simplicial");
    }
    std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
    return SubdivisionMap::build(std::move(cone), std::move(fan));
}

json multiplicity_json(const MultiplicityTable& d) {
    json rows = json::array();
    for (std::size_t f = 0; f < d.num_faces(); ++f) {
        const int face = static_cast<int>(f);
        for (int l = 0; l <= d.face_dim(face); ++l) {
            if (d.count(face, l) != 0) rows.push_back({{"tau", face}, {"l", l}, {"count", d.count(face, l)}});
        }
    }
    return {{"d", rows}};
}

}  // namespace toricic::cli
