#include "toricic/cli.hpp"

#include "toricic/decomposition.hpp"
#include "toricic/error.hpp"
#include "toricic/golden.hpp"
#include "toricic/icdr.hpp"
#include "toricic/ishida.hpp"
#include "toricic/shelling.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

namespace toricic::cli {

namespace {

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

Outcome fail(std::string detail) { return {Status::Fail, std::move(detail)}; }

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "fail";
}

// Runs one check; exceptions turn into failures named after the error kind.
void run_check(Report& report, const std::string& cone, const std::string& name, const std::function<Outcome()>& fn) {
    CheckResult r{cone, name, Status::Pass, ""};
    try {
        auto o = fn();
        r.status = o.status;
        r.detail = std::move(o.detail);
    } catch (const Error& e) {
        r.status = Status::Fail;
        r.detail = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
}

Outcome check_face_lattice(const PolyhedralCone& cone) {
    const auto& lat = cone.lattice();
    if (lat.face(lat.top()).dim != cone.rank()) return fail("top face has the wrong dimension");
    for (const auto& f : lat.faces()) {
        if (f.id != lat.bottom() && lat.covers_down(f.id).empty()) return fail("face without lower covers");
        for (int g : lat.covers_down(f.id)) {
            if (lat.face(g).dim + 1 != f.dim) return fail("cover relation skips a dimension");
        }
        if (f.dim == 2 && f.rays.size() != 2) return fail("2-face with " + std::to_string(f.rays.size()) + " rays");
        for (const auto& g : lat.faces()) {
            std::vector<int> common;
            std::set_intersection(f.rays.begin(), f.rays.end(), g.rays.begin(), g.rays.end(), std::back_inserter(common));
            if (!lat.find(common)) return fail("faces " + std::to_string(f.id) + " and " + std::to_string(g.id) +
                                               " meet outside the lattice");
        }
        for (const auto& d : pick_degrees(cone, f.id)) {
            if (!is_valid_degree(cone, d) || face_of_degree(cone, d.u) != f.id) {
                return fail("degree chosen for face " + std::to_string(f.id) + " does not cut it out");
            }
        }
    }
    const auto whole = quotient_interval(lat, lat.bottom(), lat.top());
    if (whole.size() != lat.size() || whole.cover_pairs() != lat.cover_pairs()) {
        return fail("interval [0, top] differs from the lattice");
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(cone.rank()) + 1);
    for (const auto& f : lat.faces()) ++counts[static_cast<std::size_t>(f.dim)];
    std::string detail = "faces by dimension:";
    for (auto c : counts) detail += " " + std::to_string(c);
    return {Status::Pass, detail};
}

std::optional<std::string> check_pushforward(const SubdivisionMap& sub) {
    const auto& lat = sub.target.lattice();
    for (std::size_t i = 0; i < sub.cones.size(); ++i) {
        const auto& c = sub.cones[i];
        const int push = sub.pushforward[i];
        for (int r : c) {
            if (!lat.contains(sub.source.ray_face[static_cast<std::size_t>(r)], push)) return "cone not inside its image";
        }
        for (int g : lat.covers_down(push)) {
            if (std::all_of(c.begin(), c.end(),
                            [&](int r) { return lat.contains(sub.source.ray_face[static_cast<std::size_t>(r)], g); })) {
                return "image of a cone is not minimal";
            }
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            auto smaller = c;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
            const int j = sub.find_cone(smaller);
            if (j < 0) return "fan is not closed under faces";
            if (!lat.contains(sub.pushforward[static_cast<std::size_t>(j)], push)) return "pushforward is not monotone";
        }
    }
    return std::nullopt;
}

Outcome check_multiplicities(const PolyhedralCone& cone, const SubdivisionMap& bary, const SubdivisionMap& stellar) {
    const auto& lat = cone.lattice();
    const MultiplicityTable d(bary);
    if (!(d == MultiplicityTable::from_chain_counts(lat))) return fail("d-counts differ from the chain-count table");
    for (const auto& f : lat.faces()) {
        for (int l = 0; l <= f.dim; ++l) {
            if (d.count(f.id, l) != chain_count_oracle(lat, f.id, l)) {
                return fail("d_" + std::to_string(l) + "(" + std::to_string(f.id) + ") differs from the chain count");
            }
        }
    }
    if (auto e = check_pushforward(bary)) return fail("barycentric: " + *e);
    if (auto e = check_pushforward(stellar)) return fail("star subdivision: " + *e);
    if (cone.rank() == 4) {
        std::size_t sum = 0;
        for (int t : lat.faces_of_dim(3)) sum += lat.face(t).rays.size();
        if (sum != 2 * lat.faces_of_dim(2).size()) return fail("facet ray counts do not sum to twice the 2-faces");
    }
    return {};
}

Outcome check_fiber_duality(const FaceLattice& lat, const DecompositionResult& dec) {
    for (const auto& f : lat.faces()) {
        if (f.id == lat.bottom()) continue;
        const auto& F = dec.F[static_cast<std::size_t>(f.id)];
        if (!(F == laurent_mirror(F).shifted(2 * (f.dim - 1)))) {
            return fail("face " + std::to_string(f.id) + ": " + F.to_string() + " is not self-dual");
        }
    }
    return {};
}

Outcome check_shelling(const FaceLattice& lat) {
    const auto sh = lexicographic_shelling(lat);
    int type_zero = 0;
    for (std::size_t j = 0; j < sh.order.size(); ++j) {
        const auto& f = sh.order[j];
        if (sh.types[j] == 0) ++type_zero;
        // Type equals the number of earlier facets sharing a ridge.
        int earlier = 0;
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<int> common;
            std::set_intersection(f.begin(), f.end(), sh.order[i].begin(), sh.order[i].end(), std::back_inserter(common));
            if (common.size() + 1 == f.size()) ++earlier;
        }
        if (earlier != sh.types[j]) return fail("facet " + std::to_string(j) + " has type different from its earlier neighbors");
        // New faces are exactly the faces containing the restriction face.
        const auto& r = sh.restriction_faces[j];
        for (std::size_t mask = 0; mask < (std::size_t{1} << f.size()); ++mask) {
            Simplex g;
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (mask >> k & 1U) g.push_back(f[k]);
            }
            bool old = false;
            for (std::size_t i = 0; i < j && !old; ++i) old = std::includes(sh.order[i].begin(), sh.order[i].end(), g.begin(), g.end());
            const bool contains_r = std::includes(g.begin(), g.end(), r.begin(), r.end());
            if (old == contains_r) return fail("new faces of facet " + std::to_string(j) + " are not an interval");
        }
    }
    if (type_zero != 1) return fail(std::to_string(type_zero) + " facets of type 0");
    return {Status::Pass, std::to_string(sh.order.size()) + " facets"};
}

Outcome check_exactness(const SubdivisionMap& bary, ExecutionPolicy policy) {
    const int n = bary.target.rank();
    const auto u = pick_degree(bary.target, bary.target.lattice().top());
    std::string detail = "h^p:";
    for (int p = 1; p <= n; ++p) {
        const auto h = cohomology_dims(build_degree_u_complex(bary, p, u), policy);
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (static_cast<int>(i) != p && h[i] != 0) {
                return fail("p = " + std::to_string(p) + ": h^" + std::to_string(i) + " = " + std::to_string(h[i]));
            }
        }
        detail += " " + std::to_string(h[static_cast<std::size_t>(p)]);
    }
    return {Status::Pass, detail};
}

Outcome check_omega(const SubdivisionMap& bary, const DecompositionResult& dec, ExecutionPolicy policy) {
    const auto& lat = bary.target.lattice();
    const int n = bary.target.rank();
    const MultiplicityTable d(bary);
    for (const auto& f : lat.faces()) {
        const auto closed = omega_closed_form(lat, d, f.id, n);
        const auto fiber = omega_from_fiber(dec.F[static_cast<std::size_t>(f.id)], f.dim, n);
        if (closed != fiber) return fail("face " + std::to_string(f.id) + ": the two closed forms differ");
        for (const auto& u : pick_degrees(bary.target, f.id)) {
            const auto oracle = omega_oracle(bary, f.id, policy, u);
            if (oracle != closed) {
                return fail("face " + std::to_string(f.id) + ": oracle " + oracle.to_string() + " vs closed form " +
                            closed.to_string());
            }
        }
    }
    return {};
}

Outcome check_decomposition(const FaceLattice& lat, const DecompositionResult& dec) {
    for (const auto& f : lat.faces()) {
        const auto res = stalk_identity_residual(lat, dec, f.id);
        if (!res.is_zero()) return fail("stalk identity leaves " + res.to_string() + " at face " + std::to_string(f.id));
    }
    const auto odd = lowest_coefficient_exceptions(lat, dec);
    if (odd.empty()) return {Status::Pass, "lowest coefficient of H~(0,tau) is 1 on every face"};
    std::string detail = "lowest coefficient of H~(0,tau) differs from 1 on faces";
    for (int f : odd) detail += " " + std::to_string(f);
    return {Status::Pass, detail};
}

Outcome check_independence(const FaceLattice& lat, const DecompositionResult& bary, const DecompositionResult& star) {
    for (const auto& [key, h] : bary.Htilde) {
        if (!(star.H(key.first, key.second) == h)) {
            return fail("H~(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") depends on the subdivision");
        }
    }
    const auto top = static_cast<std::size_t>(lat.top());
    // Below dimension 3 the star pipeline leaves the cone alone, so D(top) is
    // only comparable in dimension 3; in dimension 4 it genuinely differs.
    if (lat.rank() == 3) {
        if (!(bary.D[top] == star.D[top])) return fail("D(top) depends on the subdivision");
        return {Status::Pass, "H~ and D(top) agree"};
    }
    return {Status::Pass, "H~ agrees; D(top) is " + bary.D[top].to_string() + " (barycentric) and " +
                              star.D[top].to_string() + " (star)"};
}

Outcome check_main_theorem(const SubdivisionMap& bary, const DecompositionResult& dec, ExecutionPolicy policy) {
    const auto& lat = bary.target.lattice();
    const int n = bary.target.rank();
    const MultiplicityTable d(bary);
    for (const auto& f : lat.faces()) {
        dr_crosscheck(lat, dec, omega_oracle(bary, f.id, policy), f.id, n);
        dr_crosscheck(lat, dec, omega_closed_form(lat, d, f.id, n), f.id, n);
        for (int mu : lat.faces_below(f.id)) {
            const auto dr = dr_from_H(lat, dec, mu, f.id, n);
            if (!dr.has_nonnegative_integer_coefficients()) return fail("dR with a negative coefficient");
            const auto interval = quotient_interval(lat, mu, f.id);
            const auto local = solve_decomposition(interval, MultiplicityTable::from_chain_counts(interval));
            const auto dr_local = dr_from_H(interval, local, interval.bottom(), interval.top(), n - lat.face(mu).dim);
            if (dr != dr_local) {
                return fail("dR(" + std::to_string(mu) + "," + std::to_string(f.id) + ") differs on its interval");
            }
        }
    }
    return {};
}

Outcome check_chi_y(const FaceLattice& lat, const DecompositionResult& dec, int n) {
    for (const auto& f : lat.faces()) {
        const auto a = chi_y_specialize(dr_from_H(lat, dec, lat.bottom(), f.id, n));
        const auto b = chi_y_from_H(dec.H(lat.bottom(), f.id), f.dim, n);
        if (!(a == b)) return fail("face " + std::to_string(f.id) + ": " + a.to_string("y") + " vs " + b.to_string("y"));
    }
    return {};
}

Outcome check_golden(const ConeSpec& spec, const PolyhedralCone& cone, const DecompositionResult& star) {
    if (cone.rank() > 4 || (cone.rank() >= 3 && !spec.expected)) return {Status::Skip, "no closed forms for this cone"};
    std::string bad;
    std::size_t count = 0;
    for (const auto& c : golden_comparisons(spec, cone, star)) {
        ++count;
        if (!c.passed()) bad += c.label + ": expected " + c.expected + ", got " + c.actual + "; ";
    }
    if (!bad.empty()) return fail(bad);
    return {Status::Pass, std::to_string(count) + " values"};
}

void verify_one(Report& report, const ConeSpec& spec, ExecutionPolicy policy) {
    std::optional<PolyhedralCone> cone;
    run_check(report, spec.name, "cone", [&] {
        cone = cone_of(spec);
        return Outcome{};
    });
    if (!cone) return;

    std::optional<SubdivisionMap> bary, star;
    std::optional<DecompositionResult> dec, star_dec;
    run_check(report, spec.name, "subdivisions", [&] {
        bary = barycentric_subdivision(*cone);
        star = appendix_subdivision(*cone);
        return Outcome{};
    });
    const auto& lat = cone->lattice();
    run_check(report, spec.name, "face_lattice", [&] { return check_face_lattice(*cone); });
    if (!bary || !star) return;
    run_check(report, spec.name, "multiplicities", [&] { return check_multiplicities(*cone, *bary, *star); });
    run_check(report, spec.name, "decomposition", [&] {
        dec = solve_decomposition(lat, MultiplicityTable(*bary), policy);
        return check_decomposition(lat, *dec);
    });
    run_check(report, spec.name, "star_decomposition", [&] {
        star_dec = solve_decomposition(lat, MultiplicityTable(*star), policy);
        return check_decomposition(lat, *star_dec);
    });
    run_check(report, spec.name, "shelling", [&] { return check_shelling(lat); });
    run_check(report, spec.name, "ishida_exactness", [&] { return check_exactness(*bary, policy); });
    if (dec) {
        run_check(report, spec.name, "fiber_duality", [&] { return check_fiber_duality(lat, *dec); });
        run_check(report, spec.name, "omega_agreement", [&] { return check_omega(*bary, *dec, policy); });
        run_check(report, spec.name, "main_theorem", [&] { return check_main_theorem(*bary, *dec, policy); });
        run_check(report, spec.name, "chi_y", [&] { return check_chi_y(lat, *dec, cone->rank()); });
    }
    if (dec && star_dec) {
        run_check(report, spec.name, "subdivision_independence", [&] { return check_independence(lat, *dec, *star_dec); });
    }
    if (star_dec) run_check(report, spec.name, "closed_forms", [&] { return check_golden(spec, *cone, *star_dec); });
}

}  // namespace

bool Report::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

json Report::to_json() const {
    json list = json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        if (c.status == Status::Fail) ++failed;
        json j{{"cone", c.cone}, {"check", c.check}, {"status", status_name(c.status)}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        list.push_back(std::move(j));
    }
    return {{"checks", list}, {"total", checks.size()}, {"failed", failed}, {"passed", all_passed()}};
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << status_name(c.status) << "  " << c.cone << "/" << c.check;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << (all_passed() ? "all checks passed" : "some checks failed") << "\n";
    return out.str();
}

Report verify_specs(const std::vector<ConeSpec>& specs, ExecutionPolicy policy) {
    Report report;
    for (const auto& spec : specs) verify_one(report, spec, policy);
    return report;
}

Report verify_spec_json(const json& j, ExecutionPolicy policy) {
    Report report;
    std::optional<ConeSpec> spec;
    run_check(report, j.is_object() ? j.value("name", std::string("cone")) : "cone", "spec", [&] {
        spec = parse_cone_spec(j);
        return Outcome{};
    });
    if (!spec) return report;
    report.checks.clear();
    verify_one(report, *spec, policy);
    return report;
}

}  // namespace toricic::cli
