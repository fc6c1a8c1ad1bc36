#include "toricic/cli.hpp"

#include "toricic/decomposition.hpp"
#include "toricic/error.hpp"
#include "toricic/icdr.hpp"
#include "toricic/ishida.hpp"
#include "toricic/shelling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace toricic::cli {

namespace {

enum class Format { Json, Text };

struct Options {
    Format format = Format::Json;
    long seed = 0;  // reserved for randomized runs
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        malformed(path + ": " + ex.what());
    }
}

void check_face(const FaceLattice& lat, int id, const char* what) {
    if (id < 0 || static_cast<std::size_t>(id) >= lat.size()) {
        malformed(std::string(what) + " " + std::to_string(id) + " is not a face id");
    }
}

SubdivisionMap make_subdivision(const PolyhedralCone& cone, const std::string& kind, bool perturbed) {
    if (kind == "barycentric") return barycentric_subdivision(cone, perturbed ? Barycenter::Perturbed : Barycenter::Sum);
    return appendix_subdivision(cone);
}

// Fan from --fan (a subdivide output file) or a barycentric fan of --cone.
SubdivisionMap fan_from(const std::string& fan_path, const std::string& cone_source) {
    if (!fan_path.empty()) return parse_subdivision(read_json_file(fan_path));
    if (cone_source.empty()) malformed("give --fan or --cone");
    return barycentric_subdivision(cone_of(load_cone_spec(cone_source)));
}

void emit(std::ostream& out, const Options& opt, const json& j, const std::string& text) {
    if (opt.format == Format::Json) {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

std::string face_label(const Face& f) {
    std::string s = "face " + std::to_string(f.id) + " dim " + std::to_string(f.dim) + " rays {";
    for (std::size_t i = 0; i < f.rays.size(); ++i) s += (i ? "," : "") + std::to_string(f.rays[i]);
    return s + "}";
}

void cmd_faces(std::ostream& out, const Options& opt, const std::string& source) {
    const auto spec = load_cone_spec(source);
    const auto cone = cone_of(spec);
    std::ostringstream text;
    text << spec.name << ": " << cone.lattice().size() << " faces\n";
    for (const auto& f : cone.lattice().faces()) text << face_label(f) << "\n";
    json j = face_lattice_json(cone);
    j["cone"] = spec.name;
    emit(out, opt, j, text.str());
}

void cmd_subdivide(std::ostream& out, const Options& opt, const std::string& source, const std::string& kind, bool perturbed) {
    const auto spec = load_cone_spec(source);
    const auto sub = make_subdivision(cone_of(spec), kind, perturbed);
    std::ostringstream text;
    text << spec.name << ": " << sub.source.rays.size() << " rays, " << sub.source.maximal_cones.size()
         << " maximal cones\n";
    for (const auto& c : sub.source.maximal_cones) {
        text << " ";
        for (int r : c) text << " " << r;
        text << "\n";
    }
    emit(out, opt, subdivision_json(sub, spec), text.str());
}

void cmd_fibers(std::ostream& out, const Options& opt, const std::string& source, const std::string& kind) {
    const auto spec = load_cone_spec(source);
    const auto cone = cone_of(spec);
    const MultiplicityTable d(make_subdivision(cone, kind, false));
    json j = multiplicity_json(d);
    json fibers = json::array();
    std::ostringstream text;
    for (const auto& f : cone.lattice().faces()) {
        const auto F = fiber_poincare(d, f.id);
        fibers.push_back({{"tau", f.id}, {"F", poly_json(F)}});
        text << "F[" << f.id << "] = " << F.to_string() << "   d:";
        for (int l = 0; l <= f.dim; ++l) text << " " << d.count(f.id, l);
        text << "\n";
    }
    j["fibers"] = fibers;
    emit(out, opt, j, text.str());
}

void cmd_decompose(std::ostream& out, const Options& opt, const std::string& source, const std::string& kind) {
    const auto spec = load_cone_spec(source);
    const auto cone = cone_of(spec);
    const auto& lat = cone.lattice();
    const auto dec = solve_decomposition(lat, MultiplicityTable(make_subdivision(cone, kind, false)), ExecutionPolicy::Parallel);
    json faces = json::array();
    json stalks = json::array();
    std::ostringstream text;
    text << spec.name << " (" << kind << ")\n";
    for (const auto& f : lat.faces()) {
        const auto i = static_cast<std::size_t>(f.id);
        faces.push_back({{"tau", f.id}, {"dim", f.dim}, {"F", poly_json(dec.F[i])}, {"D", poly_json(dec.D[i])}});
        text << "tau " << f.id << ": F = " << dec.F[i].to_string() << ", D = " << dec.D[i].to_string() << "\n";
    }
    for (const auto& [key, h] : dec.Htilde) {
        stalks.push_back({{"mu", key.first}, {"tau", key.second}, {"H", poly_json(h)}});
        text << "H~(" << key.first << "," << key.second << ") = " << h.to_string() << "\n";
    }
    emit(out, opt, {{"cone", spec.name}, {"subdivision", kind}, {"faces", faces}, {"stalks", stalks}}, text.str());
}

void cmd_omega(std::ostream& out, const Options& opt, const std::string& fan_path, const std::string& cone_source,
               int tau, bool oracle, bool closed, bool both, bool check) {
    const auto sub = fan_from(fan_path, cone_source);
    const auto& lat = sub.target.lattice();
    check_face(lat, tau, "--tau");
    const int n = sub.target.rank();
    if (!oracle && !closed) both = true;
    if (both || check) oracle = closed = true;
    const MultiplicityTable d(sub);
    json j{{"tau", tau}};
    std::ostringstream text;
    std::optional<BiLaurentPolynomial> from_oracle, from_closed;
    if (oracle) {
        from_oracle = omega_oracle(sub, tau, ExecutionPolicy::Parallel);
        j["oracle"] = poly_json(*from_oracle);
        text << "oracle:      " << from_oracle->to_string() << "\n";
    }
    if (closed) {
        from_closed = omega_closed_form(lat, d, tau, n);
        j["closed_form"] = poly_json(*from_closed);
        text << "closed form: " << from_closed->to_string() << "\n";
    }
    if (check) {
        const auto fiber = omega_from_fiber(fiber_poincare(d, tau), lat.face(tau).dim, n);
        const bool agree = *from_oracle == *from_closed && *from_closed == fiber;
        j["fiber_form"] = poly_json(fiber);
        j["agree"] = agree;
        text << "fiber form:  " << fiber.to_string() << "\n" << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree) {
            emit(out, opt, j, text.str());
            throw Error(ErrorKind::CrossCheckMismatch, "the three forms of Omega differ");
        }
    }
    emit(out, opt, j, text.str());
}

void cmd_icdr(std::ostream& out, const Options& opt, const std::string& source, const std::string& kind,
              std::optional<int> mu, std::optional<int> tau, bool chi_y, bool verify) {
    const auto spec = load_cone_spec(source);
    const auto cone = cone_of(spec);
    const auto& lat = cone.lattice();
    const int n = cone.rank();
    const auto sub = make_subdivision(cone, kind, false);
    const auto dec = solve_decomposition(lat, MultiplicityTable(sub), ExecutionPolicy::Parallel);
    const int m = mu.value_or(lat.bottom());
    check_face(lat, m, "--mu");

    std::vector<int> taus;
    if (tau) {
        check_face(lat, *tau, "--tau");
        if (!lat.contains(m, *tau)) throw Error(ErrorKind::NotComparable, "mu is not contained in tau");
        taus.push_back(*tau);
    } else {
        for (const auto& f : lat.faces()) {
            if (lat.contains(m, f.id)) taus.push_back(f.id);
        }
    }
    json rows = json::array();
    std::ostringstream text;
    for (int t : taus) {
        const auto dr = dr_from_H(lat, dec, m, t, n);
        json row{{"mu", m}, {"tau", t}, {"dR", poly_json(dr)}};
        text << "dR(" << m << "," << t << ") = " << dr.to_string() << "\n";
        if (chi_y) {
            const auto chi = chi_y_specialize(dr);
            row["chi_y"] = poly_json(chi, "y");
            text << "  chi_y = " << chi.to_string("y") << "\n";
        }
        rows.push_back(std::move(row));
    }
    json j{{"cone", spec.name}, {"subdivision", kind}, {"dR", rows}};
    if (verify) {
        // Omega is only defined for barycentric fans here.
        const auto bary = barycentric_subdivision(cone);
        const auto bary_dec = solve_decomposition(lat, MultiplicityTable(bary), ExecutionPolicy::Parallel);
        for (const auto& f : lat.faces()) dr_crosscheck(lat, bary_dec, omega_oracle(bary, f.id, ExecutionPolicy::Parallel), f.id, n);
        j["verified_faces"] = lat.size();
        text << "closure holds on all " << lat.size() << " faces\n";
    }
    emit(out, opt, j, text.str());
}

void cmd_shelling(std::ostream& out, const Options& opt, const std::string& fan_path, const std::string& cone_source) {
    ShellingOrder sh;
    std::string vertices;
    if (!fan_path.empty()) {
        sh = find_shelling(complex_from_fan(parse_subdivision(read_json_file(fan_path)).source));
        vertices = "fan rays";
    } else {
        if (cone_source.empty()) malformed("give --fan or --cone");
        sh = lexicographic_shelling(cone_of(load_cone_spec(cone_source)).lattice());
        // Barycentric vertices are nonzero faces; report face ids.
        for (auto* list : {&sh.order, &sh.restriction_faces}) {
            for (auto& s : *list) {
                for (int& v : s) ++v;
            }
        }
        vertices = "face ids";
    }
    std::map<int, int> histogram;
    for (int t : sh.types) ++histogram[t];
    json hist = json::array();
    std::ostringstream text;
    text << sh.order.size() << " facets (vertices are " << vertices << ")\n";
    for (std::size_t i = 0; i < sh.order.size(); ++i) {
        text << "  type " << sh.types[i] << ":";
        for (int v : sh.order[i]) text << " " << v;
        text << "\n";
    }
    text << "type histogram:";
    for (auto [t, c] : histogram) {
        hist.push_back({{"type", t}, {"count", c}});
        text << " " << t << ":" << c;
    }
    text << "\n";
    emit(out, opt,
         {{"vertices", vertices}, {"order", sh.order}, {"types", sh.types}, {"restriction_faces", sh.restriction_faces},
          {"histogram", hist}},
         text.str());
}

int cmd_verify(std::ostream& out, const Options& opt, const std::vector<std::string>& sources, bool serial) {
    const auto policy = serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
    Report report;
    if (sources.empty()) {
        report = verify_specs(builtin_corpus(), policy);
    } else {
        for (const auto& s : sources) {
            Report one;
            if (s.starts_with("builtin:")) {
                one = verify_specs({load_cone_spec(s)}, policy);
            } else {
                one = verify_spec_json(read_json_file(s), policy);
            }
            report.checks.insert(report.checks.end(), one.checks.begin(), one.checks.end());
        }
    }
    emit(out, opt, report.to_json(), report.to_text());
    return report.all_passed() ? 0 : 1;
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection cohomology invariants of affine toric varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized runs (reserved)");

    const std::vector<std::string> kinds{"barycentric", "appendix"};
    std::string cone, fan, kind_sub = "barycentric", kind_dec = "appendix";
    bool perturbed = false, oracle = false, closed = false, both = false, check = false, chi_y = false, verify = false,
         serial = false;
    int tau = 0;
    std::optional<int> mu_opt, tau_opt;
    std::vector<std::string> verify_sources;

    auto* faces = app.add_subcommand("faces", "List the faces of a cone");
    faces->add_option("--cone", cone, "Cone spec file or builtin:<name>")->required();

    auto* subdivide = app.add_subcommand("subdivide", "Simplicial subdivision of a cone");
    subdivide->add_option("--cone", cone, "Cone spec file or builtin:<name>")->required();
    subdivide->add_option("--kind", kind_sub, "barycentric or appendix")->check(CLI::IsMember(kinds))->capture_default_str();
    subdivide->add_flag("--perturbed", perturbed, "Weighted barycenters instead of ray sums");

    auto* fibers = app.add_subcommand("fibers", "Multiplicities d_l(tau) and fiber polynomials");
    fibers->add_option("--cone", cone, "Cone spec file or builtin:<name>")->required();
    fibers->add_option("--subdivision", kind_sub, "barycentric or appendix")->check(CLI::IsMember(kinds))->capture_default_str();

    auto* decompose = app.add_subcommand("decompose", "Stalk polynomials and multiplicities");
    decompose->add_option("--cone", cone, "Cone spec file or builtin:<name>")->required();
    decompose->add_option("--subdivision", kind_dec, "barycentric or appendix")->check(CLI::IsMember(kinds))->capture_default_str();

    auto* omega = app.add_subcommand("omega", "Graded dimensions of pushed-forward differentials");
    omega->add_option("--fan", fan, "Fan file written by subdivide");
    omega->add_option("--cone", cone, "Cone spec file or builtin:<name>; uses its barycentric fan");
    omega->add_option("--tau", tau, "Face id")->required();
    omega->add_flag("--oracle", oracle, "Linear algebra over the fan");
    omega->add_flag("--closed-form", closed, "Formula in the multiplicities");
    omega->add_flag("--both", both, "Both of the above");
    omega->add_flag("--check", check, "Require agreement of the oracle and both closed forms");

    auto* icdr = app.add_subcommand("icdr", "dR generating functions");
    icdr->add_option("--cone", cone, "Cone spec file or builtin:<name>")->required();
    icdr->add_option("--subdivision", kind_dec, "barycentric or appendix")->check(CLI::IsMember(kinds))->capture_default_str();
    icdr->add_option("--mu", mu_opt, "Lower face id (default 0)");
    icdr->add_option("--tau", tau_opt, "Upper face id (default: every face above mu)");
    icdr->add_flag("--chi-y", chi_y, "Also print the chi_y specialization");
    icdr->add_flag("--verify", verify, "Check the closure against Omega on all faces");

    auto* shelling = app.add_subcommand("shelling", "Shelling order with facet types");
    shelling->add_option("--fan", fan, "Fan file written by subdivide (searched)");
    shelling->add_option("--cone", cone, "Cone spec file or builtin:<name> (lexicographic order on its barycentric complex)");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--cone", verify_sources, "Cone spec files or builtin:<name>; default is the built-in corpus");
    verify_cmd->add_flag("--serial", serial, "Use the serial kernels");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("toricic");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    opt.format = format == "text" ? Format::Text : Format::Json;
    try {
        if (faces->parsed()) cmd_faces(out, opt, cone);
        if (subdivide->parsed()) cmd_subdivide(out, opt, cone, kind_sub, perturbed);
        if (fibers->parsed()) cmd_fibers(out, opt, cone, kind_sub);
        if (decompose->parsed()) cmd_decompose(out, opt, cone, kind_dec);
        if (omega->parsed()) cmd_omega(out, opt, fan, cone, tau, oracle, closed, both, check);
        if (icdr->parsed()) cmd_icdr(out, opt, cone, kind_dec, mu_opt, tau_opt, chi_y, verify);
        if (shelling->parsed()) cmd_shelling(out, opt, fan, cone);
        if (verify_cmd->parsed()) return cmd_verify(out, opt, verify_sources, serial);
    } catch (const Error& e) {
        print_error(err, to_string(e.kind()), e.what());
        return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
    } catch (const json::exception& e) {
        print_error(err, "MalformedInput", e.what());
        return 2;
    }
    return 0;
}

}  // namespace toricic::cli
