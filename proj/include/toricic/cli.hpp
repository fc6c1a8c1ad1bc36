#pragma once

#include "toricic/bilaurent.hpp"
#include "toricic/corpus.hpp"
#include "toricic/exact_linalg.hpp"
#include "toricic/laurent.hpp"
#include "toricic/subdivision.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace toricic::cli {

using nlohmann::json;

/// {"terms": [{"q": e, "c": "3/2"}, ...], "text": "..."}
json poly_json(const LaurentPolynomial& p, std::string_view variable = "q");
/// {"terms": [{"k": -1 or -0.5, "l": e, "c": "2"}, ...], "text": "..."}
json poly_json(const BiLaurentPolynomial& p);

/// {"name", "rank", "rays", "expected"?}. Throws MalformedInput.
ConeSpec parse_cone_spec(const json& j);
json cone_spec_json(const ConeSpec& spec);
/// A path to a JSON cone spec, or "builtin:<name>" for a corpus cone.
ConeSpec load_cone_spec(const std::string& source);

json face_lattice_json(const PolyhedralCone& cone);
json subdivision_json(const SubdivisionMap& sub, const ConeSpec& spec);
/// Inverse of subdivision_json; rebuilds the map against the stored cone.
SubdivisionMap parse_subdivision(const json& j);
json multiplicity_json(const MultiplicityTable& d);

enum class Status { Pass, Fail, Skip };

struct CheckResult {
    std::string cone;
    std::string check;
    Status status = Status::Pass;
    std::string detail;
};

/// Outcome of the invariant suite; a failing check never stops the others.
struct Report {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    json to_json() const;
    std::string to_text() const;
};

Report verify_specs(const std::vector<ConeSpec>& specs, ExecutionPolicy policy = ExecutionPolicy::Parallel);
/// Parses the spec first; a malformed or degenerate spec yields one failing
/// entry named after the error kind.
Report verify_spec_json(const json& j, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Entry point of the command-line tool. args[0] is the program name.
/// Returns 0 on success, 1 on a library error and 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricic::cli
