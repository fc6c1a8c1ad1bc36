#include "toricic/golden.hpp"

#include "toricic/error.hpp"
#include "toricic/icdr.hpp"

#include <algorithm>

namespace toricic {

namespace {

LaurentPolynomial q(int e, long c = 1) { return LaurentPolynomial::monomial(Rational(c), e); }
BiLaurentPolynomial kl(int k, int l, long c = 1) { return BiMonomial{Rational(c), 2 * k, l}; }
BiLaurentPolynomial s_pow(int e) { return (kl(-1, 0) + kl(0, -1)).pow(static_cast<unsigned>(e)); }

std::string count_str(long x) { return std::to_string(x); }

}  // namespace

std::vector<GoldenComparison> golden_comparisons(const ConeSpec& spec, const PolyhedralCone& cone,
                                                 const DecompositionResult& dec) {
    const auto& lat = cone.lattice();
    const int n = cone.rank();
    const int top = lat.top();
    std::vector<GoldenComparison> out;
    auto cmp = [&](std::string label, const auto& expected, const auto& actual) {
        out.push_back({std::move(label), expected.to_string(), actual.to_string()});
    };
    auto dr = [&](int mu, int tau) { return dr_from_H(lat, dec, mu, tau, n); };

    if (n <= 2) {
        cmp("H~(0,top)", q(-n), dec.H(0, top));
        cmp("dR(0,top)", kl(0, -n), dr(0, top));
    }
    cmp("dR(0,0)", s_pow(n), dr(0, 0));
    cmp("dR(top,top)", kl(0, 0), dr(top, top));
    if (n <= 2) return out;

    if (!spec.expected) throw Error(ErrorKind::MalformedInput, "closed forms need the expected counts of " + spec.name);
    const auto& ex = *spec.expected;
    const long v = ex.v;
    out.push_back({"v", count_str(v), count_str(static_cast<long>(lat.faces_of_dim(1).size()))});

    if (n == 3) {
        cmp("H~(0,top)", q(-3) + q(-1, v - 3), dec.H(0, top));
        cmp("D(top)", q(1) + q(-1), dec.D[static_cast<std::size_t>(top)]);
        cmp("dR(0,top)", kl(0, -3) + kl(-1, -1, v - 3), dr(0, top));
        for (int t : lat.faces_of_dim(2)) cmp("dR(0,face " + std::to_string(t) + ")", s_pow(1) * kl(0, -2), dr(0, t));
        for (int r : lat.faces_of_dim(1)) cmp("dR(0,ray " + std::to_string(r) + ")", s_pow(2) * kl(0, -1), dr(0, r));
        return out;
    }
    if (n != 4) throw Error(ErrorKind::MalformedInput, "closed forms cover dimensions 0 to 4");

    out.push_back({"e", count_str(ex.e), count_str(static_cast<long>(lat.faces_of_dim(2).size()))});
    out.push_back({"f", count_str(ex.f), count_str(static_cast<long>(lat.faces_of_dim(3).size()))});
    {
        std::vector<int> want = ex.facet_rays;
        std::vector<int> got;
        for (int t : lat.faces_of_dim(3)) got.push_back(static_cast<int>(lat.face(t).rays.size()));
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        auto join = [](const std::vector<int>& xs) {
            std::string s;
            for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
            return s;
        };
        out.push_back({"facet ray counts", join(want), join(got)});
    }
    cmp("H~(0,top)", q(-4) + q(-2, v - 4), dec.H(0, top));
    cmp("D(top)", q(2) + q(0, v - 3) + q(-2), dec.D[static_cast<std::size_t>(top)]);
    cmp("dR(0,top)", kl(0, -4) + kl(-1, -2, v - 4), dr(0, top));
    for (int t : lat.faces_of_dim(3)) {
        const long nk = static_cast<long>(lat.face(t).rays.size());
        const std::string f = "facet " + std::to_string(t);
        cmp("D(" + f + ")", q(1) + q(-1), dec.D[static_cast<std::size_t>(t)]);
        cmp("H~(0," + f + ")", q(-3) + q(-1, nk - 3), dec.H(0, t));
        cmp("dR(0," + f + ")", s_pow(1) * (kl(0, -3) + kl(-1, -1, nk - 3)), dr(0, t));
    }
    for (int t : lat.faces_of_dim(2)) cmp("dR(0,face " + std::to_string(t) + ")", s_pow(2) * kl(0, -2), dr(0, t));
    for (int r : lat.faces_of_dim(1)) cmp("dR(0,ray " + std::to_string(r) + ")", s_pow(3) * kl(0, -1), dr(0, r));
    return out;
}

}  // namespace toricic
