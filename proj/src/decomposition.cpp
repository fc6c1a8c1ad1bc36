#include "toricic/decomposition.hpp"

#include "toricic/error.hpp"

#include <exception>
#include <string>

namespace toricic {

namespace {

LaurentPolynomial q2_minus_one() { return LaurentPolynomial::monomial(1, 2) - LaurentPolynomial::constant(1); }

// q^{-r} Σ_l counts[l] (q^2 - 1)^{r - l}
LaurentPolynomial normalized_fiber(const std::vector<std::int64_t>& counts, int r) {
    LaurentPolynomial f;
    for (int l = 0; l <= r && l < static_cast<int>(counts.size()); ++l) {
        const auto c = counts[static_cast<std::size_t>(l)];
        if (c != 0) f += q2_minus_one().pow(static_cast<unsigned>(r - l)) * Rational(static_cast<long>(c));
    }
    return f.shifted(-r);
}

// Chain counts cc[b][l] of chains a ⊊ m_1 ⊊ ... ⊊ m_l = b, for every b ⊇ a.
std::vector<std::vector<std::int64_t>> interval_chain_counts(const FaceLattice& lat, int a) {
    std::vector<std::vector<std::int64_t>> cc(lat.size());
    const int base = lat.face(a).dim;
    for (const auto& f : lat.faces()) {
        if (!lat.contains(a, f.id)) continue;
        auto& row = cc[static_cast<std::size_t>(f.id)];
        row.assign(static_cast<std::size_t>(f.dim - base) + 1, 0);
        if (f.id == a) {
            row[0] = 1;
            continue;
        }
        row[1] = 1;
        for (int m : lat.faces_below(f.id)) {
            if (m == a || m == f.id || !lat.contains(a, m)) continue;
            const auto& lower = cc[static_cast<std::size_t>(m)];
            for (std::size_t j = 1; j < lower.size(); ++j) row[j + 1] += lower[j];
        }
    }
    return cc;
}

IntervalTable empty_table(std::size_t n) {
    IntervalTable t;
    t.H.assign(n, std::vector<LaurentPolynomial>(n));
    t.D.assign(n, std::vector<LaurentPolynomial>(n));
    return t;
}

void solve_interval(const FaceLattice& lat, const std::vector<std::vector<std::int64_t>>& cc, int a, int b,
                    IntervalTable& t) {
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    if (a == b) {
        t.H[ua][ub] = LaurentPolynomial::constant(1);
        t.D[ua][ub] = LaurentPolynomial::constant(1);
        return;
    }
    LaurentPolynomial lhs = normalized_fiber(cc[ub], lat.face(b).dim - lat.face(a).dim);
    for (int m : lat.faces_below(b)) {
        if (m == a || m == b || !lat.contains(a, m)) continue;
        const auto um = static_cast<std::size_t>(m);
        lhs -= t.H[um][ub] * t.D[ua][um];
    }
    auto split = split_palindromic_negative(lhs);
    t.H[ua][ub] = std::move(split.negative);
    t.D[ua][ub] = std::move(split.palindromic);
}

// Pairs (a, b) with a ⊆ b grouped by d_b - d_a.
std::vector<std::vector<std::pair<int, int>>> pairs_by_length(const FaceLattice& lat) {
    std::vector<std::vector<std::pair<int, int>>> levels(static_cast<std::size_t>(lat.rank()) + 1);
    for (const auto& b : lat.faces()) {
        for (int a : lat.faces_below(b.id)) {
            levels[static_cast<std::size_t>(b.dim - lat.face(a).dim)].emplace_back(a, b.id);
        }
    }
    return levels;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace

LaurentPolynomial fiber_poincare(const MultiplicityTable& d, int face) {
    const int dt = d.face_dim(face);
    LaurentPolynomial f;
    for (int l = 0; l <= dt; ++l) {
        const auto c = d.count(face, l);
        if (c != 0) f += q2_minus_one().pow(static_cast<unsigned>(dt - l)) * Rational(static_cast<long>(c));
    }
    for (const auto& [e, c] : f.terms()) {
        if (c < 0) {
            throw Error(ErrorKind::NegativeCoefficient,
                        "fiber polynomial of face " + std::to_string(face) + " has a negative coefficient");
        }
    }
    return f;
}

PalindromicSplit split_palindromic_negative(const LaurentPolynomial& p) {
    LaurentPolynomial::Terms pal;
    for (const auto& [e, c] : p.terms()) {
        if (e < 0) continue;
        pal[e] += c;
        if (e > 0) pal[-e] += c;
    }
    PalindromicSplit out;
    out.palindromic = LaurentPolynomial(std::move(pal));
    out.negative = p - out.palindromic;
    return out;
}

IntervalTable solve_intervals_serial(const FaceLattice& lattice) {
    IntervalTable t = empty_table(lattice.size());
    std::vector<std::vector<std::vector<std::int64_t>>> cc;
    for (const auto& f : lattice.faces()) cc.push_back(interval_chain_counts(lattice, f.id));
    for (const auto& level : pairs_by_length(lattice)) {
        for (const auto& [a, b] : level) solve_interval(lattice, cc[static_cast<std::size_t>(a)], a, b, t);
    }
    return t;
}

IntervalTable solve_intervals_parallel(const FaceLattice& lattice) {
    IntervalTable t = empty_table(lattice.size());
    const auto n = static_cast<std::ptrdiff_t>(lattice.size());
    std::vector<std::vector<std::vector<std::int64_t>>> cc(lattice.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t a = 0; a < n; ++a) {
        cc[static_cast<std::size_t>(a)] = interval_chain_counts(lattice, static_cast<int>(a));
    }
    // Each pair writes only its own slot and reads pairs of smaller length.
    for (const auto& level : pairs_by_length(lattice)) {
        const auto m = static_cast<std::ptrdiff_t>(level.size());
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < m; ++i) {
            try {
                const auto [a, b] = level[static_cast<std::size_t>(i)];
                solve_interval(lattice, cc[static_cast<std::size_t>(a)], a, b, t);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    return t;
}

DecompositionResult solve_decomposition(const FaceLattice& lattice, const MultiplicityTable& d,
                                        ExecutionPolicy policy) {
    const IntervalTable t =
        policy == ExecutionPolicy::Parallel ? solve_intervals_parallel(lattice) : solve_intervals_serial(lattice);
    const int zero = lattice.bottom();

    DecompositionResult r;
    r.D.resize(lattice.size());
    for (const auto& f : lattice.faces()) r.F.push_back(fiber_poincare(d, f.id));

    for (const auto& tau : lattice.faces()) {
        for (int mu : lattice.faces_below(tau.id)) {
            if (mu != zero) r.Htilde[{mu, tau.id}] = t.H[static_cast<std::size_t>(mu)][static_cast<std::size_t>(tau.id)];
        }
    }
    // Faces come in increasing dimension, so D_mu is known for every mu ⊊ tau.
    for (const auto& tau : lattice.faces()) {
        const auto ut = static_cast<std::size_t>(tau.id);
        if (tau.id == zero) {
            r.D[ut] = LaurentPolynomial::constant(1);
            r.Htilde[{zero, zero}] = LaurentPolynomial::constant(1);
            continue;
        }
        LaurentPolynomial lhs = r.F[ut].shifted(-tau.dim);
        for (int mu : lattice.faces_below(tau.id)) {
            if (mu == zero || mu == tau.id) continue;
            lhs -= r.H(mu, tau.id) * r.D[static_cast<std::size_t>(mu)];
        }
        auto split = split_palindromic_negative(lhs);
        r.Htilde[{zero, tau.id}] = std::move(split.negative);
        r.D[ut] = std::move(split.palindromic);
    }

    for (const auto& tau : lattice.faces()) {
        const std::string name = "face " + std::to_string(tau.id);
        const auto& D = r.D[static_cast<std::size_t>(tau.id)];
        check(D.is_palindromic(), name + ": D is not palindromic");
        check(D.has_nonnegative_integer_coefficients(), name + ": D has a negative or fractional coefficient");
        check(D.has_parity(tau.dim % 2), name + ": D has support of the wrong parity");
        for (int mu : lattice.faces_below(tau.id)) {
            const auto& H = r.H(mu, tau.id);
            const std::string pair = "pair (" + std::to_string(mu) + ", " + std::to_string(tau.id) + ")";
            check(H.has_nonnegative_integer_coefficients(), pair + ": H~ has a negative or fractional coefficient");
            check(H.has_parity((tau.dim - lattice.face(mu).dim) % 2), pair + ": H~ has support of the wrong parity");
            if (mu != tau.id) check(H.is_zero() || H.max_degree() < 0, pair + ": H~ is not supported in negative degrees");
        }
    }
    return r;
}

LaurentPolynomial stalk_identity_residual(const FaceLattice& lattice, const DecompositionResult& r, int tau) {
    LaurentPolynomial res = r.F[static_cast<std::size_t>(tau)].shifted(-lattice.face(tau).dim);
    for (int mu : lattice.faces_below(tau)) res -= r.H(mu, tau) * r.D[static_cast<std::size_t>(mu)];
    return res;
}

std::vector<int> lowest_coefficient_exceptions(const FaceLattice& lattice, const DecompositionResult& r) {
    std::vector<int> out;
    for (const auto& f : lattice.faces()) {
        if (r.H(lattice.bottom(), f.id).coefficient(-f.dim) != 1) out.push_back(f.id);
    }
    return out;
}

}  // namespace toricic
