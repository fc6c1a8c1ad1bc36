#include "toricic/ishida.hpp"

#include "toricic/error.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <string>

namespace toricic {

namespace {

// Dense element of the exterior algebra of Q^n, indexed by coordinate mask.
using Multivector = std::vector<Rational>;

int popcount(unsigned x) { return std::popcount(x); }

Multivector wedge_vector(const Multivector& w, const std::vector<Rational>& v) {
    Multivector out(w.size(), Rational(0));
    for (unsigned mask = 0; mask < w.size(); ++mask) {
        if (w[mask] == 0) continue;
        for (unsigned j = 0; j < v.size(); ++j) {
            if ((mask >> j & 1U) || v[j] == 0) continue;
            // e_I ∧ e_j: move e_j past the indices of I above j.
            const bool odd = popcount(mask >> (j + 1)) % 2 != 0;
            const Rational term = w[mask] * v[j];
            if (odd) {
                out[mask | (1U << j)] -= term;
            } else {
                out[mask | (1U << j)] += term;
            }
        }
    }
    return out;
}

Multivector contract(const Multivector& w, const LatticeVector& rho) {
    Multivector out(w.size(), Rational(0));
    for (unsigned mask = 0; mask < w.size(); ++mask) {
        if (w[mask] == 0) continue;
        for (unsigned i = 0; i < rho.size(); ++i) {
            if (!(mask >> i & 1U) || rho[i] == 0) continue;
            const bool odd = popcount(mask & ((1U << i) - 1)) % 2 != 0;
            const Rational term = w[mask] * Rational(rho[i]);
            if (odd) {
                out[mask & ~(1U << i)] -= term;
            } else {
                out[mask & ~(1U << i)] += term;
            }
        }
    }
    return out;
}

// One summand: the wedge power of nu-perp for a single cone nu.
struct Block {
    int cone = 0;
    int position = 0;
    NullspaceBasis perp;
    std::vector<unsigned> labels;  // subsets of perp basis indices
    std::size_t offset = 0;

    unsigned ambient_mask(unsigned label) const {
        unsigned m = 0;
        for (unsigned i = 0; i < perp.free_columns.size(); ++i) {
            if (label >> i & 1U) m |= 1U << perp.free_columns[i];
        }
        return m;
    }
};

}  // namespace

RationalChainComplex build_degree_u_complex(const SubdivisionMap& sub, int p, const DegreeVector& u) {
    const int n = sub.target.rank();
    if (p < 0 || p > n) throw Error(ErrorKind::MalformedInput, "form degree out of range");
    if (u.face < 0 || static_cast<std::size_t>(u.face) >= sub.target.lattice().size() ||
        !is_valid_degree(sub.target, u)) {
        throw Error(ErrorKind::DegreeMismatch, "degree does not belong to the given face");
    }
    if (n > 16) throw Error(ErrorKind::MalformedInput, "rank too large for dense exterior algebra");
    const std::size_t dense = std::size_t{1} << n;
    const auto& rays = sub.source.rays;

    std::vector<char> ray_ok(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) ray_ok[r] = pairing(u.u, rays[r]) == 0;

    std::vector<std::vector<Block>> positions(static_cast<std::size_t>(p) + 1);
    std::vector<std::pair<int, int>> where(sub.cones.size(), {-1, -1});
    for (std::size_t c = 0; c < sub.cones.size(); ++c) {
        const auto& cone = sub.cones[c];
        const int l = static_cast<int>(cone.size());
        if (l > p) continue;
        bool ok = true;
        for (int r : cone) ok = ok && ray_ok[static_cast<std::size_t>(r)];
        if (!ok) continue;

        Block b;
        b.cone = static_cast<int>(c);
        b.position = l;
        RationalMatrix m(cone.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cone.size(); ++i) {
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                m(i, j) = rays[static_cast<std::size_t>(cone[i])][j];
            }
        }
        if (cone.empty()) {
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
                e[j] = 1;
                b.perp.vectors.push_back(std::move(e));
                b.perp.free_columns.push_back(j);
            }
        } else {
            b.perp = nullspace(m);
        }
        const unsigned k = static_cast<unsigned>(p - l);
        const unsigned dim = static_cast<unsigned>(b.perp.vectors.size());
        for (unsigned label = 0; label < (1U << dim); ++label) {
            if (static_cast<unsigned>(popcount(label)) == k) b.labels.push_back(label);
        }
        auto& list = positions[static_cast<std::size_t>(l)];
        where[c] = {l, static_cast<int>(list.size())};
        list.push_back(std::move(b));
    }

    RationalChainComplex out;
    for (auto& list : positions) {
        std::size_t total = 0;
        for (auto& b : list) {
            b.offset = total;
            total += b.labels.size();
        }
        out.dims.push_back(total);
    }

    for (int l = 0; l < p; ++l) {
        const auto& src = positions[static_cast<std::size_t>(l)];
        const auto& dst = positions[static_cast<std::size_t>(l) + 1];
        RationalMatrix d(out.dims[static_cast<std::size_t>(l) + 1], out.dims[static_cast<std::size_t>(l)]);
        const bool negate = (p - l - 1) % 2 != 0;
        for (const auto& b : src) {
            const auto& nu = sub.cones[static_cast<std::size_t>(b.cone)];
            // Targets: cones nu + rho still in the degree-u support.
            std::vector<std::pair<std::size_t, const Block*>> targets;
            for (std::size_t r = 0; r < rays.size(); ++r) {
                if (!ray_ok[r] || std::binary_search(nu.begin(), nu.end(), static_cast<int>(r))) continue;
                std::vector<int> mu = nu;
                mu.insert(std::upper_bound(mu.begin(), mu.end(), static_cast<int>(r)), static_cast<int>(r));
                const int id = sub.find_cone(mu);
                if (id < 0) continue;
                const auto [pos, idx] = where[static_cast<std::size_t>(id)];
                if (pos != l + 1) continue;
                targets.emplace_back(r, &dst[static_cast<std::size_t>(idx)]);
            }
            if (targets.empty()) continue;

            for (std::size_t col = 0; col < b.labels.size(); ++col) {
                Multivector w(dense, Rational(0));
                w[0] = 1;
                for (unsigned i = 0; i < b.perp.vectors.size(); ++i) {
                    if (b.labels[col] >> i & 1U) w = wedge_vector(w, b.perp.vectors[i]);
                }
                for (const auto& [r, t] : targets) {
                    const Multivector image = contract(w, rays[r]);
                    for (std::size_t row = 0; row < t->labels.size(); ++row) {
                        const Rational& c = image[t->ambient_mask(t->labels[row])];
                        if (c == 0) continue;
                        d(t->offset + row, b.offset + col) = negate ? Rational(-c) : c;
                    }
                }
            }
        }
        out.differentials.push_back(std::move(d));
    }

    for (std::size_t i = 1; i < out.differentials.size(); ++i) {
        if (!multiply(out.differentials[i], out.differentials[i - 1]).is_zero()) {
            throw Error(ErrorKind::InvariantViolation,
                        "Ishida differential does not square to zero at position " + std::to_string(i));
        }
    }
    return out;
}

std::vector<std::size_t> cohomology_dims(const RationalChainComplex& c, ExecutionPolicy policy) {
    std::vector<std::size_t> ranks;
    for (const auto& d : c.differentials) ranks.push_back(rank(d, policy));
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < c.dims.size(); ++i) {
        std::size_t v = c.dims[i];
        if (i < ranks.size()) v -= ranks[i];
        if (i > 0) v -= ranks[i - 1];
        h.push_back(v);
    }
    return h;
}

BiLaurentPolynomial omega_oracle(const SubdivisionMap& sub, int face, ExecutionPolicy policy,
                                 const std::optional<DegreeVector>& u) {
    const DegreeVector degree = u ? *u : pick_degree(sub.target, face);
    if (degree.face != face) throw Error(ErrorKind::DegreeMismatch, "degree belongs to a different face");
    const int n = sub.target.rank();
    std::vector<BiLaurentPolynomial> parts(static_cast<std::size_t>(n) + 1);

    auto one = [&](int p) {
        const auto h = cohomology_dims(build_degree_u_complex(sub, p, degree), policy);
        BiLaurentPolynomial part;
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] == 0) continue;
            part += BiMonomial{Rational(static_cast<long>(h[i])), -2 * p, static_cast<int>(i) - n + p};
        }
        parts[static_cast<std::size_t>(p)] = std::move(part);
    };

    if (policy == ExecutionPolicy::Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (int p = 0; p <= n; ++p) {
            try {
                one(p);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (int p = 0; p <= n; ++p) one(p);
    }

    BiLaurentPolynomial omega;
    for (const auto& part : parts) omega += part;
    return omega;
}

namespace {

// L^{-n}(1 + K^{-1}L)^{n-d}
BiLaurentPolynomial normal_factor(int face_dim, int n) {
    const BiLaurentPolynomial one_plus = BiLaurentPolynomial::constant(1) + BiMonomial{1, -2, 1};
    return BiLaurentPolynomial::l_power(-n) * one_plus.pow(static_cast<unsigned>(n - face_dim));
}

}  // namespace

BiLaurentPolynomial omega_closed_form(const FaceLattice& lattice, const MultiplicityTable& d, int face, int n) {
    const int dt = lattice.face(face).dim;
    const BiLaurentPolynomial x = BiMonomial{1, -2, 2};  // K^{-1}L^2
    const BiLaurentPolynomial one_minus = BiLaurentPolynomial::constant(1) - x;
    BiLaurentPolynomial sum;
    for (int mu : lattice.faces_below(face)) {
        for (int j = 0; j <= lattice.face(mu).dim; ++j) {
            const auto c = d.count(mu, j);
            if (c == 0) continue;
            sum += one_minus.pow(static_cast<unsigned>(dt - j)) * x.pow(static_cast<unsigned>(j)) *
                   Rational(static_cast<long>(c));
        }
    }
    return normal_factor(dt, n) * sum;
}

BiLaurentPolynomial omega_from_fiber(const LaurentPolynomial& fiber, int face_dim, int n) {
    return normal_factor(face_dim, n) * laurent_eval_substitute(fiber, BiMonomial{1, -1, 1});
}

}  // namespace toricic
