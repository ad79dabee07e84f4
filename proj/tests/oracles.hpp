#pragma once

// Random instance generators and brute-force reference implementations.
// Nothing here calls the decision procedures under test; the oracles only
// share the number types.

#include "toric/intlinalg.hpp"
#include "toric/lp.hpp"
#include "toric/numeric.hpp"
#include "toric/orbit.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using namespace toric;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

    BigInt big(std::size_t bits, bool allow_negative = true) {
        BigInt x = 0;
        for (std::size_t i = 0; i < bits; ++i) x = 2 * x + uniform(0, 1);
        return allow_negative && chance(0.5) ? BigInt(-x) : x;
    }

    IntMatrix matrix(std::size_t d, std::size_t n, long bound) {
        IntMatrix m(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-bound, bound);
        return m;
    }

    Rational rational(long num_bound, long den_bound) {
        Rational q(BigInt(uniform(-num_bound, num_bound)), BigInt(uniform(1, den_bound)));
        q.canonicalize();
        return q;
    }

    GaussianRational gaussian(long num_bound = 3, long den_bound = 3) {
        return {rational(num_bound, den_bound), rational(num_bound, den_bound)};
    }

    GaussianRational nonzero_gaussian(long num_bound = 3, long den_bound = 3) {
        for (;;) {
            GaussianRational g = gaussian(num_bound, den_bound);
            if (!g.is_zero()) return g;
        }
    }

    /// Coordinates are zero with probability zero_p, else a small Gaussian
    /// rational times 2^p with |p| <= max_shift.
    Vector vector(std::size_t n, double zero_p = 0.25, long max_shift = 2) {
        Vector v;
        for (std::size_t j = 0; j < n; ++j) {
            if (chance(zero_p)) {
                v.emplace_back();
            } else {
                v.emplace_back(nonzero_gaussian(), BigInt(uniform(-max_shift, max_shift)));
            }
        }
        return v;
    }

    IndexSet subset(std::size_t n, double keep_p = 0.7) {
        IndexSet s;
        for (std::size_t j = 0; j < n; ++j)
            if (chance(keep_p)) s.push_back(j);
        return s;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Linear algebra by definition.

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Determinant by cofactor expansion along the first row.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    if (k == 1) return a[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            auto& row = minor.emplace_back();
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
        }
        const BigInt term = a[0][c] * cofactor_det(minor);
        total += c % 2 == 0 ? term : BigInt(-term);
    }
    return total;
}

inline void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& f) {
    IndexSet pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(pick);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            pick[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// gcd of all k x k minors (0 if they all vanish).
inline BigInt determinantal_divisor(const IntMatrix& m, std::size_t k) {
    BigInt g = 0;
    for_each_combination(m.rows(), k, [&](const IndexSet& rows) {
        for_each_combination(m.cols(), k, [&](const IndexSet& cols) {
            std::vector<std::vector<BigInt>> sub;
            for (auto r : rows) {
                auto& row = sub.emplace_back();
                for (auto c : cols) row.push_back(m(r, c));
            }
            g = gcd(g, cofactor_det(sub));
        });
    });
    return g;
}

/// Invariant factors s_1 | s_2 | ... (nonzero ones only).
inline std::vector<BigInt> invariant_factors(const IntMatrix& m) {
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        const BigInt dk = determinantal_divisor(m, k);
        if (dk == 0) break;
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

inline std::size_t rank_by_minors(const IntMatrix& m) {
    std::size_t r = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        if (determinantal_divisor(m, k) == 0) break;
        r = k;
    }
    return r;
}

/// Matrix whose columns are the given vectors (length len).
inline IntMatrix columns_matrix(const std::vector<ExponentVector>& vs, std::size_t len) {
    IntMatrix m(len, vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k)
        for (std::size_t i = 0; i < len; ++i) m(i, k) = vs[k][i];
    return m;
}

/// Every c in [-bound, bound]^|S| with M_S c = 0, in lexicographic order.
inline std::vector<ExponentVector> box_kernel(const IntMatrix& m, const IndexSet& s, long bound) {
    std::vector<ExponentVector> out;
    const std::size_t k = s.size();
    std::vector<long> c(k, -bound);
    if (k == 0) return {ExponentVector{}};
    for (;;) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i) {
            long acc = 0;
            for (std::size_t t = 0; t < k; ++t) acc += m(i, s[t]).get_si() * c[t];
            zero = acc == 0;
        }
        if (zero) out.emplace_back(c.begin(), c.end());
        std::size_t t = 0;
        while (t < k && c[t] == bound) c[t++] = -bound;
        if (t == k) break;
        ++c[t];
    }
    return out;
}

/// Integer row echelon form of the lattice generated by vs (Euclid on each
/// column); the nonzero rows are a basis of that lattice.
inline std::vector<ExponentVector> echelon_basis(std::vector<ExponentVector> vs, std::size_t len) {
    std::vector<ExponentVector> basis;
    for (std::size_t col = 0; col < len && !vs.empty(); ++col) {
        for (;;) {
            std::size_t pivot = vs.size();
            for (std::size_t k = 0; k < vs.size(); ++k)
                if (vs[k][col] != 0 && (pivot == vs.size() || abs(vs[k][col]) < abs(vs[pivot][col]))) pivot = k;
            if (pivot == vs.size()) break;
            bool reduced = true;
            for (std::size_t k = 0; k < vs.size(); ++k) {
                if (k == pivot || vs[k][col] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), vs[k][col].get_mpz_t(), vs[pivot][col].get_mpz_t());
                for (std::size_t i = 0; i < len; ++i) vs[k][i] -= q * vs[pivot][i];
                if (vs[k][col] != 0) reduced = false;
            }
            if (reduced) {
                basis.push_back(vs[pivot]);
                vs.erase(vs.begin() + static_cast<long>(pivot));
                break;
            }
        }
        vs.erase(std::remove_if(vs.begin(), vs.end(),
                                [](const ExponentVector& v) {
                                    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
                                }),
                 vs.end());
    }
    return basis;
}

/// A basis of ker(M_S) ∩ Z^|S| built from the smallest box [-b, b]^|S|
/// whose kernel vectors have full rank |S| - rank(M_S) and generate a
/// saturated lattice (gcd of maximal minors 1).  nullopt if no box up to
/// the size limit works.
inline std::optional<std::vector<ExponentVector>> kernel_generators(const IntMatrix& m, const IndexSet& s) {
    const std::size_t r = s.size() - rank_by_minors(m.select_columns(s));
    if (r == 0) return std::vector<ExponentVector>{};
    const long max_bound = s.size() >= 4 ? 8 : 16;
    for (long b : {2L, 4L, 8L, 16L}) {
        if (b > max_bound) break;
        auto basis = echelon_basis(box_kernel(m, s, b), s.size());
        if (basis.size() == r && determinantal_divisor(columns_matrix(basis, s.size()), r) == 1) return basis;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Direct evaluation.

inline GaussianRational power(const GaussianRational& a, const BigInt& e) {
    GaussianRational base = e < 0 ? GaussianRational(1) / a : a;
    GaussianRational out(1);
    for (BigInt k = abs(e); k > 0; --k) out = out * base;
    return out;
}

/// prod v_j^c_j by plain multiplication; nullopt if it involves 0^negative.
inline std::optional<GaussianRational> eval_monomial(const Vector& v, const ExponentVector& c) {
    GaussianRational out(1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const GaussianRational x = v[j].to_gaussian_rational();
        if (x.is_zero()) {
            if (c[j] < 0) return std::nullopt;
            return GaussianRational(0);
        }
        out = out * power(x, c[j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Orbit questions by enumeration.

/// v^c = w^c for every c in gens (vectors indexed by s).
inline bool agree_on(const std::vector<ExponentVector>& gens, const IndexSet& s, const Vector& v, const Vector& w) {
    for (const auto& local : gens) {
        ExponentVector c(v.size());
        for (std::size_t k = 0; k < s.size(); ++k) c[s[k]] = local[k];
        if (*eval_monomial(v, c) != *eval_monomial(w, c)) return false;
    }
    return true;
}

/// Orbit equality: equal supports and v^c = w^c on a basis of L_S found by
/// box enumeration.  nullopt when the box is too small.
inline std::optional<bool> orbit_equal(const IntMatrix& m, const Vector& v, const Vector& w) {
    const IndexSet s = support(v);
    if (s != support(w)) return false;
    const auto gens = kernel_generators(m, s);
    if (!gens) return std::nullopt;
    return agree_on(*gens, s, v, w);
}

/// lim sigma_nu(eps) . v, if it exists.
inline std::optional<Vector> limit(const IntMatrix& m, const ExponentVector& nu, const Vector& v) {
    Vector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        BigInt p = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) p += m(i, j) * nu[i];
        if (p < 0) return std::nullopt;
        if (p == 0) out[j] = v[j];
    }
    return out;
}

/// Searches nu in [-bound, bound]^d for lim sigma_nu(eps) . v in O_w.
/// Returns the first such nu; nullopt if none or if an orbit-equality
/// oracle call was inconclusive.
inline std::optional<ExponentVector> containment_witness(const IntMatrix& m, const Vector& v, const Vector& w,
                                                         long bound = 3) {
    const IndexSet sw = support(w);
    const auto gens = kernel_generators(m, sw);
    if (!gens) return std::nullopt;
    const std::size_t d = m.rows();
    std::vector<long> nu(d, -bound);
    for (;;) {
        const ExponentVector nub(nu.begin(), nu.end());
        if (auto lim = limit(m, nub, v); lim && support(*lim) == sw && agree_on(*gens, sw, *lim, w)) return nub;
        std::size_t t = 0;
        while (t < d && nu[t] == bound) nu[t++] = -bound;
        if (t == d) return std::nullopt;
        ++nu[t];
    }
}

// ---------------------------------------------------------------------------
// Orbit instances.

struct OrbitInstance {
    IntMatrix m;
    Vector v;
    Vector w;
};

inline Vector act_by(const IntMatrix& m, const std::vector<GaussianRational>& t, const Vector& v) {
    return TorusAction(m).act(t, v);
}

/// A random pair (v, w) for a random d x n weight matrix.  The mix covers
/// w in the orbit of v, w in the orbit of a one-parameter limit of v, w a
/// perturbation of such a point, and w unrelated to v.
inline OrbitInstance random_orbit_instance(Rng& rng, std::size_t max_d = 4, std::size_t max_n = 4, long bound = 3) {
    OrbitInstance inst;
    const std::size_t d = rng.uniform(1, static_cast<long>(max_d));
    const std::size_t n = rng.uniform(1, static_cast<long>(max_n));
    inst.m = rng.matrix(d, n, bound);
    inst.v = rng.vector(n);
    std::vector<GaussianRational> t(d);
    for (auto& x : t) x = rng.nonzero_gaussian(2, 2);

    Vector base = inst.v;
    if (rng.chance(0.4)) {
        ExponentVector nu(d);
        for (auto& x : nu) x = rng.uniform(-2, 2);
        if (auto lim = limit(inst.m, nu, inst.v)) base = *lim;
    }
    switch (rng.uniform(0, 3)) {
        case 0:
        case 1: inst.w = act_by(inst.m, t, base); break;
        case 2: {
            inst.w = act_by(inst.m, t, base);
            const std::size_t j = rng.index(n);
            if (!inst.w[j].is_zero()) {
                inst.w[j] = ScaledGaussian(inst.w[j].mantissa() * rng.nonzero_gaussian(2, 2), inst.w[j].exponent());
            }
            break;
        }
        default: inst.w = rng.vector(n);
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility.

/// a . y >= b.
struct Inequality {
    RationalVector a;
    Rational b;
};

inline bool fourier_motzkin_feasible(const LinearSystem& sys) {
    const std::size_t n = sys.num_vars;
    std::vector<Inequality> rows;
    for (const auto& r : sys.eq_rows) {
        rows.push_back({r, 0});
        RationalVector neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -r[i];
        rows.push_back({neg, 0});
    }
    for (const auto& r : sys.ge_one_rows) rows.push_back({r, 1});
    for (auto j : sys.nonneg_vars) {
        RationalVector e(n);
        e[j] = 1;
        rows.push_back({e, 0});
    }

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Inequality> pos, neg, next;
        for (auto& r : rows) {
            if (r.a[x] > 0) {
                pos.push_back(std::move(r));
            } else if (r.a[x] < 0) {
                neg.push_back(std::move(r));
            } else {
                next.push_back(std::move(r));
            }
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                // p.a[x] > 0, q.a[x] < 0: (-q.a[x]) p + p.a[x] q eliminates x.
                const Rational fp = -q.a[x], fq = p.a[x];
                Inequality r{RationalVector(n), fp * p.b + fq * q.b};
                for (std::size_t i = 0; i < n; ++i) r.a[i] = fp * p.a[i] + fq * q.a[i];
                // Normalize so duplicates collapse.
                Rational scale = 0;
                for (const auto& c : r.a)
                    if (c != 0) {
                        scale = abs(c);
                        break;
                    }
                if (scale == 0) scale = abs(r.b) == 0 ? Rational(1) : Rational(abs(r.b));
                for (auto& c : r.a) c /= scale;
                r.b /= scale;
                next.push_back(std::move(r));
            }
        }
        std::sort(next.begin(), next.end(), [](const Inequality& a, const Inequality& b) {
            if (a.a != b.a) return a.a < b.a;
            return a.b < b.b;
        });
        // Among rows with equal a, only the largest b matters.
        std::vector<Inequality> dedup;
        for (auto& r : next) {
            if (!dedup.empty() && dedup.back().a == r.a) {
                dedup.back().b = std::max(dedup.back().b, r.b);
            } else {
                dedup.push_back(std::move(r));
            }
        }
        rows = std::move(dedup);
    }
    return std::all_of(rows.begin(), rows.end(), [](const Inequality& r) { return r.b <= 0; });
}

// ---------------------------------------------------------------------------
// Perfect matchings.

/// Every permutation gives the same total weight under a and b.
inline bool matchings_equal(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Rational sa = 0, sb = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sa += a[i][perm[i]];
            sb += b[i][perm[i]];
        }
        if (sa != sb) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace oracle
