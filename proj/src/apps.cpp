#include "toric/apps.hpp"

#include <numeric>
#include <stdexcept>

namespace toric {

void BipartiteWeights::check() const {
    if (w.size() != n) {
        throw std::invalid_argument("weight matrix has " + std::to_string(w.size()) + " rows, expected " +
                                    std::to_string(n));
    }
    for (const auto& row : w) {
        if (row.size() != n) {
            throw std::invalid_argument("weight matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(n));
        }
    }
}

IntMatrix matching_scaling_weights(std::size_t n) {
    const std::size_t half = n ? n - 1 : 0;
    IntMatrix m(2 * half, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = i * n + j;
            // Row character: e_i, or -(1,...,1) for the eliminated t_n.
            for (std::size_t k = 0; k < half; ++k) m(k, col) = i == half ? -1 : (i == k ? 1 : 0);
            for (std::size_t k = 0; k < half; ++k) m(half + k, col) = j == half ? -1 : (j == k ? 1 : 0);
        }
    }
    return m;
}

Vector matching_point(const BipartiteWeights& w, const BigInt& scale) {
    w.check();
    Vector v;
    v.reserve(w.n * w.n);
    for (const auto& row : w.w) {
        for (const auto& x : row) {
            const Rational scaled = x * scale;
            if (scaled.get_den() != 1) throw std::invalid_argument("matching_point: scale does not clear denominators");
            v.push_back(ScaledGaussian::power_of_two(scaled.get_num()));
        }
    }
    return v;
}

bool matching_weight_equivalence(const BipartiteWeights& a, const BipartiteWeights& b) {
    a.check();
    b.check();
    if (a.n != b.n) {
        throw std::invalid_argument("matching instances have sizes " + std::to_string(a.n) + " and " +
                                    std::to_string(b.n));
    }
    BigInt scale = 1;
    for (const auto* inst : {&a, &b})
        for (const auto& row : inst->w)
            for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());

    const TorusAction action(matching_scaling_weights(a.n));
    return decide_orbit_closure_intersection(action, matching_point(a, scale), matching_point(b, scale)).verdict ==
           Verdict::Intersect;
}

void BilliardInstance::check() const {
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("billiard direction (" + std::to_string(p) + ", " + std::to_string(q) +
                                    ") is not coprime");
    }
    for (const auto* point : {&start, &pocket}) {
        for (const auto& z : *point) {
            if (z.norm() != 1) throw std::invalid_argument("billiard coordinate " + to_string(z) + " is not on the unit circle");
        }
    }
}

bool billiards_reachable(const BilliardInstance& inst) {
    inst.check();
    IntMatrix m(1, 2);
    m(0, 0) = inst.p;
    m(0, 1) = inst.q;
    const TorusAction action(std::move(m));
    const Vector v{ScaledGaussian(inst.start[0]), ScaledGaussian(inst.start[1])};
    const Vector w{ScaledGaussian(inst.pocket[0]), ScaledGaussian(inst.pocket[1])};
    return decide_compact_orbit_equality(action, v, w).verdict == Verdict::Equal;
}

}  // namespace toric
