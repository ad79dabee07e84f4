#pragma once

// Orbit problems for the torus (C^x)^d acting on C^n through a weight matrix.

#include "toric/intlinalg.hpp"
#include "toric/lp.hpp"
#include "toric/numeric.hpp"

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace toric {

/// A point of C^n; coordinates are scaled Gaussian rationals.
using Vector = std::vector<ScaledGaussian>;

/// The action t . v = (prod_i t_i^{m_ij} v_j)_j of T = (C^x)^d given by a
/// d x n integer weight matrix; column j is the weight of coordinate j.
class TorusAction {
public:
    explicit TorusAction(IntMatrix weights) : weights_(std::move(weights)) {}

    const IntMatrix& weights() const { return weights_; }
    std::size_t dim() const { return weights_.rows(); }
    std::size_t size() const { return weights_.cols(); }

    /// m^(j) . nu.
    BigInt pairing(std::size_t j, const ExponentVector& nu) const;

    /// rho_M(t) v for a group element t in (Q(i)^x)^d.
    Vector act(std::span<const GaussianRational> t, const Vector& v) const;

    /// Throws std::invalid_argument unless v has n coordinates.
    void check(const Vector& v) const;

private:
    IntMatrix weights_;
};

/// sigma(eps) = (eps^nu_1, ..., eps^nu_d).
struct OneParamSubgroup {
    ExponentVector nu;
    friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;
};

IndexSet support(const Vector& v);

/// v with coordinates outside `keep` set to zero.
Vector restrict_to(const Vector& v, const IndexSet& keep);

/// supp(v), esupp(v) and, for each k in esupp(v), a certificate: a
/// nonnegative vector c in Q^n supported on supp(v) with sum_j c_j m^(j) = 0
/// and c_k >= 1.
struct SupportProfile {
    IndexSet supp;
    IndexSet esupp;
    std::map<std::size_t, RationalVector> certificates;

    /// Certificate k scaled to a primitive nonnegative integer vector.
    ExponentVector integer_certificate(std::size_t k) const;
};

SupportProfile essential_support(const TorusAction& action, const Vector& v);

bool is_in_null_cone(const TorusAction& action, const Vector& v);
bool is_orbit_closed(const TorusAction& action, const Vector& v);

/// lim_{eps -> 0} sigma(eps) . v, if it exists.
std::optional<Vector> one_param_limit(const TorusAction& action, const OneParamSubgroup& sigma, const Vector& v);

/// v restricted to esupp(v): a point of the unique closed orbit in the
/// closure of O_v.
Vector closed_orbit_representative(const TorusAction& action, const Vector& v);

enum class Verdict { Equal, NotEqual, Intersect, Disjoint, Contained, NotContained };

enum class Stage {
    Support,         // supports rule it out
    LinearProgram,   // no one-parameter subgroup reaches supp(w)
    OrbitEquality,   // an invariant Laurent monomial separates
    Norm,            // some |v_j| != |w_j| (compact torus)
};

/// An invariant (Laurent) monomial x^c, c in Z^n, taking different values.
struct MonomialWitness {
    ExponentVector exponents;
};

/// A one-parameter subgroup driving v into the orbit of w.
struct SubgroupWitness {
    OneParamSubgroup subgroup;
};

/// The stage at which a negative answer was reached, with its evidence.
struct StageWitness {
    Stage stage;
    std::optional<ExponentVector> exponents;
    std::optional<std::size_t> index;
};

using Witness = std::variant<std::monostate, MonomialWitness, SubgroupWitness, StageWitness>;

struct OrbitDecision {
    Verdict verdict;
    Witness witness;

    /// Exponents of a MonomialWitness or of a StageWitness, if any.
    const ExponentVector* separating_exponents() const;
};

/// O_v == O_w.  NotEqual carries StageWitness{Support} or a lattice basis
/// vector c (MonomialWitness) with v^c != w^c.
OrbitDecision decide_orbit_equality(const TorusAction& action, const Vector& v, const Vector& w);

/// closure(O_v) ∩ closure(O_w) != ∅.  Disjoint carries a nonnegative
/// separating invariant monomial.
OrbitDecision decide_orbit_closure_intersection(const TorusAction& action, const Vector& v, const Vector& w);

/// w in closure(O_v).  Contained carries the one-parameter subgroup;
/// NotContained carries the failed stage.
OrbitDecision decide_orbit_closure_containment(const TorusAction& action, const Vector& v, const Vector& w);

class NoSeparatorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A nonnegative c with M c = 0 and v^c != w^c.  Requires disjoint orbit
/// closures; throws NoSeparatorError otherwise.
ExponentVector separating_invariant_monomial(const TorusAction& action, const Vector& v, const Vector& w);

/// Orbit equality for the compact torus (S^1)^d: equal T-orbits and
/// |v_j| = |w_j| for every j.
OrbitDecision decide_compact_orbit_equality(const TorusAction& action, const Vector& v, const Vector& w);

const char* to_string(Verdict v);
const char* to_string(Stage s);

}  // namespace toric
