#include "toric/orbit.hpp"

#include "toric/monomial.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace toric {

namespace {

// Clears denominators of a rational vector and removes the content.
ExponentVector primitive_integer_vector(const RationalVector& q) {
    BigInt den = 1;
    for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ExponentVector out(q.size());
    BigInt content = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = q[i].get_num() * (den / q[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& x : out) x /= content;
    return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_pair(const TorusAction& action, const Vector& v, const Vector& w) {
    action.check(v);
    action.check(w);
}

ExponentVector add_scaled(ExponentVector acc, const ExponentVector& x, const BigInt& f) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += f * x[i];
    return acc;
}

ExponentVector separate(const TorusAction& action, const Vector& v, const Vector& w, const SupportProfile& pv,
                        const SupportProfile& pw) {
    if (pv.esupp != pw.esupp) {
        // Some k is essential for exactly one side; its certificate monomial
        // is nonzero there and vanishes on the other closure.
        IndexSet only_v = set_difference(pv.esupp, pw.esupp);
        IndexSet only_w = set_difference(pw.esupp, pv.esupp);
        const bool from_v = !only_v.empty() && (only_w.empty() || only_v.front() < only_w.front());
        ExponentVector c = from_v ? pv.integer_certificate(only_v.front()) : pw.integer_certificate(only_w.front());
        if (monomial_values_equal(v, w, c)) throw std::logic_error("separator: certificate monomial does not separate");
        return c;
    }

    const IndexSet& s = pv.esupp;
    const OrbitDecision reduced = decide_orbit_equality(action, restrict_to(v, s), restrict_to(w, s));
    if (reduced.verdict == Verdict::Equal) {
        throw NoSeparatorError("separating_invariant_monomial: orbit closures intersect");
    }
    const ExponentVector& e = *reduced.separating_exponents();

    // Cancel negative exponents with certificate monomials m_j, j in S_-.
    ExponentVector d = e;
    for (std::size_t j : s) {
        if (e[j] >= 0) continue;
        ExponentVector m = pv.integer_certificate(j);
        if (!monomial_values_equal(v, w, m)) return m;
        d = add_scaled(std::move(d), m, -e[j]);
    }
    if (std::any_of(d.begin(), d.end(), [](const BigInt& x) { return x < 0; })) {
        throw std::logic_error("separator: negative exponent survived cancellation");
    }
    if (monomial_values_equal(v, w, d)) throw std::logic_error("separator: cleaned monomial does not separate");
    return d;
}

}  // namespace

BigInt TorusAction::pairing(std::size_t j, const ExponentVector& nu) const {
    if (nu.size() != dim()) {
        throw std::invalid_argument("one-parameter subgroup has " + std::to_string(nu.size()) +
                                    " components, torus has dimension " + std::to_string(dim()));
    }
    BigInt s = 0;
    for (std::size_t i = 0; i < dim(); ++i) s += weights_(i, j) * nu[i];
    return s;
}

Vector TorusAction::act(std::span<const GaussianRational> t, const Vector& v) const {
    check(v);
    if (t.size() != dim()) {
        throw std::invalid_argument("group element has " + std::to_string(t.size()) +
                                    " components, torus has dimension " + std::to_string(dim()));
    }
    Vector out;
    out.reserve(v.size());
    for (std::size_t j = 0; j < size(); ++j) {
        GaussianRational scale(1);
        for (std::size_t i = 0; i < dim(); ++i) scale = scale * pow(t[i], weights_(i, j).get_si());
        out.emplace_back(scale * v[j].mantissa(), v[j].exponent());
    }
    return out;
}

void TorusAction::check(const Vector& v) const {
    if (v.size() != size()) {
        throw std::invalid_argument("vector has " + std::to_string(v.size()) + " coordinates, weight matrix has " +
                                    std::to_string(size()) + " columns");
    }
}

IndexSet support(const Vector& v) {
    IndexSet s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) s.push_back(j);
    return s;
}

Vector restrict_to(const Vector& v, const IndexSet& keep) {
    Vector out(v.size());
    for (auto j : keep) out.at(j) = v.at(j);
    return out;
}

ExponentVector SupportProfile::integer_certificate(std::size_t k) const {
    auto it = certificates.find(k);
    if (it == certificates.end()) throw std::out_of_range("no certificate for index " + std::to_string(k));
    return primitive_integer_vector(it->second);
}

SupportProfile essential_support(const TorusAction& action, const Vector& v) {
    action.check(v);
    SupportProfile profile;
    profile.supp = support(v);
    const IndexSet& s = profile.supp;
    const std::size_t d = action.dim();

    LinearSystem sys;
    sys.num_vars = s.size();
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector row(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) row[k] = action.weights()(i, s[k]);
        sys.eq_rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < s.size(); ++k) sys.nonneg_vars.push_back(k);

    for (std::size_t k = 0; k < s.size(); ++k) {
        if (profile.certificates.count(s[k])) continue;
        RationalVector unit(s.size());
        unit[k] = 1;
        sys.ge_one_rows = {unit};
        const auto c = lp_feasible(sys);
        if (!c) continue;
        // Any positive entry certifies its own index after rescaling.
        for (std::size_t j = 0; j < s.size(); ++j) {
            if ((*c)[j] <= 0 || profile.certificates.count(s[j])) continue;
            const Rational scale = j == k ? Rational(1) : (*c)[j];
            RationalVector cert(action.size());
            for (std::size_t l = 0; l < s.size(); ++l) cert[s[l]] = (*c)[l] / scale;
            profile.certificates.emplace(s[j], std::move(cert));
        }
    }
    for (const auto& [k, cert] : profile.certificates) profile.esupp.push_back(k);
    return profile;
}

bool is_in_null_cone(const TorusAction& action, const Vector& v) {
    return essential_support(action, v).esupp.empty();
}

bool is_orbit_closed(const TorusAction& action, const Vector& v) {
    const SupportProfile p = essential_support(action, v);
    return p.esupp == p.supp;
}

std::optional<Vector> one_param_limit(const TorusAction& action, const OneParamSubgroup& sigma, const Vector& v) {
    action.check(v);
    IndexSet keep;
    for (std::size_t j : support(v)) {
        const BigInt p = action.pairing(j, sigma.nu);
        if (p < 0) return std::nullopt;
        if (p == 0) keep.push_back(j);
    }
    return restrict_to(v, keep);
}

Vector closed_orbit_representative(const TorusAction& action, const Vector& v) {
    return restrict_to(v, essential_support(action, v).esupp);
}

const ExponentVector* OrbitDecision::separating_exponents() const {
    if (const auto* m = std::get_if<MonomialWitness>(&witness)) return &m->exponents;
    if (const auto* s = std::get_if<StageWitness>(&witness)) return s->exponents ? &*s->exponents : nullptr;
    return nullptr;
}

OrbitDecision decide_orbit_equality(const TorusAction& action, const Vector& v, const Vector& w) {
    check_pair(action, v, w);
    const IndexSet s = support(v);
    if (s != support(w)) return {Verdict::NotEqual, StageWitness{Stage::Support, std::nullopt, std::nullopt}};
    for (const auto& b : kernel_lattice_basis(action.weights(), s)) {
        ExponentVector c = lift_to_ambient(b, s, action.size());
        if (!monomial_values_equal(v, w, c)) return {Verdict::NotEqual, MonomialWitness{std::move(c)}};
    }
    return {Verdict::Equal, std::monostate{}};
}

OrbitDecision decide_orbit_closure_intersection(const TorusAction& action, const Vector& v, const Vector& w) {
    check_pair(action, v, w);
    const SupportProfile pv = essential_support(action, v);
    const SupportProfile pw = essential_support(action, w);
    const OrbitDecision reduced =
        decide_orbit_equality(action, restrict_to(v, pv.esupp), restrict_to(w, pw.esupp));
    if (reduced.verdict == Verdict::Equal) return {Verdict::Intersect, std::monostate{}};
    return {Verdict::Disjoint, MonomialWitness{separate(action, v, w, pv, pw)}};
}

OrbitDecision decide_orbit_closure_containment(const TorusAction& action, const Vector& v, const Vector& w) {
    check_pair(action, v, w);
    const IndexSet sv = support(v);
    const IndexSet sw = support(w);
    if (!std::includes(sv.begin(), sv.end(), sw.begin(), sw.end())) {
        return {Verdict::NotContained, StageWitness{Stage::Support, std::nullopt, std::nullopt}};
    }

    // nu free in Q^d: m^(j) . nu = 0 on supp(w), m^(k) . nu >= 1 on the rest.
    LinearSystem sys;
    sys.num_vars = action.dim();
    auto weight_row = [&](std::size_t j) {
        RationalVector row(action.dim());
        for (std::size_t i = 0; i < action.dim(); ++i) row[i] = action.weights()(i, j);
        return row;
    };
    for (auto j : sw) sys.eq_rows.push_back(weight_row(j));
    for (auto k : set_difference(sv, sw)) sys.ge_one_rows.push_back(weight_row(k));
    const auto nu = lp_feasible(sys);
    if (!nu) return {Verdict::NotContained, StageWitness{Stage::LinearProgram, std::nullopt, std::nullopt}};

    const OrbitDecision reduced = decide_orbit_equality(action, restrict_to(v, sw), w);
    if (reduced.verdict != Verdict::Equal) {
        const ExponentVector* c = reduced.separating_exponents();
        return {Verdict::NotContained,
                StageWitness{Stage::OrbitEquality, c ? std::optional<ExponentVector>(*c) : std::nullopt, std::nullopt}};
    }
    return {Verdict::Contained, SubgroupWitness{OneParamSubgroup{primitive_integer_vector(*nu)}}};
}

ExponentVector separating_invariant_monomial(const TorusAction& action, const Vector& v, const Vector& w) {
    check_pair(action, v, w);
    return separate(action, v, w, essential_support(action, v), essential_support(action, w));
}

OrbitDecision decide_compact_orbit_equality(const TorusAction& action, const Vector& v, const Vector& w) {
    OrbitDecision algebraic = decide_orbit_equality(action, v, w);
    if (algebraic.verdict != Verdict::Equal) return algebraic;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!(gaussian_norm_sq(v[j]) == gaussian_norm_sq(w[j]))) {
            return {Verdict::NotEqual, StageWitness{Stage::Norm, std::nullopt, j}};
        }
    }
    return {Verdict::Equal, std::monostate{}};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::NotEqual: return "not_equal";
        case Verdict::Intersect: return "intersect";
        case Verdict::Disjoint: return "disjoint";
        case Verdict::Contained: return "contained";
        case Verdict::NotContained: return "not_contained";
    }
    return "unknown";
}

const char* to_string(Stage s) {
    switch (s) {
        case Stage::Support: return "support";
        case Stage::LinearProgram: return "linear_program";
        case Stage::OrbitEquality: return "orbit_equality";
        case Stage::Norm: return "norm";
    }
    return "unknown";
}

}  // namespace toric
