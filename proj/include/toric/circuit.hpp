#pragma once

// Arithmetic circuits with division over Q(i).

#include "toric/intlinalg.hpp"
#include "toric/numeric.hpp"

#include "json.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace toric {

struct InputGate {
    std::size_t var;
};
struct ConstGate {
    GaussianRational value;
};
struct AddGate {
    std::size_t a, b;
};
struct MulGate {
    std::size_t a, b;
};
struct InvGate {
    std::size_t a;
};

using Gate = std::variant<InputGate, ConstGate, AddGate, MulGate, InvGate>;

class CircuitEvaluationError : public std::domain_error {
public:
    CircuitEvaluationError(std::size_t gate, const std::string& what)
        : std::domain_error("gate " + std::to_string(gate) + ": " + what), gate_(gate) {}
    std::size_t gate() const { return gate_; }

private:
    std::size_t gate_;
};

/// A topologically ordered gate list: every gate only references gates with
/// smaller indices.  Builders return the index of the new gate.
class ArithmeticCircuit {
public:
    std::size_t input(std::size_t var);
    std::size_t constant(GaussianRational value);
    std::size_t add(std::size_t a, std::size_t b);
    std::size_t mul(std::size_t a, std::size_t b);
    std::size_t inv(std::size_t a);
    void mark_output(std::size_t gate);

    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::size_t>& outputs() const { return outputs_; }
    std::size_t size() const { return gates_.size(); }

    /// Number of gates plus the bit length of every constant
    /// (numerator and denominator of both components).
    std::size_t bit_size() const;

    /// Number of input variables referenced (max var index + 1).
    std::size_t arity() const;

    nlohmann::ordered_json to_json() const;
    /// Validates gate references; throws ParseError on malformed input.
    static ArithmeticCircuit from_json(const nlohmann::ordered_json& j);

private:
    std::size_t push(Gate g);
    void check_ref(std::size_t ref) const;

    std::vector<Gate> gates_;
    std::vector<std::size_t> outputs_;
};

/// Values of all outputs at the given point.  Throws CircuitEvaluationError
/// when an inverse gate sees zero and std::invalid_argument when the point
/// is too short.
std::vector<GaussianRational> evaluate_circuit(const ArithmeticCircuit& c, std::span<const GaussianRational> point);

/// Adds Laurent monomials to a circuit by repeated squaring.  The squaring
/// chain of each variable is shared by every monomial built through the
/// same builder.
class MonomialBuilder {
public:
    explicit MonomialBuilder(ArithmeticCircuit& circuit) : circuit_(circuit) {}

    /// Gate computing x^c; the constant 1 when c = 0.
    std::size_t monomial(const ExponentVector& c);

private:
    std::size_t positive_power(std::size_t var, const BigInt& e);

    ArithmeticCircuit& circuit_;
    std::map<std::size_t, std::vector<std::size_t>> squares_;
};

/// Gate-count bound met by monomial_circuit:
///   gates <= kMonomialGateFactor * (n + sum_j bit_length(c_j)).
inline constexpr std::size_t kMonomialGateFactor = 4;

/// Single-output circuit for x^c (x has c.size() variables).
ArithmeticCircuit monomial_circuit(const ExponentVector& c);

struct GeneratorSystem {
    ArithmeticCircuit circuit;
    /// One exponent vector per output, in Z^n (zero off S).
    std::vector<ExponentVector> exponents;
};

/// Circuit whose outputs are the invariant Laurent monomials x^b for a
/// lattice basis b of L_S.  With S = [n] these also generate the field of
/// rational invariants.
GeneratorSystem generators_circuit(const IntMatrix& m, const IndexSet& support);

/// Documented size guarantee for generators_circuit on a d x n matrix whose
/// entries have at most b bits:
///   bit_size <= 4 n^2 (d (b + ceil(log2 n)) + 2).
/// A lattice basis has at most n vectors; each entry stays within about
/// d (b + log2 n) bits, and every monomial costs two gates per bit.
std::size_t generator_bit_size_bound(std::size_t d, std::size_t n, std::size_t b);

}  // namespace toric
