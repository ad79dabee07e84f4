#include "toric/circuit.hpp"

#include <algorithm>

namespace toric {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::size_t ArithmeticCircuit::push(Gate g) {
    gates_.push_back(std::move(g));
    return gates_.size() - 1;
}

void ArithmeticCircuit::check_ref(std::size_t ref) const {
    if (ref >= gates_.size()) {
        throw std::out_of_range("circuit: gate reference " + std::to_string(ref) + " does not precede gate " +
                                std::to_string(gates_.size()));
    }
}

std::size_t ArithmeticCircuit::input(std::size_t var) { return push(InputGate{var}); }

std::size_t ArithmeticCircuit::constant(GaussianRational value) { return push(ConstGate{std::move(value)}); }

std::size_t ArithmeticCircuit::add(std::size_t a, std::size_t b) {
    check_ref(a);
    check_ref(b);
    return push(AddGate{a, b});
}

std::size_t ArithmeticCircuit::mul(std::size_t a, std::size_t b) {
    check_ref(a);
    check_ref(b);
    return push(MulGate{a, b});
}

std::size_t ArithmeticCircuit::inv(std::size_t a) {
    check_ref(a);
    return push(InvGate{a});
}

void ArithmeticCircuit::mark_output(std::size_t gate) {
    check_ref(gate);
    outputs_.push_back(gate);
}

std::size_t ArithmeticCircuit::bit_size() const {
    std::size_t bits = gates_.size();
    for (const auto& g : gates_) {
        if (const auto* c = std::get_if<ConstGate>(&g)) bits += bit_length(c->value.re) + bit_length(c->value.im);
    }
    return bits;
}

std::size_t ArithmeticCircuit::arity() const {
    std::size_t n = 0;
    for (const auto& g : gates_) {
        if (const auto* in = std::get_if<InputGate>(&g)) n = std::max(n, in->var + 1);
    }
    return n;
}

nlohmann::ordered_json ArithmeticCircuit::to_json() const {
    nlohmann::ordered_json gates = nlohmann::ordered_json::array();
    for (const auto& g : gates_) {
        gates.push_back(std::visit(
            overloaded{
                [](const InputGate& x) { return nlohmann::ordered_json{{"op", "input"}, {"var", x.var}}; },
                [](const ConstGate& x) {
                    return nlohmann::ordered_json{{"op", "const"}, {"re", to_string(x.value.re)}, {"im", to_string(x.value.im)}};
                },
                [](const AddGate& x) { return nlohmann::ordered_json{{"op", "add"}, {"a", x.a}, {"b", x.b}}; },
                [](const MulGate& x) { return nlohmann::ordered_json{{"op", "mul"}, {"a", x.a}, {"b", x.b}}; },
                [](const InvGate& x) { return nlohmann::ordered_json{{"op", "inv"}, {"a", x.a}}; },
            },
            g));
    }
    return nlohmann::ordered_json{{"gates", std::move(gates)}, {"outputs", outputs_}};
}

ArithmeticCircuit ArithmeticCircuit::from_json(const nlohmann::ordered_json& j) {
    ArithmeticCircuit c;
    try {
        if (!j.is_object() || !j.contains("gates") || !j.contains("outputs")) {
            throw ParseError("circuit JSON needs \"gates\" and \"outputs\"");
        }
        std::size_t index = 0;
        for (const auto& g : j.at("gates")) {
            const std::string op = g.at("op").get<std::string>();
            auto ref = [&](const char* key) {
                const auto r = g.at(key).get<std::size_t>();
                if (r >= index) {
                    throw ParseError("gate " + std::to_string(index) + ": reference " + std::to_string(r) +
                                     " is not an earlier gate");
                }
                return r;
            };
            if (op == "input") {
                c.input(g.at("var").get<std::size_t>());
            } else if (op == "const") {
                c.constant({parse_rational(g.at("re").get<std::string>()), parse_rational(g.at("im").get<std::string>())});
            } else if (op == "add") {
                c.add(ref("a"), ref("b"));
            } else if (op == "mul") {
                c.mul(ref("a"), ref("b"));
            } else if (op == "inv") {
                c.inv(ref("a"));
            } else {
                throw ParseError("gate " + std::to_string(index) + ": unknown op \"" + op + "\"");
            }
            ++index;
        }
        for (const auto& o : j.at("outputs")) {
            const auto r = o.get<std::size_t>();
            if (r >= c.size()) throw ParseError("output " + std::to_string(r) + " is not a gate");
            c.mark_output(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
    return c;
}

std::vector<GaussianRational> evaluate_circuit(const ArithmeticCircuit& c, std::span<const GaussianRational> point) {
    if (point.size() < c.arity()) {
        throw std::invalid_argument("evaluate_circuit: circuit reads " + std::to_string(c.arity()) +
                                    " inputs, point has " + std::to_string(point.size()));
    }
    std::vector<GaussianRational> value(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        value[k] = std::visit(overloaded{
                                  [&](const InputGate& x) { return point[x.var]; },
                                  [&](const ConstGate& x) { return x.value; },
                                  [&](const AddGate& x) { return value[x.a] + value[x.b]; },
                                  [&](const MulGate& x) { return value[x.a] * value[x.b]; },
                                  [&](const InvGate& x) {
                                      if (value[x.a].is_zero()) throw CircuitEvaluationError(k, "inverse of zero");
                                      return value[x.a].inverse();
                                  },
                              },
                              c.gates()[k]);
    }
    std::vector<GaussianRational> out;
    out.reserve(c.outputs().size());
    for (auto o : c.outputs()) out.push_back(value[o]);
    return out;
}

std::size_t MonomialBuilder::positive_power(std::size_t var, const BigInt& e) {
    auto& chain = squares_[var];
    if (chain.empty()) chain.push_back(circuit_.input(var));
    const std::size_t bits = bit_length(e);
    while (chain.size() < bits) chain.push_back(circuit_.mul(chain.back(), chain.back()));

    std::size_t acc = 0;
    bool have = false;
    for (std::size_t k = 0; k < bits; ++k) {
        if (mpz_tstbit(e.get_mpz_t(), k) == 0) continue;
        acc = have ? circuit_.mul(acc, chain[k]) : chain[k];
        have = true;
    }
    return acc;
}

std::size_t MonomialBuilder::monomial(const ExponentVector& c) {
    std::size_t acc = 0;
    bool have = false;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        std::size_t term = positive_power(j, abs(c[j]));
        if (c[j] < 0) term = circuit_.inv(term);
        acc = have ? circuit_.mul(acc, term) : term;
        have = true;
    }
    return have ? acc : circuit_.constant(GaussianRational(1));
}

ArithmeticCircuit monomial_circuit(const ExponentVector& c) {
    ArithmeticCircuit circuit;
    MonomialBuilder builder(circuit);
    circuit.mark_output(builder.monomial(c));
    return circuit;
}

GeneratorSystem generators_circuit(const IntMatrix& m, const IndexSet& support) {
    GeneratorSystem out;
    MonomialBuilder builder(out.circuit);
    for (const auto& b : kernel_lattice_basis(m, support)) {
        ExponentVector c = lift_to_ambient(b, support, m.cols());
        out.circuit.mark_output(builder.monomial(c));
        out.exponents.push_back(std::move(c));
    }
    return out;
}

std::size_t generator_bit_size_bound(std::size_t d, std::size_t n, std::size_t b) {
    std::size_t log_n = 0;
    while ((std::size_t{1} << log_n) < n) ++log_n;
    return 4 * n * n * (d * (b + log_n) + 2);
}

}  // namespace toric
