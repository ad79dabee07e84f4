#include "toric/cli.hpp"

#include "toric/apps.hpp"
#include "toric/circuit.hpp"
#include "toric/monomial.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace toric::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Rethrows parse problems with the file name attached.
template <class F>
auto with_file(const std::string& path, F&& f) {
    try {
        return f(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

IntMatrix load_matrix(const std::string& path) {
    return with_file(path, [](const std::string& text) { return parse_matrix(text); });
}

Vector load_vector(const std::string& path, const char* name, std::size_t n) {
    Vector v = with_file(path, [](const std::string& text) { return parse_vector_json(text); });
    if (v.size() != n) {
        throw InputError("vector " + std::string(name) + " has " + std::to_string(v.size()) +
                         " coordinates but the weight matrix has " + std::to_string(n) + " columns");
    }
    return v;
}

Json integer_json(const BigInt& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json vector_json(const ExponentVector& c) {
    Json out = Json::array();
    for (const auto& x : c) out.push_back(integer_json(x));
    return out;
}

Json index_json(const IndexSet& s) {
    Json out = Json::array();
    for (auto j : s) out.push_back(j + 1);
    return out;
}

Json witness_json(const Witness& w) {
    if (const auto* m = std::get_if<MonomialWitness>(&w)) return Json{{"exponents", vector_json(m->exponents)}};
    if (const auto* s = std::get_if<SubgroupWitness>(&w)) return Json{{"subgroup", vector_json(s->subgroup.nu)}};
    if (const auto* st = std::get_if<StageWitness>(&w)) {
        Json out{{"stage", to_string(st->stage)}};
        if (st->exponents) out["exponents"] = vector_json(*st->exponents);
        if (st->index) out["index"] = *st->index + 1;
        return out;
    }
    return nullptr;
}

Json decision_json(const OrbitDecision& d) {
    Json out{{"verdict", to_string(d.verdict)}};
    if (!std::holds_alternative<std::monostate>(d.witness)) out["witness"] = witness_json(d.witness);
    return out;
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw VerificationError("witness re-verification failed: " + what);
}

bool in_kernel(const IntMatrix& m, const ExponentVector& c) {
    const ExponentVector image = m * c;
    return std::all_of(image.begin(), image.end(), [](const BigInt& x) { return x == 0; });
}

bool nonnegative(const ExponentVector& c) {
    return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x >= 0; });
}

void verify_separator(const TorusAction& a, const Vector& v, const Vector& w, const ExponentVector& c,
                      bool require_nonnegative) {
    expect(c.size() == a.size(), "exponent vector length");
    expect(in_kernel(a.weights(), c), "M c != 0");
    if (require_nonnegative) expect(nonnegative(c), "separating monomial has a negative exponent");
    expect(!monomial_values_equal(v, w, c), "monomial takes equal values");
}

void verify_decision(const TorusAction& a, const Vector& v, const Vector& w, const OrbitDecision& d) {
    switch (d.verdict) {
        case Verdict::NotEqual:
            if (const auto* st = std::get_if<StageWitness>(&d.witness); st && st->stage == Stage::Norm) {
                expect(!(gaussian_norm_sq(v[*st->index]) == gaussian_norm_sq(w[*st->index])), "moduli agree");
            } else if (const auto* st2 = std::get_if<StageWitness>(&d.witness); st2 && st2->stage == Stage::Support) {
                expect(support(v) != support(w), "supports agree");
            } else {
                verify_separator(a, v, w, *d.separating_exponents(), false);
            }
            break;
        case Verdict::Disjoint: verify_separator(a, v, w, *d.separating_exponents(), true); break;
        case Verdict::Contained: {
            const auto& nu = std::get<SubgroupWitness>(d.witness).subgroup;
            const auto limit = one_param_limit(a, nu, v);
            expect(limit.has_value(), "limit along the subgroup does not exist");
            expect(support(*limit) == support(w), "limit has the wrong support");
            expect(decide_orbit_equality(a, *limit, w).verdict == Verdict::Equal, "limit is not in the orbit of w");
            break;
        }
        case Verdict::NotContained:
            if (const auto* st = std::get_if<StageWitness>(&d.witness); st && st->exponents) {
                verify_separator(a, restrict_to(v, support(w)), w, *st->exponents, false);
            }
            break;
        default: break;
    }
}

struct Inputs {
    std::string matrix, v, w;
};

int emit(std::ostream& out, const Json& j) {
    out << j.dump() << '\n';
    return kExitOk;
}

}  // namespace

Vector parse_vector_json(std::string_view text) {
    const Json j = Json::parse(text);
    if (!j.is_array()) throw ParseError("vector JSON must be an array");
    Vector v;
    v.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& x = j[k];
        try {
            if (x.is_string()) {
                v.push_back(parse_scaled(x.get<std::string>()));
            } else if (x.is_number_integer()) {
                v.emplace_back(GaussianRational(Rational(BigInt(x.dump()))));
            } else {
                throw ParseError("expected a number string");
            }
        } catch (const ParseError& e) {
            throw ParseError("entry " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return v;
}

IndexSet parse_support(std::string_view text, std::size_t n) {
    IndexSet s;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const BigInt k = parse_integer(item);
        if (k < 1 || k > n) {
            throw ParseError("support index " + k.get_str() + " outside 1.." + std::to_string(n));
        }
        s.push_back(k.get_ui() - 1);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbit problems for torus actions given by integer weight matrices", "toric"};
    app.require_subcommand(1);

    Inputs in;
    std::string support_text, out_path, a_path, b_path, start_path, pocket_path;
    long p = 0, q = 0;
    std::function<int()> action;

    auto pair_command = [&](const char* name, const char* help, std::function<int(const TorusAction&, const Vector&, const Vector&)> run) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--matrix", in.matrix, "weight matrix file")->required();
        sub->add_option("--v", in.v, "vector JSON file")->required();
        sub->add_option("--w", in.w, "vector JSON file")->required();
        sub->callback([&, run] {
            action = [&, run] {
                const TorusAction a(load_matrix(in.matrix));
                const Vector v = load_vector(in.v, "v", a.size());
                const Vector w = load_vector(in.w, "w", a.size());
                return run(a, v, w);
            };
        });
    };
    auto single_command = [&](const char* name, const char* help, std::function<int(const TorusAction&, const Vector&)> run) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--matrix", in.matrix, "weight matrix file")->required();
        sub->add_option("--v", in.v, "vector JSON file")->required();
        sub->callback([&, run] {
            action = [&, run] {
                const TorusAction a(load_matrix(in.matrix));
                return run(a, load_vector(in.v, "v", a.size()));
            };
        });
    };
    auto decided = [&](auto decide) {
        return [&out, decide](const TorusAction& a, const Vector& v, const Vector& w) {
            const OrbitDecision d = decide(a, v, w);
            verify_decision(a, v, w, d);
            return emit(out, decision_json(d));
        };
    };

    pair_command("orbit-eq", "decide O_v == O_w", decided(decide_orbit_equality));
    pair_command("oci", "decide whether the orbit closures of v and w intersect",
                 decided(decide_orbit_closure_intersection));
    pair_command("occ", "decide whether w lies in the orbit closure of v", decided(decide_orbit_closure_containment));
    pair_command("compact-eq", "orbit equality for the compact torus", decided(decide_compact_orbit_equality));
    pair_command("separate", "nonnegative invariant monomial separating v and w",
                 [&](const TorusAction& a, const Vector& v, const Vector& w) {
                     ExponentVector c;
                     try {
                         c = separating_invariant_monomial(a, v, w);
                     } catch (const NoSeparatorError&) {
                         return emit(out, Json{{"verdict", to_string(Verdict::Intersect)}});
                     }
                     verify_separator(a, v, w, c, true);
                     return emit(out, Json{{"verdict", to_string(Verdict::Disjoint)},
                                           {"witness", Json{{"exponents", vector_json(c)}}}});
                 });

    single_command("nullcone", "decide whether 0 lies in the orbit closure of v", [&](const TorusAction& a, const Vector& v) {
        const SupportProfile prof = essential_support(a, v);
        if (prof.esupp.empty()) return emit(out, Json{{"verdict", "in_null_cone"}});
        const std::size_t k = prof.esupp.front();
        const ExponentVector c = prof.integer_certificate(k);
        expect(in_kernel(a.weights(), c) && nonnegative(c) && c[k] > 0, "essential-support certificate");
        return emit(out, Json{{"verdict", "not_in_null_cone"},
                              {"witness", Json{{"index", k + 1}, {"certificate", vector_json(c)}}}});
    });
    single_command("closed", "decide whether the orbit of v is closed", [&](const TorusAction& a, const Vector& v) {
        return emit(out, Json{{"verdict", is_orbit_closed(a, v) ? "closed" : "not_closed"}});
    });
    single_command("esupp", "support and essential support with certificates", [&](const TorusAction& a, const Vector& v) {
        const SupportProfile prof = essential_support(a, v);
        Json certs = Json::object();
        for (auto k : prof.esupp) {
            const ExponentVector c = prof.integer_certificate(k);
            expect(in_kernel(a.weights(), c) && nonnegative(c) && c[k] > 0, "essential-support certificate");
            certs[std::to_string(k + 1)] = vector_json(c);
        }
        return emit(out, Json{{"supp", index_json(prof.supp)}, {"esupp", index_json(prof.esupp)}, {"certificates", certs}});
    });

    auto* gens = app.add_subcommand("generators", "circuit for generating invariant Laurent monomials on a support");
    gens->add_option("--matrix", in.matrix, "weight matrix file")->required();
    gens->add_option("--support", support_text, "comma-separated 1-based indices (default: all)");
    gens->add_option("--out", out_path, "write the circuit JSON here (default: include it in the report)");
    gens->callback([&] {
        action = [&] {
            const IntMatrix m = load_matrix(in.matrix);
            IndexSet s;
            if (support_text.empty()) {
                for (std::size_t j = 0; j < m.cols(); ++j) s.push_back(j);
            } else {
                try {
                    s = parse_support(support_text, m.cols());
                } catch (const ParseError& e) {
                    throw InputError(std::string("--support: ") + e.what());
                }
            }
            const GeneratorSystem g = generators_circuit(m, s);
            Json exps = Json::array();
            for (const auto& c : g.exponents) {
                expect(in_kernel(m, c), "generator exponent not in the kernel");
                exps.push_back(vector_json(c));
            }
            Json report{{"outputs", g.exponents.size()}, {"exponents", exps}};
            if (out_path.empty()) {
                report["circuit"] = g.circuit.to_json();
            } else {
                std::ofstream file(out_path);
                if (!file) throw InputError("cannot write '" + out_path + "'");
                file << g.circuit.to_json().dump(2) << '\n';
                report["circuit"] = out_path;
            }
            return emit(out, report);
        };
    });

    auto* match = app.add_subcommand("matching-eq", "do two edge weightings give every perfect matching the same weight");
    match->add_option("--a", a_path, "n x n JSON array of rational strings")->required();
    match->add_option("--b", b_path, "n x n JSON array of rational strings")->required();
    match->callback([&] {
        action = [&] {
            auto load = [](const std::string& path) {
                return with_file(path, [](const std::string& text) {
                    const Json j = Json::parse(text);
                    if (!j.is_array()) throw ParseError("weights must be an array of rows");
                    BipartiteWeights bw;
                    bw.n = j.size();
                    for (const auto& row : j) {
                        if (!row.is_array()) throw ParseError("weights must be an array of rows");
                        auto& r = bw.w.emplace_back();
                        for (const auto& x : row) r.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
                        if (r.size() != bw.n) {
                            throw ParseError("row " + std::to_string(bw.w.size()) + " has " + std::to_string(r.size()) +
                                             " entries, expected " + std::to_string(bw.n));
                        }
                    }
                    return bw;
                });
            };
            const BipartiteWeights a = load(a_path);
            const BipartiteWeights b = load(b_path);
            if (a.n != b.n) {
                throw InputError("weight matrices have sizes " + std::to_string(a.n) + " and " + std::to_string(b.n));
            }
            return emit(out, Json{{"verdict", matching_weight_equivalence(a, b) ? "equivalent" : "not_equivalent"}});
        };
    });

    auto* bill = app.add_subcommand("billiards", "does the trajectory from start reach the pocket");
    bill->add_option("--p", p, "horizontal direction component")->required();
    bill->add_option("--q", q, "vertical direction component")->required();
    bill->add_option("--start", start_path, "JSON array of two unit-modulus Gaussian rationals")->required();
    bill->add_option("--pocket", pocket_path, "JSON array of two unit-modulus Gaussian rationals")->required();
    bill->callback([&] {
        action = [&] {
            auto load = [](const std::string& path) {
                const Vector v = with_file(path, [](const std::string& text) { return parse_vector_json(text); });
                if (v.size() != 2) throw InputError(path + ": expected 2 coordinates, found " + std::to_string(v.size()));
                return std::array<GaussianRational, 2>{v[0].to_gaussian_rational(), v[1].to_gaussian_rational()};
            };
            BilliardInstance inst{p, q, load(start_path), load(pocket_path)};
            try {
                inst.check();
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            return emit(out, Json{{"verdict", billiards_reachable(inst) ? "reachable" : "unreachable"}});
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        return action();
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

}  // namespace toric::cli
