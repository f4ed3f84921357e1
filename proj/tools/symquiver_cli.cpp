/*
 * Copyright 2026 The symquiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// symquiver command-line tool.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"
#include "symquiver/generators.hpp"
#include "symquiver/oracle.hpp"
#include "symquiver/resolution.hpp"
#include "symquiver/schur.hpp"

using namespace symquiver;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string quiver;
    std::string dim;
    std::string kind = "symplectic";
    std::string rep;
    std::string semiinv;
    std::string weight;
    std::string interval;
    std::string format = "text";
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    long dmax = 4;
    long degree = 1;
    std::size_t pair = 0;
    std::size_t vertices = 4;
    std::string lambda;
    std::string mu;
};

SymmetricRepresentation read_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open representation file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("representation file '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        SymmetricQuiver q = parse_quiver(j.at("quiver").get<std::string>());
        FormKind kind = parse_kind(j.at("kind").get<std::string>());
        DimVector dim = j.at("dim").get<DimVector>();
        SymmetricRepresentation sw{q, kind, dim, {}};
        for (const auto& [name, rows] : j.at("maps").items()) {
            if (name.size() < 2 || name[0] != 'a') throw InputError("arrow name '" + name + "' must look like a1");
            std::size_t a = 0;
            try {
                a = std::stoul(name.substr(1));
            } catch (const std::exception&) {
                throw InputError("arrow name '" + name + "' must look like a1");
            }
            if (a < 1 || a >= q.n_vertices()) throw InputError("arrow '" + name + "' is not an arrow of " + q.to_string());
            std::vector<std::vector<Rational>> entries;
            for (const auto& row : rows) {
                entries.emplace_back();
                for (const auto& v : row) {
                    if (!v.is_string()) throw InputError("matrix entries of '" + name + "' must be rational strings");
                    entries.back().push_back(parse_rational(v.get<std::string>()));
                }
            }
            std::size_t cols = entries.empty() ? 0 : entries[0].size();
            RatMatrix m(entries.size(), cols);
            for (std::size_t r = 0; r < entries.size(); ++r) {
                if (entries[r].size() != cols) throw InputError("matrix '" + name + "' has ragged rows");
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[r][c];
            }
            if (!sw.maps.emplace(a, m).second) throw InputError("arrow '" + name + "' appears twice");
        }
        if (dim.size() == q.n_vertices())
            for (std::size_t a : q.stored_arrows())
                if (!sw.maps.count(a) && dim[q.quiver().head(a) - 1] * dim[q.quiver().tail(a) - 1] == 0)
                    sw.maps.emplace(a, RatMatrix(static_cast<std::size_t>(dim[q.quiver().head(a) - 1]),
                                                 static_cast<std::size_t>(dim[q.quiver().tail(a) - 1])));
        sw.validate();
        return sw;
    } catch (const json::exception& e) {
        throw InputError("representation file '" + path + "': " + e.what());
    } catch (const Error& e) {
        throw InputError("representation file '" + path + "': " + e.what());
    }
}

json rep_to_json(const SymmetricRepresentation& sw) {
    json j;
    j["quiver"] = sw.quiver.to_string();
    j["kind"] = kind_name(sw.kind);
    j["dim"] = sw.dim;
    json maps = json::object();
    for (const auto& [a, m] : sw.maps) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
            rows.push_back(row);
        }
        maps["a" + std::to_string(a)] = rows;
    }
    j["maps"] = maps;
    return j;
}

struct Setting {
    SymmetricQuiver quiver;
    DimVector dim;
    FormKind kind;
};

Setting setting(const Options& o) {
    if (o.quiver.empty()) throw InputError("--quiver is required");
    if (o.dim.empty()) throw InputError("--dim is required");
    Setting s{parse_quiver(o.quiver), parse_dim(o.dim), parse_kind(o.kind)};
    if (s.dim.size() != s.quiver.n_vertices())
        throw InputError("--dim needs " + std::to_string(s.quiver.n_vertices()) + " entries");
    if (!s.quiver.is_symmetric(s.dim)) throw InputError("--dim (" + o.dim + ") is not symmetric");
    if (s.kind == FormKind::Symplectic)
        if (auto f = s.quiver.fixed_vertex(); f && s.dim[*f - 1] % 2)
            throw InputError("symplectic kind needs an even dimension at the fixed vertex " + std::to_string(*f));
    return s;
}

int emit(const std::vector<VerificationReport>& reports, const std::string& format) {
    bool ok = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << reports[i].to_text();
    }
    for (const auto& r : reports) ok = ok && r.passed();
    return ok ? kExitPass : kExitFail;
}

int cmd_generators(const Options& o) {
    Setting s = setting(o);
    auto gens = enumerate_generators(s.quiver, s.dim, s.kind);
    const std::size_t n = s.quiver.n_vertices();
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& d : gens)
            arr.push_back({{"kind", d.kind == DescriptorKind::Det ? "det" : "pf"},
                           {"descriptor", d.to_string(n)},
                           {"interval", interval_to_string(d.interval)},
                           {"weight", d.weight.to_string()},
                           {"degree", d.degree}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& d : gens)
            std::cout << (d.kind == DescriptorKind::Det ? "det " : "pf  ") << d.to_string(n) << " interval "
                      << interval_to_string(d.interval) << " weight " << d.weight.to_string() << " degree "
                      << d.degree << "\n";
    }
    return kExitPass;
}

int cmd_eval(const Options& o) {
    if (o.rep.empty() || o.semiinv.empty()) throw InputError("eval needs --rep and --semiinv");
    SymmetricRepresentation sw = read_rep_file(o.rep);
    auto d = parse_descriptor(o.semiinv, sw.quiver);
    std::cout << to_string(evaluate(d, sw)) << "\n";
    return kExitPass;
}

int cmd_verify_invariance(const Options& o) {
    Setting s = setting(o);
    std::vector<SemiInvariantDescriptor> descs;
    if (!o.semiinv.empty())
        descs.push_back(parse_descriptor(o.semiinv, s.quiver));
    else
        descs = enumerate_generators(s.quiver, s.dim, s.kind);
    if (!o.weight.empty()) {
        if (o.semiinv.empty()) throw InputError("--weight needs --semiinv");
        Weight w;
        std::stringstream ss(o.weight);
        std::string item;
        while (std::getline(ss, item, ',')) w.values.push_back(parse_rational(item));
        if (w.values.size() != s.quiver.n_vertices())
            throw InputError("--weight needs " + std::to_string(s.quiver.n_vertices()) + " entries");
        descs[0].weight = w;
    }
    std::vector<VerificationReport> reports;
    for (const auto& d : descs) reports.push_back(verify_invariance(d, s.quiver, s.dim, s.kind, o.trials, o.seed));
    return emit(reports, o.format);
}

int cmd_verify_generation(const Options& o) {
    Setting s = setting(o);
    return emit({verify_generation(s.quiver, s.dim, s.kind, o.dmax), verify_cross_oracle(s.quiver, s.dim, s.kind, o.dmax)},
                o.format);
}

int cmd_verify_transport(const Options& o) {
    Setting s = setting(o);
    return emit({verify_reflection_transport(s.quiver, s.dim, s.kind, o.trials, o.seed),
                 verify_duality(s.quiver, s.dim, s.kind, o.trials, o.seed)},
                o.format);
}

int cmd_verify_pfaffian(const Options& o) {
    std::vector<VerificationReport> reports{verify_pfaffian_laws(o.trials, o.seed)};
    if (!o.quiver.empty()) {
        Setting s = setting(o);
        reports.push_back(verify_pf_skewness(s.quiver, s.dim, s.kind, o.trials, o.seed));
    }
    return emit(reports, o.format);
}

int cmd_lr(const Options& o) {
    Partition lambda = parse_partition(o.lambda), mu = parse_partition(o.mu);
    for (const auto& [nu, c] : lr_product(lambda, mu)) std::cout << partition_to_string(nu) << ": " << c << "\n";
    return kExitPass;
}

int cmd_weightspace(const Options& o) {
    Setting s = setting(o);
    auto lie = lie_weight_table(s.quiver, s.dim, s.kind, o.degree);
    const bool chain_ok = s.quiver.quiver().equioriented();
    std::cout << "weight degree lie chain\n";
    for (const auto& [torus, dim] : lie) {
        std::string chain = chain_ok ? std::to_string(chain_weight_space_dim(s.quiver, s.dim, s.kind, torus, o.degree)) : "-";
        std::cout << weight_from_torus(s.quiver, s.dim, torus).to_string() << " " << o.degree << " " << dim << " "
                  << chain << "\n";
    }
    return kExitPass;
}

int cmd_resolve(const Options& o) {
    if (o.quiver.empty() || o.interval.empty()) throw InputError("resolve needs --quiver and --interval");
    Quiver q = parse_plain_quiver(o.quiver);
    DimVector iv = parse_dim(o.interval);
    if (iv.size() != 2 || iv[0] < 1 || iv[0] > iv[1] || static_cast<std::size_t>(iv[1]) > q.n_vertices())
        throw InputError("--interval must be j,i with 1 <= j <= i <= " + std::to_string(q.n_vertices()));
    ProjResolution r = interval_resolution(q, {static_cast<std::size_t>(iv[0]), static_cast<std::size_t>(iv[1])});
    std::cout << r.to_string() << "\n";
    if (r.is_projective()) return kExitPass;
    std::cout << "rows:";
    for (std::size_t x : r.p1) std::cout << " P" << x;
    std::cout << "\ncols:";
    for (std::size_t x : r.p0) std::cout << " P" << x;
    std::cout << "\n";
    for (std::size_t i = 0; i < r.p1.size(); ++i) {
        std::cout << "[";
        for (std::size_t j = 0; j < r.p0.size(); ++j) {
            std::string cell = "0";
            for (const auto& t : r.terms)
                if (t.row == i && t.col == j) cell = to_string(t.coeff);
            std::cout << (j ? " " : "") << cell;
        }
        std::cout << "]\n";
    }
    return kExitPass;
}

int cmd_reflect(const Options& o) {
    if (o.rep.empty() || o.pair == 0) throw InputError("reflect needs --rep and --pair");
    SymmetricRepresentation sw = read_rep_file(o.rep);
    if (!o.quiver.empty() && !(parse_quiver(o.quiver) == sw.quiver))
        throw InputError("--quiver does not match the quiver in " + o.rep);
    std::cout << rep_to_json(reflect_pair_symmetric(sw, o.pair)).dump(2) << "\n";
    return kExitPass;
}

int cmd_orientations(const Options& o) {
    for (const auto& q : symmetric_orientations(o.vertices)) {
        std::cout << q.to_string();
        for (auto [sink, source] : admissible_pairs(q))
            std::cout << "  (" << sink << "," << source << ") -> " << reflect_quiver(q, sink).to_string();
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-invariants of symmetric quivers of type A"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add_setting = [&](CLI::App* c, bool required) {
        auto* q = c->add_option("--quiver", o.quiver, "quiver, e.g. A4:\">>>\"");
        auto* d = c->add_option("--dim", o.dim, "dimension vector, e.g. 1,2,2,1");
        if (required) {
            q->required();
            d->required();
        }
        c->add_option("--kind", o.kind, "orthogonal | symplectic")->check(
            CLI::IsMember({"orthogonal", "symplectic", "o", "sp"}));
    };
    auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"})); };
    auto add_random = [&](CLI::App* c) {
        c->add_option("--trials", o.trials);
        c->add_option("--seed", o.seed);
    };

    auto* gen = app.add_subcommand("generators", "list the generators of the semi-invariant ring");
    add_setting(gen, true);
    add_format(gen);
    gen->callback([&] { handler = cmd_generators; });

    auto* ev = app.add_subcommand("eval", "evaluate a semi-invariant on a representation file");
    ev->add_option("--rep", o.rep)->required();
    ev->add_option("--semiinv", o.semiinv, "cV:j,i | pf:i | pf:j,i")->required();
    ev->callback([&] { handler = cmd_eval; });

    auto* verify = app.add_subcommand("verify", "randomized and oracle checks");
    verify->require_subcommand(1);
    auto* vi = verify->add_subcommand("invariance");
    add_setting(vi, true);
    add_random(vi);
    add_format(vi);
    vi->add_option("--semiinv", o.semiinv, "check one descriptor instead of every generator");
    vi->add_option("--weight", o.weight, "claimed weight for --semiinv, e.g. 1,-1");
    vi->callback([&] { handler = cmd_verify_invariance; });
    auto* vg = verify->add_subcommand("generation");
    add_setting(vg, true);
    add_format(vg);
    vg->add_option("--dmax", o.dmax);
    vg->callback([&] { handler = cmd_verify_generation; });
    auto* vt = verify->add_subcommand("transport");
    add_setting(vt, true);
    add_random(vt);
    add_format(vt);
    vt->callback([&] { handler = cmd_verify_transport; });
    auto* vp = verify->add_subcommand("pfaffian");
    add_setting(vp, false);
    add_random(vp);
    add_format(vp);
    vp->callback([&] { handler = cmd_verify_pfaffian; });

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product");
    lr->add_option("lambda", o.lambda)->required();
    lr->add_option("mu", o.mu)->required();
    lr->callback([&] { handler = cmd_lr; });

    auto* ws = app.add_subcommand("weightspace", "weight-space dimensions from both oracles");
    add_setting(ws, true);
    ws->add_option("--degree", o.degree);
    ws->callback([&] { handler = cmd_weightspace; });

    auto* res = app.add_subcommand("resolve", "minimal projective resolution of an interval module");
    res->add_option("--quiver", o.quiver)->required();
    res->add_option("--interval", o.interval, "j,i")->required();
    res->callback([&] { handler = cmd_resolve; });

    auto* refl = app.add_subcommand("reflect", "apply the reflection at an admissible pair");
    refl->add_option("--quiver", o.quiver);
    refl->add_option("--pair", o.pair, "either vertex of the pair")->required();
    refl->add_option("--rep", o.rep)->required();
    refl->callback([&] { handler = cmd_reflect; });

    auto* orient = app.add_subcommand("orientations", "symmetric orientations and their admissible pairs");
    orient->add_option("--vertices", o.vertices)->check(CLI::Range(2, 12));
    orient->callback([&] { handler = cmd_orientations; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    try {
        return handler(o);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
