// Command-line front end: family generation, spectral solving,
// certificate checking, power construction and the ordering report.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgs/certify.hpp"
#include "hgs/families.hpp"
#include "hgs/io.hpp"
#include "hgs/power.hpp"
#include "hgs/spectral.hpp"

using nlohmann::json;
using namespace hgs;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
    std::optional<double> tol;
    int max_iters = 100000;
    std::string format = "table";

    SolverOptions solver(double default_tol) const {
        SolverOptions opts;
        opts.tolerance = tol.value_or(default_tol);
        opts.max_iterations = max_iters;
        return opts;
    }
    bool records() const { return format == "records"; }
};

json result_to_json(const SpectralResult& res, bool emit_vector) {
    json j{{"rho", res.rho},
           {"lower", res.rho_lower},
           {"upper", res.rho_upper},
           {"iterations", res.iterations},
           {"residual", res.residual},
           {"converged", res.converged}};
    if (emit_vector)
        j["eigenvector"] = std::vector<double>(
            res.eigenvector.data(), res.eigenvector.data() + res.eigenvector.size());
    return j;
}

json witness_to_json(const Witness& w) {
    switch (w.kind) {
        case Witness::Kind::VertexSum:
            return json{{"kind", "vertex_sum"}, {"vertex", w.index}, {"value", w.value}};
        case Witness::Kind::EdgeProduct:
            return json{{"kind", "edge_product"}, {"edge", w.index}, {"value", w.value}};
        case Witness::Kind::CycleProduct:
            return json{{"kind", "cycle_product"},
                        {"cycle_vertices", w.cycle_vertices},
                        {"cycle_edges", w.cycle_edges},
                        {"value", w.value}};
    }
    return {};
}

void print_witness(std::ostream& out, const Witness& w) {
    out << std::setprecision(15);
    switch (w.kind) {
        case Witness::Kind::VertexSum:
            out << "  vertex " << w.index << ": incidence sum " << w.value << "\n";
            break;
        case Witness::Kind::EdgeProduct:
            out << "  edge " << w.index << ": weight product " << w.value << "\n";
            break;
        case Witness::Kind::CycleProduct:
            out << "  cycle";
            for (std::size_t i = 0; i < w.cycle_vertices.size(); ++i)
                out << " v" << w.cycle_vertices[i] << " e" << w.cycle_edges[i];
            out << " v" << w.cycle_vertices[0] << ": product " << w.value << "\n";
            break;
    }
}

LabeledHypergraph generate_family(const std::string& family, int k, int m) {
    if (family == "bp") return gen_b_p(k, m);
    if (family == "bl1") return gen_b_l1(k, m);
    if (family == "bl2") return gen_b_l2(k, m);
    throw std::invalid_argument("unknown family '" + family + "'");
}

int cmd_gen(const GlobalOpts&, const std::string& family, int k, int m,
            const std::string& out_path) {
    const LabeledHypergraph labeled = generate_family(family, k, m);
    if (out_path.empty())
        write_hypergraph(std::cout, labeled);
    else
        write_hypergraph_file(out_path, labeled);
    return 0;
}

int cmd_spectral(const GlobalOpts& global, const std::string& path, double shift,
                 bool emit_vector) {
    const LabeledHypergraph labeled = read_hypergraph_file(path);
    SolverOptions opts = global.solver(1e-10);
    opts.shift = shift;
    const SpectralResult res = spectral_radius(labeled.graph, opts);

    if (global.records()) {
        json j = result_to_json(res, emit_vector);
        j["schema_version"] = kSchemaVersion;
        j["command"] = "spectral-radius";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(15);
        std::cout << "rho         " << res.rho << "\n"
                  << "lower       " << res.rho_lower << "\n"
                  << "upper       " << res.rho_upper << "\n"
                  << "iterations  " << res.iterations << "\n"
                  << "residual    " << res.residual << "\n"
                  << "converged   " << (res.converged ? "yes" : "no") << "\n";
        if (emit_vector) {
            std::cout << "eigenvector";
            for (int i = 0; i < res.eigenvector.size(); ++i)
                std::cout << " " << res.eigenvector[i];
            std::cout << "\n";
        }
    }
    return res.converged ? 0 : 1;
}

int report_verdict(const GlobalOpts& global, const CertificateVerdict& verdict, int k) {
    if (global.records()) {
        json witnesses = json::array();
        for (const auto& w : verdict.witnesses) witnesses.push_back(witness_to_json(w));
        json j{{"schema_version", kSchemaVersion},
               {"command", "certify"},
               {"verdict", to_string(verdict.kind)},
               {"alpha", verdict.alpha},
               {"rho_relation", to_string(verdict.rho_bound.relation)},
               {"rho_bound", verdict.rho_bound.value},
               {"witnesses", witnesses}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(15);
        std::cout << "verdict     " << to_string(verdict.kind) << "\n"
                  << "alpha       " << verdict.alpha << "\n"
                  << "alpha^(-1/" << k << ")  " << verdict.rho_bound.value << "\n"
                  << "rho bound   rho " << to_string(verdict.rho_bound.relation) << " "
                  << verdict.rho_bound.value << "\n";
        if (!verdict.witnesses.empty()) {
            std::cout << "witnesses:\n";
            for (const auto& w : verdict.witnesses) print_witness(std::cout, w);
        }
    }
    return verdict.kind == VerdictKind::Invalid ? 1 : 0;
}

int cmd_certify_file(const GlobalOpts& global, const std::string& path, double alpha,
                     const std::string& matrix_path) {
    const LabeledHypergraph labeled = read_hypergraph_file(path);
    const WeightedIncidence b = read_weight_triples_file(matrix_path, labeled.graph);
    const double tol = global.tol.value_or(1e-9);
    return report_verdict(global, check_alpha_normal(labeled.graph, b, alpha, tol),
                          labeled.graph.k());
}

int cmd_certify_family(const GlobalOpts& global, const std::string& family, int k, int m) {
    if (family != "bl1" && family != "bl2")
        throw std::invalid_argument("certify --family must be bl1 or bl2");
    const LabeledHypergraph labeled = generate_family(family, k, m);
    const auto [b, alpha] =
        family == "bl1" ? build_bl1_certificate(k, m) : build_bl2_certificate(k, m);
    const double tol = global.tol.value_or(1e-9);
    return report_verdict(global, check_alpha_normal(labeled.graph, b, alpha, tol), k);
}

int cmd_power(const GlobalOpts& global, const std::string& seed_path, int k, int s,
              const std::string& out_path, bool emit_map, bool verify) {
    const LabeledHypergraph seed = read_hypergraph_file(seed_path);
    const PowerSpec spec{seed.graph.k(), k, s};
    const auto [power, map] = gen_power(seed.graph, spec);
    const LabeledHypergraph labeled{power, {}, {}};

    if (!out_path.empty())
        write_hypergraph_file(out_path, labeled);
    else if (!verify && !global.records())
        write_hypergraph(std::cout, labeled);

    json j{{"schema_version", kSchemaVersion},
           {"command", "power"},
           {"t", spec.t},
           {"k", spec.k},
           {"s", spec.s},
           {"vertices", power.num_vertices()},
           {"edges", power.num_edges()}};
    if (out_path.empty()) j["hypergraph"] = json::parse(hypergraph_to_json(labeled));
    if (emit_map) {
        j["vertex_blocks"] = map.vertex_blocks;
        j["edge_blocks"] = map.edge_blocks;
    }

    bool identity_holds = true;
    if (verify) {
        const SolverOptions opts = global.solver(1e-10);
        const SpectralResult seed_res = spectral_radius(seed.graph, opts);
        const SpectralResult power_res = spectral_radius(power, opts);
        const double predicted = predicted_rho(seed_res.rho, spec);
        const double error = std::abs(power_res.rho - predicted);
        const Vec lifted =
            lift_eigenvector(seed.graph, seed_res.eigenvector, seed_res.rho, spec, map);
        const double lift_resid = eigen_residual(
            power, std::pow(seed_res.rho, static_cast<double>(spec.t) * spec.s / spec.k),
            lifted);
        identity_holds = seed_res.converged && power_res.converged && error <= 1e-6 &&
                         lift_resid <= 1e-8;
        j["seed_rho"] = seed_res.rho;
        j["power_rho"] = power_res.rho;
        j["predicted_rho"] = predicted;
        j["identity_error"] = error;
        j["lift_residual"] = lift_resid;
        j["identity_holds"] = identity_holds;
    }

    if (global.records()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(15);
        std::cout << "power       " << power.num_vertices() << " vertices, "
                  << power.num_edges() << " edges (k=" << spec.k << ", s=" << spec.s
                  << ", seed t=" << spec.t << ")\n";
        if (emit_map) {
            for (std::size_t v = 0; v < map.vertex_blocks.size(); ++v) {
                std::cout << "vertex " << v << " ->";
                for (int w : map.vertex_blocks[v]) std::cout << " " << w;
                std::cout << "\n";
            }
            for (std::size_t e = 0; e < map.edge_blocks.size(); ++e) {
                std::cout << "edge " << e << " ->";
                for (int w : map.edge_blocks[e]) std::cout << " " << w;
                std::cout << "\n";
            }
        }
        if (verify) {
            std::cout << "seed rho       " << j["seed_rho"].get<double>() << "\n"
                      << "power rho      " << j["power_rho"].get<double>() << "\n"
                      << "predicted rho  " << j["predicted_rho"].get<double>() << "\n"
                      << "identity error " << j["identity_error"].get<double>() << "\n"
                      << "lift residual  " << j["lift_residual"].get<double>() << "\n"
                      << "identity       " << (identity_holds ? "holds" : "FAILS") << "\n";
        }
    }
    return identity_holds ? 0 : 1;
}

struct VerificationRow {
    int k, m;
    SpectralResult bl1, bl2, bp;
    double margin12 = 0, margin2p = 0;
    bool ordering_holds = false;
    bool converged = false;
};

int cmd_verify_conjecture(const GlobalOpts& global, int k_min, int k_max, int m_min,
                          int m_max) {
    const SolverOptions opts = global.solver(1e-9);
    std::vector<VerificationRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        for (int m = m_min; m <= m_max; ++m) {
            VerificationRow row;
            row.k = k;
            row.m = m;
            row.bl1 = spectral_radius(gen_b_l1(k, m).graph, opts);
            row.bl2 = spectral_radius(gen_b_l2(k, m).graph, opts);
            row.bp = spectral_radius(gen_b_p(k, m).graph, opts);
            row.converged = row.bl1.converged && row.bl2.converged && row.bp.converged;
            row.margin12 = row.bl1.rho - row.bl2.rho;
            row.margin2p = row.bl2.rho - row.bp.rho;
            const double w1 = row.bl1.rho_upper - row.bl1.rho_lower;
            const double w2 = row.bl2.rho_upper - row.bl2.rho_lower;
            const double wp = row.bp.rho_upper - row.bp.rho_lower;
            row.ordering_holds =
                row.converged && row.margin12 > w1 + w2 && row.margin2p > w2 + wp;
            rows.push_back(std::move(row));
        }
    }

    bool all_hold = true;
    for (const auto& row : rows) all_hold = all_hold && row.ordering_holds;

    if (global.records()) {
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back(json{{"k", row.k},
                                 {"m", row.m},
                                 {"bl1", result_to_json(row.bl1, false)},
                                 {"bl2", result_to_json(row.bl2, false)},
                                 {"bp", result_to_json(row.bp, false)},
                                 {"margins", {row.margin12, row.margin2p}},
                                 {"ordering_holds", row.ordering_holds}});
        json j{{"schema_version", kSchemaVersion},
               {"command", "verify-conjecture"},
               {"rows", jrows},
               {"all_hold", all_hold}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "  k   m         rho(bl1)         rho(bl2)          rho(bp)  "
                     "margin12  margin2p  ordering\n";
        for (const auto& row : rows) {
            std::cout << std::setw(3) << row.k << std::setw(4) << row.m << std::fixed
                      << std::setprecision(12) << std::setw(17) << row.bl1.rho
                      << std::setw(17) << row.bl2.rho << std::setw(17) << row.bp.rho
                      << std::scientific << std::setprecision(2) << std::setw(10)
                      << row.margin12 << std::setw(10) << row.margin2p
                      << (row.ordering_holds ? "        ok" : "      FAIL") << "\n";
            std::cout.unsetf(std::ios::floatfield);
        }
        std::cout << (all_hold ? "all orderings hold" : "ORDERING FAILURE") << "\n";
    }
    return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral radii, incidence-weight certificates and power constructions "
                 "of k-uniform hypergraphs"};
    app.require_subcommand(1);

    GlobalOpts global;
    double tol_value = 0;
    auto* tol_opt = app.add_option("--tol", tol_value,
                                   "solver/certificate tolerance (command-specific default)");
    app.add_option("--max-iters", global.max_iters, "iteration cap for the solver");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "records"}));

    auto* gen = app.add_subcommand("gen", "generate a bicyclic family member");
    std::string gen_family, gen_out;
    int gen_k = 0, gen_m = 0;
    gen->add_option("--family", gen_family, "bp, bl1 or bl2")
        ->required()
        ->check(CLI::IsMember({"bp", "bl1", "bl2"}));
    gen->add_option("--k", gen_k, "uniformity (>= 3)")->required();
    gen->add_option("--m", gen_m, "edge count (>= 5)")->required();
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");
    gen->fallthrough();

    auto* spectral = app.add_subcommand("spectral-radius", "solve for the spectral radius");
    std::string spectral_file;
    double spectral_shift = 1.0;
    bool emit_vector = false;
    spectral->add_option("file", spectral_file, "hypergraph file")->required();
    spectral->add_option("--shift", spectral_shift, "diagonal shift of the iteration");
    spectral->add_flag("--emit-vector", emit_vector, "also print the eigenvector");
    spectral->fallthrough();

    auto* certify = app.add_subcommand("certify", "check a weighted incidence certificate");
    std::string certify_file, certify_matrix, certify_family;
    double certify_alpha = 0;
    int certify_k = 0, certify_m = 0;
    certify->add_option("file", certify_file, "hypergraph file");
    certify->add_option("--alpha", certify_alpha, "normalization constant");
    certify->add_option("--matrix", certify_matrix, "weights file of vertex/edge/weight triples");
    certify->add_option("--family", certify_family, "build the bl1 or bl2 table instead")
        ->check(CLI::IsMember({"bl1", "bl2"}));
    certify->add_option("--k", certify_k, "family uniformity");
    certify->add_option("--m", certify_m, "family edge count");
    certify->fallthrough();

    auto* power = app.add_subcommand("power", "build the generalized power hypergraph");
    std::string power_seed, power_out;
    int power_k = 0, power_s = 1;
    bool emit_map = false, power_verify = false;
    power->add_option("seed", power_seed, "seed hypergraph file")->required();
    power->add_option("--k", power_k, "target uniformity")->required();
    power->add_option("--s", power_s, "blow-up size per seed vertex");
    power->add_option("--out", power_out, "output file for the power hypergraph");
    power->add_flag("--emit-map", emit_map, "print the block layout");
    power->add_flag("--verify", power_verify, "solve both and check the radius identity");
    power->fallthrough();

    auto* verify = app.add_subcommand("verify-conjecture",
                                      "compare the three family radii over a grid");
    int k_min = 3, k_max = 5, m_min = 5, m_max = 10;
    verify->add_option("--k-min", k_min, "smallest uniformity");
    verify->add_option("--k-max", k_max, "largest uniformity");
    verify->add_option("--m-min", m_min, "smallest edge count");
    verify->add_option("--m-max", m_max, "largest edge count");
    verify->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (tol_opt->count() > 0) global.tol = tol_value;

    try {
        if (gen->parsed()) return cmd_gen(global, gen_family, gen_k, gen_m, gen_out);
        if (spectral->parsed())
            return cmd_spectral(global, spectral_file, spectral_shift, emit_vector);
        if (certify->parsed()) {
            if (!certify_family.empty())
                return cmd_certify_family(global, certify_family, certify_k, certify_m);
            if (certify_file.empty() || certify_matrix.empty())
                throw std::invalid_argument(
                    "certify needs either --family bl1|bl2 --k --m, or a hypergraph file "
                    "with --alpha and --matrix");
            return cmd_certify_file(global, certify_file, certify_alpha, certify_matrix);
        }
        if (power->parsed())
            return cmd_power(global, power_seed, power_k, power_s, power_out, emit_map,
                             power_verify);
        if (verify->parsed())
            return cmd_verify_conjecture(global, k_min, k_max, m_min, m_max);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
