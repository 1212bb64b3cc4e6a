// Command-line front end. JSON results go to stdout, a one-line summary to
// stderr. Exit codes: 0 answered, 1 none/counterexample, 2 usage or input
// error, 3 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdg/diffusion.hpp"
#include "cdg/io.hpp"
#include "cdg/path_solver.hpp"
#include "cdg/reductions.hpp"
#include "cdg/search.hpp"
#include "cdg/structured.hpp"
#include "cdg/unweighted_paths.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cdg;

constexpr int kAnswered = 0;
constexpr int kNone = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

template <class T>
std::string profile_text(const std::vector<T>& profile) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < profile.size(); ++i) out << (i ? ", " : "") << profile[i];
    out << ")";
    return out.str();
}

GameInstance read_instance(const std::string& path) { return load_instance(read_file(path)); }
StrategyProfile read_profile(const std::string& path) { return load_profile(read_file(path)); }

void check_profile(const GameInstance& inst, const StrategyProfile& profile) {
    if (static_cast<int>(profile.size()) != inst.k)
        throw InputError("profile has " + std::to_string(profile.size()) + " entries, the instance has k = " +
                         std::to_string(inst.k));
    for (Vertex v : profile)
        if (v < 0 || v >= inst.graph.size())
            throw InputError("profile names vertex " + std::to_string(v) + ", which does not exist");
}

json outcome_json(const DiffusionOutcome& out) {
    json owner = json::array();
    for (int o : out.owner) {
        if (o == kNeutral)
            owner.push_back("neutral");
        else if (o == kUndominated)
            owner.push_back(nullptr);
        else
            owner.push_back(o);
    }
    return {{"owner", owner}, {"time", out.time}, {"utilities", out.utilities}};
}

int run_simulate(const std::string& instance_path, const std::string& profile_path) {
    const auto inst = read_instance(instance_path);
    const auto profile = read_profile(profile_path);
    check_profile(inst, profile);
    const auto out = simulate(inst, profile);
    emit(outcome_json(out));
    std::cerr << "utilities " << profile_text(out.utilities) << "\n";
    return kAnswered;
}

int run_check(const std::string& instance_path, const std::string& profile_path) {
    const auto inst = read_instance(instance_path);
    const auto profile = read_profile(profile_path);
    check_profile(inst, profile);
    const auto verdict = is_nash(inst, profile);
    if (verdict.equilibrium()) {
        emit({{"result", "equilibrium"}});
        std::cerr << "equilibrium\n";
        return kAnswered;
    }
    const auto& d = *verdict.counterexample;
    emit({{"result", "counterexample"}, {"player", d.player}, {"vertex", d.vertex}, {"gain", d.gain}});
    std::cerr << "counterexample: player " << d.player << " gains " << d.gain << " by moving to " << d.vertex << "\n";
    return kNone;
}

int run_best_response(const std::string& instance_path, const std::string& profile_path, int player) {
    const auto inst = read_instance(instance_path);
    const auto profile = read_profile(profile_path);
    check_profile(inst, profile);
    if (player < 0 || player >= inst.k) throw InputError("--player must lie in 0.." + std::to_string(inst.k - 1));
    const auto [vertex, utility] = best_response(inst, profile, player);
    const auto current = simulate(inst, profile).utilities[player];
    emit({{"player", player}, {"vertex", vertex}, {"utility", utility}, {"current", current}});
    std::cerr << "best response for player " << player << ": vertex " << vertex << " (utility " << utility << ")\n";
    return kAnswered;
}

int run_brute_force(const std::string& instance_path, bool all, double budget) {
    const auto inst = read_instance(instance_path);
    const auto report = brute_force(inst, all ? SearchMode::All : SearchMode::First, budget);
    json doc;
    doc["result"] = report.found ? "equilibrium" : "none";
    doc["profile"] = report.found ? json(*report.found) : json(nullptr);
    doc["profiles_checked"] = report.profiles_checked;
    if (all) doc["all"] = report.all;
    emit(doc);
    if (!report.found) {
        std::cerr << "no equilibrium among " << report.profiles_checked << " profiles\n";
        return kNone;
    }
    std::cerr << "equilibrium " << profile_text(*report.found) << "\n";
    return kAnswered;
}

int emit_solution(const GameInstance& inst, const StrategyProfile& profile, json witness) {
    if (!is_nash(inst, profile).equilibrium()) {
        std::cerr << "internal error: solver output failed the equilibrium check\n";
        return kInputError;
    }
    emit({{"result", "equilibrium"}, {"profile", profile}, {"witness", std::move(witness)}});
    std::cerr << "equilibrium " << profile_text(profile) << "\n";
    return kAnswered;
}

int emit_none() {
    emit({{"result", "none"}});
    std::cerr << "no equilibrium\n";
    return kNone;
}

int run_solve_paths(const std::string& instance_path) {
    const auto inst = read_instance(instance_path);
    PathForest forest;
    try {
        forest = PathForest::from_graph(inst.graph);
    } catch (const NotAPathForest& e) {
        throw InputError(std::string("not a forest of paths: ") + e.what());
    }
    const bool unit = inst.graph.is_unit_weight();
    const auto sol = unit ? solve_forest_unweighted(forest, inst.k) : solve_forest_weighted(forest, inst.k);
    if (!sol) return emit_none();
    json witness{{"solver", unit ? "unweighted" : "weighted"},
                 {"t", sol->witness.t},
                 {"upper", sol->witness.upper},
                 {"exceptional_path", sol->witness.exceptional ? json(*sol->witness.exceptional) : json(nullptr)},
                 {"counts", sol->witness.counts}};
    return emit_solution(inst, sol->profile, std::move(witness));
}

int run_solve_structured(const std::string& instance_path, const std::string& class_name) {
    const auto inst = read_instance(instance_path);
    const auto cls = parse_graph_class(class_name);
    if (!cls) throw InputError("--class must be chain, cochain or threshold");
    InclusionOrderedGraph ordered;
    try {
        ordered = recognize_and_order(inst.graph, *cls);
    } catch (const NotInClass& e) {
        throw InputError(std::string(e.what()) + " (witness " + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ")");
    }
    const auto sol = solve_chain(ordered, inst.k);
    if (!sol) return emit_none();
    json witness{{"top_primary", sol->top_primary}, {"top_secondary", sol->top_secondary}, {"swapped", sol->swapped},
                 {"x_order", ordered.x}, {"y_order", ordered.y}};
    return emit_solution(inst, sol->profile, std::move(witness));
}

PartitionInstance read_partition(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("partition: expected a JSON array of positive integers");
    PartitionInstance inst;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number_integer()) throw InputError("partition[" + std::to_string(i) + "]: expected an integer");
        inst.values.push_back(doc[i].get<Weight>());
    }
    return inst;
}

GadgetInstance build_gadget(GadgetKind kind, const std::string& source_path) {
    try {
        switch (kind) {
            case GadgetKind::IndependentSet: {
                const auto source = read_instance(source_path);
                return build_is_gadget(source.graph, source.k);
            }
            case GadgetKind::PartitionSeriesParallel:
                return build_partition_sp_gadget(read_partition(source_path));
            case GadgetKind::PartitionForest:
                return build_partition_forest_gadget(read_partition(source_path));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown gadget kind");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int run_reduce(const std::string& kind_name, const std::string& source_path, const std::string& out_path,
               const std::string& roles_path) {
    const auto kind = parse_gadget_kind(kind_name);
    if (!kind) throw InputError("--kind must be is, partition-sp or partition-forest");
    const auto gadget = build_gadget(*kind, source_path);
    const std::string instance_text = save_instance(gadget.game);
    if (out_path.empty())
        std::cout << instance_text;
    else
        write_file(out_path, instance_text);
    if (!roles_path.empty()) write_file(roles_path, save_role_map(gadget));
    std::cerr << kind_name << " gadget: " << gadget.game.graph.size() << " vertices, "
              << gadget.game.graph.edge_count() << " edges, " << gadget.game.k << " players\n";
    return kAnswered;
}

Certificate read_certificate(const std::string& path) {
    const auto ids = load_profile(read_file(path));
    return Certificate(ids.begin(), ids.end());
}

int run_verify_certificate(const std::string& kind_name, const std::string& source_path, const std::string& cert_path,
                           const std::string& profile_path) {
    const auto kind = parse_gadget_kind(kind_name);
    if (!kind) throw InputError("--kind must be is, partition-sp or partition-forest");
    const auto gadget = build_gadget(*kind, source_path);

    if (!profile_path.empty()) {
        const auto profile = read_profile(profile_path);
        check_profile(gadget.game, profile);
        try {
            const auto cert = profile_to_certificate(gadget, profile);
            emit({{"result", "certificate"}, {"certificate", cert}});
            std::cerr << "certificate " << profile_text(cert) << "\n";
            return kAnswered;
        } catch (const NotAnEquilibrium& e) {
            emit({{"result", "not-an-equilibrium"}, {"reason", e.what()}});
            std::cerr << e.what() << "\n";
            return kNone;
        }
    }

    if (cert_path.empty()) throw InputError("give a certificate file or --profile");
    StrategyProfile profile;
    try {
        profile = certificate_to_profile(gadget, read_certificate(cert_path));
    } catch (const InvalidCertificate& e) {
        emit({{"result", "invalid-certificate"}, {"reason", e.what()}});
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return kNone;
    }
    const auto verdict = is_nash(gadget.game, profile);
    const auto utilities = simulate(gadget.game, profile).utilities;
    emit({{"result", verdict.equilibrium() ? "equilibrium" : "counterexample"},
          {"profile", profile},
          {"utilities", utilities}});
    std::cerr << (verdict.equilibrium() ? "certificate yields an equilibrium\n"
                                        : "certificate profile is not an equilibrium\n");
    return verdict.equilibrium() ? kAnswered : kNone;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competitive diffusion games: simulation, equilibrium search, reductions"};
    app.require_subcommand(1);

    std::string instance_path, profile_path, class_name, kind_name, source_path, out_path, roles_path, cert_path;
    int player = 0;
    bool all = false;
    double budget = kDefaultSearchBudget;

    auto* sim = app.add_subcommand("simulate", "Run the diffusion and print owners, times and utilities");
    sim->add_option("instance", instance_path)->required();
    sim->add_option("profile", profile_path)->required();

    auto* check = app.add_subcommand("check", "Test a profile for a Nash equilibrium");
    check->add_option("instance", instance_path)->required();
    check->add_option("profile", profile_path)->required();

    auto* br = app.add_subcommand("best-response", "Best vertex for one player");
    br->add_option("instance", instance_path)->required();
    br->add_option("profile", profile_path)->required();
    br->add_option("--player", player, "Player index (0-based)")->required();

    auto* bf = app.add_subcommand("brute-force", "Exhaustive equilibrium search");
    bf->add_option("instance", instance_path)->required();
    bf->add_flag("--all", all, "List every equilibrium");
    bf->add_option("--budget", budget, "Refuse when n^k exceeds this")->check(CLI::PositiveNumber);

    auto* sp = app.add_subcommand("solve-paths", "Exact solver for forests of paths");
    sp->add_option("instance", instance_path)->required();

    auto* ss = app.add_subcommand("solve-structured", "Solver for chain, cochain and threshold graphs");
    ss->add_option("instance", instance_path)->required();
    ss->add_option("--class", class_name)->required()->check(CLI::IsMember({"chain", "cochain", "threshold"}));

    auto* red = app.add_subcommand("reduce", "Build a hardness gadget");
    red->add_option("--kind", kind_name)->required()->check(CLI::IsMember({"is", "partition-sp", "partition-forest"}));
    red->add_option("source", source_path, "Graph instance (is) or JSON list of integers (partition)")->required();
    red->add_option("--out", out_path, "Gadget instance file (stdout when omitted)");
    red->add_option("--roles", roles_path, "Role map file");

    auto* vc = app.add_subcommand("verify-certificate", "Certificate to gadget equilibrium, or back with --profile");
    vc->add_option("--kind", kind_name)->required()->check(CLI::IsMember({"is", "partition-sp", "partition-forest"}));
    vc->add_option("source", source_path)->required();
    vc->add_option("certificate", cert_path, "JSON array of indices");
    vc->add_option("--profile", profile_path, "Gadget profile to extract a certificate from");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*sim) return run_simulate(instance_path, profile_path);
        if (*check) return run_check(instance_path, profile_path);
        if (*br) return run_best_response(instance_path, profile_path, player);
        if (*bf) return run_brute_force(instance_path, all, budget);
        if (*sp) return run_solve_paths(instance_path);
        if (*ss) return run_solve_structured(instance_path, class_name);
        if (*red) return run_reduce(kind_name, source_path, out_path, roles_path);
        if (*vc) return run_verify_certificate(kind_name, source_path, cert_path, profile_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
