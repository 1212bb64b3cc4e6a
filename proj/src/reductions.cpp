#include "cdg/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace cdg {

namespace {

struct Builder {
    std::vector<Weight> weights;
    std::vector<std::string> roles;
    std::vector<Edge> edges;

    Vertex add(std::string role, Weight w) {
        weights.push_back(w);
        roles.push_back(std::move(role));
        return static_cast<Vertex>(weights.size() - 1);
    }
    void link(Vertex u, Vertex v) { edges.emplace_back(u, v); }

    void finish(GadgetInstance& gadget, int players) {
        std::vector<std::optional<std::string>> names(roles.begin(), roles.end());
        gadget.game = GameInstance{WeightedGraph::from_edges(weights, edges, std::move(names)), players};
        gadget.roles = std::move(roles);
    }
};

std::string idx(int i) { return std::to_string(i + 1); }

// a1-a2-a3-a4, optionally with `leaves` pendants on both ends.
void build_a_path(Builder& b, GadgetInstance& g, Weight end_weight, int leaves) {
    for (int i = 0; i < 4; ++i) g.a[i] = b.add("a" + idx(i), i == 0 || i == 3 ? end_weight : 1);
    for (int i = 0; i < 3; ++i) b.link(g.a[i], g.a[i + 1]);
    for (int i = 0; i < leaves; ++i) b.link(g.a[0], b.add("a1_leaf" + idx(i), 1));
    for (int i = 0; i < leaves; ++i) b.link(g.a[3], b.add("a4_leaf" + idx(i), 1));
}

std::vector<int> per_vertex_counts(int n, std::span<const Vertex> profile) {
    std::vector<int> count(n, 0);
    for (Vertex v : profile) ++count.at(v);
    return count;
}

void require_positive_values(const PartitionInstance& instance) {
    if (instance.values.empty()) throw std::invalid_argument("partition instance is empty");
    for (Weight s : instance.values)
        if (s <= 0) throw std::invalid_argument("partition values must be positive, got " + std::to_string(s));
}

Certificate normalise(const Certificate& certificate, int universe, const char* what) {
    Certificate sorted = certificate;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidCertificate(std::string(what) + " lists an index twice");
    for (int i : sorted)
        if (i < 0 || i >= universe)
            throw InvalidCertificate(std::string(what) + " index " + std::to_string(i) + " out of range");
    return sorted;
}

Weight sum_over(const std::vector<Weight>& values, const Certificate& subset) {
    Weight s = 0;
    for (int j : subset) s += values[j];
    return s;
}

void check_independent(const GadgetInstance& g, const Certificate& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.source_graph->has_edge(set[i], set[j]))
                throw InvalidCertificate("vertices " + std::to_string(set[i]) + " and " + std::to_string(set[j]) +
                                         " are adjacent");
}

}  // namespace

std::string_view to_string(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::IndependentSet: return "is";
        case GadgetKind::PartitionSeriesParallel: return "partition-sp";
        case GadgetKind::PartitionForest: return "partition-forest";
    }
    return "?";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view name) {
    if (name == "is") return GadgetKind::IndependentSet;
    if (name == "partition-sp") return GadgetKind::PartitionSeriesParallel;
    if (name == "partition-forest") return GadgetKind::PartitionForest;
    return std::nullopt;
}

Weight PartitionInstance::total() const { return std::accumulate(values.begin(), values.end(), Weight{0}); }

Weight PartitionInstance::alpha() const {
    const Weight t = total();
    if (t % 2 != 0) throw std::invalid_argument("partition total " + std::to_string(t) + " is odd");
    return t / 2;
}

Weight is_gadget_lambda(int n, std::int64_t m) {
    const Weight nn = n;
    return nn * nn * nn + 3 * nn + m + 6;
}

GadgetInstance build_is_gadget(const WeightedGraph& graph, int k) {
    if (auto violation = validate(graph)) throw std::invalid_argument(violation->message);
    if (graph.size() < 1) throw std::invalid_argument("independent-set gadget needs at least one vertex");
    if (k < 1) throw std::invalid_argument("target size k must be at least 1");
    const int n = graph.size();
    const std::int64_t m = graph.edge_count();

    GadgetInstance g;
    g.kind = GadgetKind::IndependentSet;
    g.source_graph = graph;
    g.target_size = k;
    g.lambda = is_gadget_lambda(n, m);
    const Weight lambda = g.lambda;
    const Weight n2 = static_cast<Weight>(n) * n;
    if (!(lambda - 2 * (n + 2) > n2 + n - m && lambda > n + 1))
        throw std::logic_error("hub leaf count too small for the gadget inequalities");

    Builder b;
    build_a_path(b, g, 1, n);
    for (Vertex v = 0; v < n; ++v) g.original.push_back(b.add("v" + std::to_string(v), 1));
    for (const auto& [u, v] : graph.edges()) {
        const Vertex e = b.add("e" + std::to_string(u) + "_" + std::to_string(v), 1);
        b.link(g.original[u], e);
        b.link(e, g.original[v]);
    }
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < n - graph.degree(v); ++i)
            b.link(g.original[v], b.add("d" + std::to_string(v) + "_" + idx(i), 1));
    g.hub = b.add("hub", 1);
    for (Vertex v = 0; v < n; ++v) b.link(g.hub, g.original[v]);
    for (Weight i = 0; i < lambda; ++i) b.link(g.hub, b.add("hub_leaf" + std::to_string(i + 1), 1));
    b.finish(g, k + 3);
    return g;
}

GadgetInstance build_partition_sp_gadget(const PartitionInstance& instance) {
    require_positive_values(instance);
    GadgetInstance g;
    g.kind = GadgetKind::PartitionSeriesParallel;
    g.values = instance.values;
    g.alpha = instance.alpha();
    const Weight alpha = g.alpha;
    const int count = static_cast<int>(instance.values.size());

    Builder b;
    build_a_path(b, g, 2 * alpha, 0);
    for (int j = 0; j < count; ++j) {
        const std::array<Weight, 5> w{instance.values[j], 0, alpha, alpha, 0};
        std::array<Vertex, 5> cycle{};
        for (int i = 0; i < 5; ++i) cycle[i] = b.add("b" + idx(j) + "_" + idx(i), w[i]);
        for (int i = 0; i < 5; ++i) b.link(cycle[i], cycle[(i + 1) % 5]);
        g.cycles.push_back(cycle);
    }
    g.hub_left = b.add("b'", alpha);
    g.hub_right = b.add("b''", alpha);
    for (const auto& cycle : g.cycles) {
        b.link(g.hub_left, cycle[1]);
        b.link(g.hub_right, cycle[4]);
    }
    b.finish(g, count + 4);
    return g;
}

GadgetInstance build_partition_forest_gadget(const PartitionInstance& instance) {
    require_positive_values(instance);
    if (instance.values.size() % 2 != 0)
        throw std::invalid_argument("forest gadget needs an even number of values");
    GadgetInstance g;
    g.kind = GadgetKind::PartitionForest;
    g.values = instance.values;
    g.doubled = std::any_of(g.values.begin(), g.values.end(), [](Weight s) { return s % 2 != 0; });
    if (g.doubled)
        for (Weight& s : g.values) s *= 2;
    g.alpha = PartitionInstance{g.values}.alpha();
    const Weight alpha = g.alpha;
    const int count = static_cast<int>(g.values.size());

    Builder b;
    build_a_path(b, g, alpha, 0);
    const std::array<Weight, 5> spine_w{alpha + 1, 0, -1, -alpha, alpha + 1};
    for (int i = 0; i < 5; ++i) g.spine[i] = b.add("spine" + idx(i), spine_w[i]);
    for (int i = 0; i < 4; ++i) b.link(g.spine[i], g.spine[i + 1]);
    for (int j = 0; j < count; ++j) {
        std::array<Vertex, 4> star{};
        star[0] = b.add("b" + idx(j), -alpha + g.values[j]);
        const std::array<Weight, 3> leaf_w{alpha, alpha, -alpha};
        for (int i = 0; i < 3; ++i) {
            star[i + 1] = b.add("b" + idx(j) + "_" + idx(i), leaf_w[i]);
            b.link(star[0], star[i + 1]);
        }
        b.link(g.spine[3], star[0]);
        g.stars.push_back(star);
    }
    b.finish(g, count + 4);
    return g;
}

StrategyProfile certificate_to_profile(const GadgetInstance& g, const Certificate& certificate) {
    StrategyProfile profile;
    switch (g.kind) {
        case GadgetKind::IndependentSet: {
            const auto set = normalise(certificate, g.source_graph->size(), "independent set");
            if (static_cast<int>(set.size()) != g.target_size)
                throw InvalidCertificate("independent set has " + std::to_string(set.size()) + " vertices, need " +
                                         std::to_string(g.target_size));
            check_independent(g, set);
            for (int v : set) profile.push_back(g.original[v]);
            profile.push_back(g.hub);
            break;
        }
        case GadgetKind::PartitionSeriesParallel: {
            const int count = static_cast<int>(g.values.size());
            const auto part = normalise(certificate, count, "partition");
            if (sum_over(g.values, part) != g.alpha)
                throw InvalidCertificate("chosen values do not sum to half the total");
            for (int j = 0; j < count; ++j)
                profile.push_back(std::binary_search(part.begin(), part.end(), j) ? g.cycles[j][3] : g.cycles[j][2]);
            profile.push_back(g.hub_left);
            profile.push_back(g.hub_right);
            break;
        }
        case GadgetKind::PartitionForest: {
            const int count = static_cast<int>(g.values.size());
            const auto part = normalise(certificate, count, "partition");
            if (static_cast<int>(part.size()) * 2 != count)
                throw InvalidCertificate("partition side must hold exactly half of the values");
            if (sum_over(g.values, part) != g.alpha)
                throw InvalidCertificate("chosen values do not sum to half the total");
            for (int j : part) {
                profile.push_back(g.stars[j][1]);
                profile.push_back(g.stars[j][2]);
            }
            profile.push_back(g.spine[0]);
            profile.push_back(g.spine[4]);
            break;
        }
    }
    profile.push_back(g.a[1]);
    profile.push_back(g.a[2]);
    return profile;
}

StandardForm check_standard_form(const GadgetInstance& g, std::span<const Vertex> profile) {
    const auto count = per_vertex_counts(g.game.graph.size(), profile);
    StandardForm form;
    form.conditions[2] = count[g.a[1]] == 1 && count[g.a[2]] == 1;
    switch (g.kind) {
        case GadgetKind::IndependentSet: {
            int on_original = 0;
            bool distinct = true;
            for (Vertex v : g.original) {
                on_original += count[v];
                distinct = distinct && count[v] <= 1;
            }
            form.conditions[0] = distinct && on_original == g.target_size;
            form.conditions[1] = count[g.hub] == 1;
            break;
        }
        case GadgetKind::PartitionSeriesParallel: {
            bool ok = true;
            for (const auto& c : g.cycles)
                ok = ok && count[c[2]] + count[c[3]] == 1 && count[c[0]] + count[c[1]] + count[c[4]] == 0;
            form.conditions[0] = ok;
            form.conditions[1] = count[g.hub_left] == 1 && count[g.hub_right] == 1;
            break;
        }
        case GadgetKind::PartitionForest: {
            int used = 0;
            bool ok = true;
            for (const auto& s : g.stars) {
                const int inside = count[s[0]] + count[s[1]] + count[s[2]] + count[s[3]];
                if (inside == 0) continue;
                ++used;
                ok = ok && count[s[1]] == 1 && count[s[2]] == 1 && count[s[0]] == 0 && count[s[3]] == 0;
            }
            form.conditions[0] = ok && used * 2 == static_cast<int>(g.stars.size());
            form.conditions[1] = count[g.spine[0]] == 1 && count[g.spine[4]] == 1;
            break;
        }
    }
    return form;
}

Certificate profile_to_certificate(const GadgetInstance& g, std::span<const Vertex> profile) {
    if (auto verdict = is_nash(g.game, profile); !verdict.equilibrium()) {
        const auto& d = *verdict.counterexample;
        throw NotAnEquilibrium("player " + std::to_string(d.player) + " gains " + std::to_string(d.gain) +
                               " by moving to vertex " + std::to_string(d.vertex));
    }
    const StandardForm form = check_standard_form(g, profile);
    if (!form.holds()) {
        std::string failed;
        for (int i = 0; i < 3; ++i)
            if (!form.conditions[i]) failed += (failed.empty() ? "" : ", ") + std::to_string(i + 1);
        throw StandardFormViolation("equilibrium violates standard-form condition(s) " + failed);
    }
    const auto count = per_vertex_counts(g.game.graph.size(), profile);
    Certificate out;
    switch (g.kind) {
        case GadgetKind::IndependentSet:
            for (int v = 0; v < static_cast<int>(g.original.size()); ++v)
                if (count[g.original[v]] > 0) out.push_back(v);
            check_independent(g, out);
            break;
        case GadgetKind::PartitionSeriesParallel:
            for (int j = 0; j < static_cast<int>(g.cycles.size()); ++j)
                if (count[g.cycles[j][3]] > 0) out.push_back(j);
            if (sum_over(g.values, out) != g.alpha)
                throw InvalidCertificate("extracted values do not sum to half the total");
            break;
        case GadgetKind::PartitionForest:
            for (int j = 0; j < static_cast<int>(g.stars.size()); ++j)
                if (count[g.stars[j][1]] > 0) out.push_back(j);
            if (sum_over(g.values, out) != g.alpha)
                throw InvalidCertificate("extracted values do not sum to half the total");
            break;
    }
    return out;
}

std::string save_role_map(const GadgetInstance& g) {
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(g.kind));
    doc["players"] = g.game.k;
    if (g.kind == GadgetKind::IndependentSet) {
        doc["target_size"] = g.target_size;
        doc["lambda"] = g.lambda;
    } else {
        doc["values"] = g.values;
        doc["doubled"] = g.doubled;
        doc["alpha"] = g.alpha;
    }
    doc["roles"] = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(g.roles.size()); ++v)
        doc["roles"].push_back({{"id", v}, {"role", g.roles[v]}});
    return doc.dump(2) + "\n";
}

}  // namespace cdg
