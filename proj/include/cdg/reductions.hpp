#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/diffusion.hpp"
#include "cdg/graph.hpp"

namespace cdg {

enum class GadgetKind { IndependentSet, PartitionSeriesParallel, PartitionForest };

std::string_view to_string(GadgetKind kind);
/// "is", "partition-sp", "partition-forest".
std::optional<GadgetKind> parse_gadget_kind(std::string_view name);

struct PartitionInstance {
    std::vector<Weight> values;

    [[nodiscard]] Weight total() const;
    /// Half the total; throws std::invalid_argument if the total is odd.
    [[nodiscard]] Weight alpha() const;
};

/// 0-based indices: vertices of the source graph for the independent-set
/// gadget, positions in the value list for the partition gadgets. Sorted.
using Certificate = std::vector<int>;

struct GadgetInstance {
    GameInstance game;
    GadgetKind kind = GadgetKind::IndependentSet;
    /// Role of every gadget vertex, e.g. "a2", "hub_leaf7", "b3_4", "spine5".
    /// Also stored as the graph's vertex names.
    std::vector<std::string> roles;

    /// The path a1-a2-a3-a4 shared by all three constructions.
    std::array<Vertex, 4> a{};

    // Independent set: source graph, target size, copies of its vertices, hub.
    std::optional<WeightedGraph> source_graph;
    int target_size = 0;
    std::vector<Vertex> original;
    Vertex hub = -1;
    Weight lambda = 0;

    // Partition: the values actually encoded (after doubling) and α.
    std::vector<Weight> values;
    bool doubled = false;
    Weight alpha = 0;

    // Series-parallel: five-cycles b_{j,1..5} and the hubs b', b''.
    std::vector<std::array<Vertex, 5>> cycles;
    Vertex hub_left = -1;
    Vertex hub_right = -1;

    // Forest: stars (centre, leaf1, leaf2, leaf3) and the spine b'_1..b'_5.
    std::vector<std::array<Vertex, 4>> stars;
    std::array<Vertex, 5> spine{};
};

class InvalidCertificate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input to profile_to_certificate is not a Nash equilibrium.
class NotAnEquilibrium : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Nash equilibrium of a gadget that is not in standard form. Should be
/// impossible for these constructions; if it shows up, the argument behind
/// the gadget is broken.
class StandardFormViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Hub leaf count used by the independent-set gadget: n³ + 3n + m + 6.
Weight is_gadget_lambda(int n, std::int64_t m);

GadgetInstance build_is_gadget(const WeightedGraph& graph, int k);
GadgetInstance build_partition_sp_gadget(const PartitionInstance& instance);
/// Doubles every value first when any of them is odd.
GadgetInstance build_partition_forest_gadget(const PartitionInstance& instance);

/// The equilibrium prescribed for a valid certificate. Player order:
/// certificate players, then hub players, then a2 and a3.
StrategyProfile certificate_to_profile(const GadgetInstance& gadget, const Certificate& certificate);

/// The three structural conditions a gadget equilibrium must meet.
struct StandardForm {
    std::array<bool, 3> conditions{};
    [[nodiscard]] bool holds() const { return conditions[0] && conditions[1] && conditions[2]; }
};

StandardForm check_standard_form(const GadgetInstance& gadget, std::span<const Vertex> profile);

/// Reads the certificate off an equilibrium and verifies it against the
/// source instance.
Certificate profile_to_certificate(const GadgetInstance& gadget, std::span<const Vertex> profile);

/// Role map as JSON text: [{"id": v, "role": "..."}, ...] plus metadata.
std::string save_role_map(const GadgetInstance& gadget);

}  // namespace cdg
