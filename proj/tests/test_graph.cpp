#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdg/io.hpp"
#include "support.hpp"

using namespace cdg;

TEST_CASE("well-formed triangle validates") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    const auto g = WeightedGraph::from_edges({1, 1, 1}, edges);
    CHECK_FALSE(validate(g).has_value());
    CHECK(g.edge_count() == 3);
    CHECK(g.is_unit_weight());
}

TEST_CASE("structural violations are reported") {
    SUBCASE("self-loop") {
        WeightedGraph g({{0}}, {1});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::SelfLoop);
    }
    SUBCASE("asymmetric adjacency") {
        WeightedGraph g({{1}, {}}, {1, 1});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::Asymmetric);
    }
    SUBCASE("duplicate edge") {
        WeightedGraph g({{1, 1}, {0, 0}}, {1, 1});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::DuplicateEdge);
    }
    SUBCASE("id out of range") {
        WeightedGraph g({{3}, {}}, {1, 1});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::IdOutOfRange);
    }
    SUBCASE("no players") {
        GameInstance inst{WeightedGraph::unweighted(1, {}), 0};
        auto v = validate(inst);
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::NoPlayers);
    }
    SUBCASE("from_edges throws") {
        const std::vector<Edge> loop{{0, 0}};
        CHECK_THROWS_AS(WeightedGraph::from_edges({1}, loop), std::invalid_argument);
        const std::vector<Edge> twice{{0, 1}, {1, 0}};
        CHECK_THROWS_AS(WeightedGraph::from_edges({1, 1}, twice), std::invalid_argument);
    }
}

TEST_CASE("save then load of a 5-vertex path is the identity") {
    GameInstance inst{testing_support::path_graph({3, -1, 0, 7, 2}), 2};
    const std::string text = save_instance(inst);
    CHECK(load_instance(text) == inst);
    CHECK(save_instance(load_instance(text)) == text);
}

TEST_CASE("names survive a round trip") {
    const std::vector<Edge> edges{{0, 1}};
    GameInstance inst{WeightedGraph::from_edges({1, 2}, edges, {std::string("left"), std::nullopt}), 1};
    const auto back = load_instance(save_instance(inst));
    CHECK(back == inst);
    CHECK(back.graph.names()[0] == "left");
    CHECK_FALSE(back.graph.names()[1].has_value());
}

TEST_CASE("vertex order in the file does not matter") {
    const auto a = load_instance(R"({"k":1,"vertices":[{"id":1,"weight":5},{"id":0,"weight":2}],"edges":[[1,0]]})");
    CHECK(a.graph.weight(0) == 2);
    CHECK(a.graph.weight(1) == 5);
    CHECK(a.graph.has_edge(0, 1));
}

TEST_CASE("load errors name the problem") {
    auto message = [](const std::string& text) {
        try {
            (void)load_instance(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("<no error>");
    };
    CHECK(message(R"({"k":1,"vertices":[{"id":0,"weight":"a"}],"edges":[]})").find("vertices[0].weight") !=
          std::string::npos);
    CHECK(message(R"({"k":0,"vertices":[{"id":0,"weight":1}],"edges":[]})").find("k:") != std::string::npos);
    CHECK(message(R"({"k":1,"vertices":[{"id":0,"weight":1},{"id":2,"weight":1}],"edges":[]})").find("dense") !=
          std::string::npos);
    CHECK(message(R"({"k":1,"vertices":[{"id":0,"weight":1}],"edges":[[0,0]]})").find("self-loop") !=
          std::string::npos);
    CHECK(message(R"({"k":1,"vertices":[{"id":0,"weight":1},{"id":1,"weight":1}],"edges":[[0,1],[1,0]]})")
              .find("duplicate") != std::string::npos);
    CHECK(message("{\"k\":1,\n\"vertices\": [}").find("line 2") != std::string::npos);
    CHECK(message(R"({"vertices":[],"edges":[]})").find("\"k\"") != std::string::npos);
}

TEST_CASE("degree sum is twice the edge count and save is deterministic") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 9;
        GameInstance inst{testing_support::random_graph(rng, n, 0.4, -5, 5), 1 + trial % 3};
        const auto loaded = load_instance(save_instance(inst));
        std::int64_t degrees = 0;
        for (Vertex v = 0; v < loaded.graph.size(); ++v) degrees += loaded.graph.degree(v);
        CHECK(degrees == 2 * loaded.graph.edge_count());
        CHECK(save_instance(inst) == save_instance(loaded));
    }
}

TEST_CASE("components are sorted and ordered by smallest member") {
    const std::vector<Edge> edges{{3, 1}, {0, 4}};
    const auto g = WeightedGraph::unweighted(5, edges);
    const auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 4});
    CHECK(comps[1] == std::vector<Vertex>{1, 3});
    CHECK(comps[2] == std::vector<Vertex>{2});
}

TEST_CASE("profiles load from JSON arrays") {
    CHECK(load_profile("[0, 4, 4]") == std::vector<Vertex>{0, 4, 4});
    CHECK_THROWS_AS(load_profile("{}"), InputError);
    CHECK_THROWS_AS(load_profile("[1, \"x\"]"), InputError);
    CHECK(save_profile({2, 0}) == "[2,0]\n");
}
