#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

/// Malformed or invalid input. The message names the offending field or
/// the line/column reported by the JSON parser.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `{"k", "vertices": [{"id","weight","name"?}], "edges": [[u,v],...]}`.
/// Vertex ids must be exactly 0..n-1 (any order). Validates the result.
GameInstance load_instance(std::string_view text);

/// Canonical text: vertices sorted by id, edges as sorted (u<v) pairs.
std::string save_instance(const GameInstance& instance);

/// A profile file is a JSON array of vertex ids.
std::vector<Vertex> load_profile(std::string_view text);
std::string save_profile(const std::vector<Vertex>& profile);

std::string read_file(const std::string& path);

}  // namespace cdg
