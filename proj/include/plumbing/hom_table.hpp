#pragma once

// Degreewise dimension tables and their JSON form
// {from, to, side, window: [a, b], dims: {"<degree>": int}}.

#include "plumbing/cluster.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace plumbing {

struct HomDimTable {
    int from = 0, to = 0;
    Side side = Side::Wrapped;
    int lo = 0, hi = 0;
    std::map<int, int> dims;
    bool operator==(const HomDimTable&) const = default;
};

std::string side_name(Side s);
Side parse_side(const std::string& s); // throws ParseError

void to_json(nlohmann::json& j, const HomDimTable& t);
void from_json(const nlohmann::json& j, HomDimTable& t); // throws ParseError

} // namespace plumbing
