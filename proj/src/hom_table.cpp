#include "plumbing/hom_table.hpp"

#include "plumbing/errors.hpp"

namespace plumbing {

std::string side_name(Side s) { return s == Side::Wrapped ? "wrapped" : "quotient"; }

Side parse_side(const std::string& s) {
    if (s == "wrapped") return Side::Wrapped;
    if (s == "quotient") return Side::Quotient;
    throw ParseError("side must be wrapped or quotient, got '" + s + "'");
}

void to_json(nlohmann::json& j, const HomDimTable& t) {
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [p, d] : t.dims) dims[std::to_string(p)] = d;
    j = nlohmann::json{{"from", t.from}, {"to", t.to}, {"side", side_name(t.side)},
                       {"window", {t.lo, t.hi}}, {"dims", dims}};
}

void from_json(const nlohmann::json& j, HomDimTable& t) {
    try {
        t.from = j.at("from").get<int>();
        t.to = j.at("to").get<int>();
        t.side = parse_side(j.at("side").get<std::string>());
        const auto& w = j.at("window");
        if (!w.is_array() || w.size() != 2) throw ParseError("window must be [a, b]");
        t.lo = w[0].get<int>();
        t.hi = w[1].get<int>();
        t.dims.clear();
        for (const auto& [key, value] : j.at("dims").items()) {
            std::size_t used = 0;
            int p = std::stoi(key, &used);
            if (used != key.size()) throw ParseError("bad degree key '" + key + "'");
            int d = value.get<int>();
            if (d < 0) throw ParseError("negative dimension");
            if (p < t.lo || p > t.hi) throw ParseError("degree " + key + " outside the window");
            t.dims[p] = d;
        }
        if (t.lo > t.hi) throw ParseError("empty window");
        if (static_cast<long long>(t.dims.size()) != static_cast<long long>(t.hi) - t.lo + 1)
            throw ParseError("dims must cover every degree of the window");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed table: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(std::string("malformed table: ") + e.what());
    }
}

} // namespace plumbing
