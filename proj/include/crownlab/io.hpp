#pragma once

#include <crownlab/crowns.hpp>
#include <crownlab/poset.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace crownlab
{
    /// {"points": [...], "pairs": [[x, y], ...]}, each pair read as x strictly below y.
    /// Throws MalformedDocument, plus the Poset validation errors.
    auto poset_from_json(const nlohmann::json & doc) -> Poset;
    auto parse_poset(const std::string & text) -> Poset;
    auto read_poset(const std::filesystem::path & path) -> Poset;

    /// Emits covering pairs only.
    auto poset_to_json(const Poset & poset) -> nlohmann::json;

    /// {"source": poset, "target": poset, "map": {point: image}, "verdict": {...}}
    /// with `extra` merged in at the top level.
    auto point_map_to_json(const PointMap & map, const nlohmann::json & extra = nlohmann::json::object())
        -> nlohmann::json;
    auto point_map_from_json(const nlohmann::json & doc) -> PointMap;

    auto hasse_dot(const Poset & poset) -> std::string;
    /// The fixed multigraph on the 2- and 3-point sub-posets of the 4-crown.
    auto c_graph_dot() -> std::string;
    auto f_graph_dot(const Poset & poset, const CrownFamily & family) -> std::string;
}
