#include <crownlab/crown_graphs.hpp>
#include <crownlab/error.hpp>
#include <crownlab/io.hpp>

#include <fstream>
#include <sstream>

namespace crownlab
{
    using nlohmann::json;

    namespace
    {
        auto malformed(const std::string & what) -> Error
        {
            return Error(ErrorCode::MalformedDocument, what);
        }

        auto quoted(const std::string & s) -> std::string
        {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            return out + "\"";
        }

        auto lookup(const Poset & poset, const json & name) -> std::size_t
        {
            if (! name.is_string())
                throw malformed("point names must be strings");
            return poset.index_of(name.get<std::string>());
        }
    }

    auto poset_from_json(const json & doc) -> Poset
    {
        if (! doc.is_object() || ! doc.contains("points") || ! doc["points"].is_array())
            throw malformed("poset document needs a \"points\" list");
        std::vector<std::string> names;
        for (const auto & p : doc["points"]) {
            if (! p.is_string())
                throw malformed("point names must be strings");
            names.push_back(p.get<std::string>());
        }

        std::vector<std::pair<std::string, std::string>> below;
        if (doc.contains("pairs")) {
            if (! doc["pairs"].is_array())
                throw malformed("\"pairs\" must be a list");
            for (const auto & pair : doc["pairs"]) {
                if (! pair.is_array() || pair.size() != 2 || ! pair[0].is_string() || ! pair[1].is_string())
                    throw malformed("each pair must be a list of two point names");
                below.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        }
        return Poset::from_named(std::move(names), below);
    }

    auto parse_poset(const std::string & text) -> Poset
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw malformed(e.what());
        }
        return poset_from_json(doc);
    }

    auto read_poset(const std::filesystem::path & path) -> Poset
    {
        std::ifstream in(path);
        if (! in)
            throw malformed("cannot open " + path.string());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_poset(buffer.str());
    }

    auto poset_to_json(const Poset & poset) -> json
    {
        json pairs = json::array();
        for (auto [lo, hi] : poset.covers())
            pairs.push_back({poset.name(lo), poset.name(hi)});
        return json{{"points", poset.names()}, {"pairs", pairs}};
    }

    auto point_map_to_json(const PointMap & map, const json & extra) -> json
    {
        json images = json::object();
        for (std::size_t x = 0; x < map.source().size(); ++x)
            images[map.source().name(x)] = map.target().name(map(x));
        auto v = classify_map(map);
        json doc = extra;
        doc["source"] = poset_to_json(map.source());
        doc["target"] = poset_to_json(map.target());
        doc["map"] = images;
        doc["verdict"] = {{"homomorphism", v.homomorphism}, {"surjective", v.surjective}, {"retraction", v.retraction}};
        return doc;
    }

    auto point_map_from_json(const json & doc) -> PointMap
    {
        if (! doc.is_object() || ! doc.contains("source") || ! doc.contains("map") || ! doc["map"].is_object())
            throw malformed("point-map document needs \"source\" and \"map\"");
        auto source = poset_from_json(doc["source"]);
        auto target = doc.contains("target") ? poset_from_json(doc["target"]) : source;

        std::vector<std::size_t> image(source.size(), target.size());
        for (const auto & [name, img] : doc["map"].items())
            image[source.index_of(name)] = lookup(target, img);
        for (std::size_t x = 0; x < source.size(); ++x)
            if (image[x] == target.size())
                throw malformed("map has no image for '" + source.name(x) + "'");
        return PointMap{std::move(source), std::move(target), std::move(image)};
    }

    auto hasse_dot(const Poset & poset) -> std::string
    {
        std::ostringstream out;
        out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
        for (const auto & n : poset.names())
            out << "  " << quoted(n) << ";\n";
        for (auto [lo, hi] : poset.covers())
            out << "  " << quoted(poset.name(lo)) << " -> " << quoted(poset.name(hi)) << ";\n";
        out << "}\n";
        return out.str();
    }

    auto c_graph_dot() -> std::string
    {
        std::ostringstream out;
        out << "graph C {\n";
        const auto & vs = all_cvertices();
        for (auto s : vs)
            out << "  " << quoted(s.label()) << ";\n";
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i; j < vs.size(); ++j) {
                if (l_edge(vs[i], vs[j]))
                    out << "  " << quoted(vs[i].label()) << " -- " << quoted(vs[j].label()) << " [style=solid];\n";
                if (u_edge(vs[i], vs[j]))
                    out << "  " << quoted(vs[i].label()) << " -- " << quoted(vs[j].label()) << " [style=dashed];\n";
            }
        out << "}\n";
        return out.str();
    }

    auto f_graph_dot(const Poset & poset, const CrownFamily & family) -> std::string
    {
        auto g = build_F_graph(poset, family);
        auto label = [&](std::size_t f) {
            return quoted("F" + std::to_string(f + 1) + "=" + crown_label(poset, family.crowns[f]));
        };
        std::ostringstream out;
        out << "graph F {\n";
        for (std::size_t f = 0; f < family.size(); ++f)
            out << "  " << label(f) << ";\n";
        for (const auto & e : g.l_edges)
            out << "  " << label(e.first) << " -- " << label(e.second) << " [style=solid];\n";
        for (const auto & e : g.u_edges)
            out << "  " << label(e.first) << " -- " << label(e.second) << " [style=dashed];\n";
        out << "}\n";
        return out.str();
    }
}
