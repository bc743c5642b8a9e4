#include <crownlab/crown_graphs.hpp>
#include <crownlab/crowns.hpp>
#include <crownlab/error.hpp>
#include <crownlab/generators.hpp>
#include <crownlab/io.hpp>
#include <crownlab/oracle.hpp>
#include <crownlab/reduction.hpp>
#include <crownlab/retraction.hpp>
#include <crownlab/separating.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace crownlab;
using nlohmann::json;

namespace
{
    constexpr int exit_input = 2;
    constexpr int exit_budget = 3;

    struct Flags
    {
        std::string path;
        std::string crown;
        std::string edge;
        bool any = false;
        int method = 1;
        bool oracle = false;
        std::size_t budget = OracleBudget{}.max_maps;
        std::string format = "text";
        std::string graph = "all";
        std::uint64_t seed = 1;
        std::size_t points = 10;
        std::size_t levels = 3;
        bool dir = false;
    };

    auto split_names(const std::string & list) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::stringstream in(list);
        for (std::string item; std::getline(in, item, ',');)
            out.push_back(item);
        return out;
    }

    auto names_of(const Poset & poset, PointSet points) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto p : points)
            out.push_back(poset.name(p));
        return out;
    }

    auto print_map(std::ostream & out, const PointMap & map)
    {
        for (std::size_t x = 0; x < map.source().size(); ++x)
            out << "    " << map.source().name(x) << " -> " << map.target().name(map(x)) << "\n";
    }

    auto analyze(const Poset & poset, const Flags & flags) -> json
    {
        auto start = std::chrono::steady_clock::now();
        json report;
        auto summary = structure_queries(poset);
        report["summary"] = {{"points", summary.points}, {"height", summary.height},
            {"minimal", summary.minimal_count}, {"maximal", summary.maximal_count}, {"connected", summary.connected}};

        auto crowns = enumerate_4crowns_in_E(poset);
        std::size_t proper = 0, improper = 0, hourglass = 0;
        for (const auto & c : crowns)
            (c.kind == CrownKind::Proper ? proper : c.kind == CrownKind::Hourglass ? hourglass : improper)++;
        report["crowns"] = {{"proper", proper}, {"improper", improper}, {"hourglass", hourglass}};

        auto family = improper_family(poset);
        auto graph = build_F_graph(poset, family);
        auto between = [](const std::vector<FEdge> & edges) {
            return std::count_if(edges.begin(), edges.end(), [](const FEdge & e) { return e.first != e.second; });
        };
        report["improper_multigraph"] = {{"vertices", family.size()}, {"l_edges", between(graph.l_edges)},
            {"u_edges", between(graph.u_edges)}, {"complete", graph.complete}};

        OracleBudget budget;
        budget.max_maps = flags.budget;
        bool any_retract = false;
        json verdicts = json::array();
        for (const auto & c : crowns) {
            json entry{{"crown", names_of(poset, c.points())}, {"kind", to_string(c.kind)}};
            if (c.improper()) {
                entry["verdict"] = "crown-improper";
            }
            else if (auto r = retract_onto_4crown(poset, family, c)) {
                entry["verdict"] = "found";
                entry["certificate"] = point_map_to_json(*r)["map"];
                any_retract = true;
            }
            else {
                entry["verdict"] = "not-found";
            }
            if (flags.oracle) {
                auto o = oracle_retraction_exists(poset, c.points(), budget);
                entry["oracle_concurs"] = o.exists == (entry["verdict"] == "found");
            }
            verdicts.push_back(entry);
        }
        report["retract_4crown"] = any_retract ? "present" : "absent";
        report["verdicts"] = verdicts;

        auto d = extremal_decomposition(poset);
        if ((d.minimal - d.maximal).size() >= 2 && (d.maximal - d.minimal).size() >= 2 && height(poset) >= 1) {
            auto sep = find_separating(poset, family);
            json s{{"found", sep.found()}};
            if (flags.oracle)
                s["oracle_concurs"] = oracle_surjective_hom_exists(poset, template_crown(), budget).exists == sep.found();
            report["onto_4crown"] = s;
        }

        auto screen = fpp_screen(poset);
        json certs = json::array();
        for (const auto & c : screen.certificates) {
            json cert{{"edge", {poset.name(c.edge.first), poset.name(c.edge.second)}}, {"reason", c.reason}};
            json cycle = json::array();
            for (auto p : c.crown)
                cycle.push_back(poset.name(p));
            cert["crown"] = cycle;
            certs.push_back(cert);
        }
        report["fpp_screen"] = {{"verdict", to_string(screen.verdict)}, {"certificates", certs},
            {"extremal_crown_free", screen.extremal_crown_free}};

        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        report["time_ms"] = elapsed.count();
        return report;
    }

    auto print_analysis(std::ostream & out, const json & r)
    {
        const auto & s = r["summary"];
        out << "points " << s["points"] << ", height " << s["height"] << ", |L| " << s["minimal"] << ", |U| "
            << s["maximal"] << ", connected " << s["connected"] << "\n";
        const auto & c = r["crowns"];
        out << "4-crowns in E(P): " << c["proper"] << " proper, " << c["improper"] << " improper, " << c["hourglass"]
            << " hourglass\n";
        const auto & f = r["improper_multigraph"];
        out << "improper-crown multigraph: " << f["vertices"] << " vertices, " << f["l_edges"] << " L-edges, "
            << f["u_edges"] << " U-edges, complete " << f["complete"] << "\n";
        for (const auto & v : r["verdicts"]) {
            out << "  crown " << v["crown"].dump() << " (" << v["kind"].get<std::string>()
                << "): " << v["verdict"].get<std::string>();
            if (v.contains("oracle_concurs"))
                out << (v["oracle_concurs"].get<bool>() ? ", oracle concurs" : ", ORACLE DISAGREES");
            out << "\n";
            if (v.contains("certificate"))
                for (const auto & [x, y] : v["certificate"].items())
                    out << "    " << x << " -> " << y.get<std::string>() << "\n";
        }
        out << "4-crown retract: " << r["retract_4crown"].get<std::string>() << "\n";
        if (r.contains("onto_4crown")) {
            const auto & o = r["onto_4crown"];
            out << "surjection onto a 4-crown: " << (o["found"].get<bool>() ? "yes" : "no");
            if (o.contains("oracle_concurs"))
                out << (o["oracle_concurs"].get<bool>() ? ", oracle concurs" : ", ORACLE DISAGREES");
            out << "\n";
        }
        const auto & fpp = r["fpp_screen"];
        out << "fixed point screen: " << fpp["verdict"].get<std::string>() << "\n";
        for (const auto & cert : fpp["certificates"])
            out << "  edge " << cert["edge"].dump() << ": " << cert["reason"].get<std::string>() << " "
                << cert["crown"].dump() << "\n";
    }

    auto cmd_analyze(const Flags & flags) -> int
    {
        std::vector<std::filesystem::path> files;
        if (flags.dir) {
            for (const auto & entry : std::filesystem::directory_iterator(flags.path))
                if (entry.path().extension() == ".json")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
        }
        else {
            files.push_back(flags.path);
        }

        json all = json::array();
        for (const auto & file : files) {
            auto report = analyze(read_poset(file), flags);
            if (flags.format == "json") {
                report["file"] = file.string();
                all.push_back(report);
                continue;
            }
            if (flags.dir)
                std::cout << "== " << file.string() << "\n";
            print_analysis(std::cout, report);
        }
        if (flags.format == "json")
            std::cout << (flags.dir ? all : all.front()).dump(2) << "\n";
        return 0;
    }

    auto emit_certificate(const Flags & flags, const json & doc, const PointMap * map)
    {
        if (flags.format == "json" || ! map) {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        std::cout << "verdict: " << doc["verdict_kind"].get<std::string>() << "\n";
        print_map(std::cout, *map);
    }

    auto cmd_retract(const Flags & flags) -> int
    {
        auto poset = read_poset(flags.path);
        if (! flags.edge.empty()) {
            auto ends = split_names(flags.edge);
            if (ends.size() != 2)
                throw Error(ErrorCode::NotAnEdge, "--edge expects x,y");
            auto x = poset.index_of(ends[0]), y = poset.index_of(ends[1]);
            try {
                auto result = retract_crown_from_free_edge(poset, x, y);
                json cycle = json::array();
                for (auto p : result.crown)
                    cycle.push_back(poset.name(p));
                auto doc = point_map_to_json(result.retraction, {{"verdict_kind", "found"}, {"crown", cycle}});
                emit_certificate(flags, doc, &result.retraction);
            }
            catch (const Error & e) {
                if (e.code() != ErrorCode::EdgeInImproperCrown && e.code() != ErrorCode::NoCrownThroughEdge)
                    throw;
                std::cout << json{{"verdict_kind", to_string(e.code())}}.dump(2) << "\n";
            }
            return 0;
        }

        auto family = improper_family(poset);
        std::vector<FourCrown> targets;
        if (! flags.crown.empty()) {
            auto pts = split_names(flags.crown);
            if (pts.size() != 4)
                throw Error(ErrorCode::NotACrown, "--crown expects four point names");
            PointSet set;
            for (const auto & p : pts)
                set.insert(poset.index_of(p));
            targets.push_back(classify_crown(poset, set));
        }
        else {
            targets = enumerate_4crowns_in_E(poset);
        }

        for (const auto & crown : targets) {
            auto search = find_C_separating(poset, family, crown);
            if (search.status == SearchStatus::CrownImproper) {
                if (flags.crown.empty())
                    continue;
                std::cout << json{{"verdict_kind", "CrownImproper"}, {"crown", names_of(poset, crown.points())}}.dump(2)
                          << "\n";
                return 0;
            }
            if (auto r = retract_onto_4crown(poset, family, crown)) {
                auto doc = point_map_to_json(*r, {{"verdict_kind", "found"}, {"crown", names_of(poset, crown.points())}});
                emit_certificate(flags, doc, &*r);
                return 0;
            }
            if (! flags.crown.empty()) {
                std::cout << json{{"verdict_kind", "NotFound"}, {"crown", names_of(poset, crown.points())}}.dump(2)
                          << "\n";
                return 0;
            }
        }
        std::cout << json{{"verdict_kind", "NotFound"}}.dump(2) << "\n";
        return 0;
    }

    auto cmd_dismantle(const Flags & flags) -> int
    {
        auto poset = read_poset(flags.path);
        auto trace = i_dismantle(poset);
        auto before = poset.all();
        json steps = json::array();
        for (const auto & step : trace.steps) {
            steps.push_back({{"removed", poset.name(step.removed)}, {"absorbed_by", poset.name(step.absorbed_by)},
                {"valid", is_valid_i_retraction(poset, before, step)}});
            before = step.carrier;
        }
        json doc{{"steps", steps}, {"terminal", names_of(poset, trace.terminal)},
            {"singleton", trace.reached_singleton()}};
        if (flags.format == "json") {
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        for (const auto & s : steps)
            std::cout << "remove " << s["removed"].get<std::string>() << " into "
                      << s["absorbed_by"].get<std::string>() << (s["valid"].get<bool>() ? "" : " (INVALID)") << "\n";
        std::cout << "terminal " << doc["terminal"].dump() << " after " << steps.size() << " steps\n";
        return 0;
    }

    auto cmd_reduce(const Flags & flags) -> int
    {
        auto poset = read_poset(flags.path);
        auto family = improper_family(poset);
        auto result = flags.method == 2 ? reduce_height_method2(poset, family) : reduce_height_method1(poset, family);
        auto check = check_reduction(poset, family, result);
        json doc{{"method", result.method}, {"poset", poset_to_json(result.r)},
            {"check", {{"passed", check.ok()}, {"height_ok", check.height_ok},
                          {"same_multigraph", check.same_multigraph}, {"pattern_ok", check.pattern_ok}}}};
        if (! check.violation.empty())
            doc["check"]["violation"] = check.violation;
        if (flags.format == "json") {
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        std::cout << doc["poset"].dump() << "\n"
                  << result.r.size() << " points, height " << height(result.r) << ", check "
                  << (check.ok() ? "passed" : "failed: " + check.violation) << "\n";
        return 0;
    }

    auto cmd_export(const Flags & flags) -> int
    {
        auto poset = read_poset(flags.path);
        if (flags.format == "json") {
            std::cout << poset_to_json(poset).dump(2) << "\n";
            return 0;
        }
        if (flags.graph == "hasse" || flags.graph == "all")
            std::cout << hasse_dot(poset);
        if (flags.graph == "C" || flags.graph == "all")
            std::cout << c_graph_dot();
        if (flags.graph == "F" || flags.graph == "all")
            std::cout << f_graph_dot(poset, improper_family(poset));
        return 0;
    }

    auto cmd_random(const Flags & flags) -> int
    {
        auto poset = random_connected_poset(flags.seed, {flags.points, flags.levels});
        std::cout << poset_to_json(poset).dump(2) << "\n";
        return 0;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Crown retracts of finite posets"};
    app.require_subcommand(1);
    Flags flags;

    auto with_path = [&](CLI::App * cmd) {
        cmd->add_option("path", flags.path, "Poset document")->required();
        cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
        return cmd;
    };

    auto analyze_cmd = with_path(app.add_subcommand("analyze", "Full report on a poset"));
    analyze_cmd->add_flag("--oracle", flags.oracle, "Cross-check with the brute-force oracle");
    analyze_cmd->add_option("--budget", flags.budget, "Oracle node budget");
    analyze_cmd->add_flag("--dir", flags.dir, "Treat path as a directory of documents");

    auto retract_cmd = with_path(app.add_subcommand("retract", "Retraction certificate onto a crown"));
    retract_cmd->add_option("--crown", flags.crown, "Four points a,b,v,w");
    retract_cmd->add_option("--edge", flags.edge, "Edge x,y of E(P)");
    retract_cmd->add_flag("--any", flags.any, "First retract 4-crown");

    auto dismantle_cmd = with_path(app.add_subcommand("dismantle", "Greedy irreducible-point removal"));
    auto reduce_cmd = with_path(app.add_subcommand("reduce", "Height reduction keeping the crown multigraph"));
    reduce_cmd->add_option("--method", flags.method, "1 or 2")->check(CLI::Range(1, 2));

    auto export_cmd = with_path(app.add_subcommand("export", "DOT or document output"));
    export_cmd->add_option("--graph", flags.graph, "hasse, C, F or all")->check(CLI::IsMember({"hasse", "C", "F", "all"}));

    auto random_cmd = app.add_subcommand("random", "Seeded random connected poset");
    random_cmd->add_option("--seed", flags.seed, "Seed");
    random_cmd->add_option("--points", flags.points, "Number of points")->check(CLI::Range(1, 64));
    random_cmd->add_option("--levels", flags.levels, "Number of levels")->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(flags);
        if (*retract_cmd)
            return cmd_retract(flags);
        if (*dismantle_cmd)
            return cmd_dismantle(flags);
        if (*reduce_cmd)
            return cmd_reduce(flags);
        if (*export_cmd)
            return cmd_export(flags);
        if (*random_cmd)
            return cmd_random(flags);
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? exit_budget : exit_input;
    }
    catch (const std::filesystem::filesystem_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
