#include <crownlab/crown_graphs.hpp>
#include <crownlab/error.hpp>

#include <algorithm>
#include <numeric>

namespace crownlab
{
    namespace
    {
        constexpr std::array<CVertex, 8> canonical{cv::av, cv::aw, cv::bv, cv::bw, cv::abv, cv::abw, cv::avw, cv::bvw};
        constexpr std::array<CVertex, 4> three_point{cv::abv, cv::abw, cv::avw, cv::bvw};
    }

    auto CVertex::index() const -> std::size_t
    {
        for (std::size_t i = 0; i < canonical.size(); ++i)
            if (canonical[i] == *this)
                return i;
        throw Error(ErrorCode::MalformedDocument, "not a connected 2- or 3-point sub-poset of the crown");
    }

    auto CVertex::label() const -> std::string
    {
        std::string s;
        for (auto [role, ch] : {std::pair{Role::A, 'a'}, {Role::B, 'b'}, {Role::V, 'v'}, {Role::W, 'w'}})
            if (has(role))
                s += ch;
        if (size() == 2)
            return "{" + s.substr(0, 1) + "," + s.substr(1) + "}";
        return s;
    }

    auto all_cvertices() -> const std::array<CVertex, 8> &
    {
        return canonical;
    }

    auto three_point_cvertices() -> const std::array<CVertex, 4> &
    {
        return three_point;
    }

    auto l_edge(CVertex s, CVertex t) -> bool
    {
        return (s.lower() & t.lower()) != 0;
    }

    auto u_edge(CVertex s, CVertex t) -> bool
    {
        return (s.upper() & t.upper()) != 0;
    }

    auto build_C_graph() -> CMultigraph
    {
        CMultigraph g;
        g.vertices = canonical;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                g.l_edges[i][j] = l_edge(canonical[i], canonical[j]);
                g.u_edges[i][j] = u_edge(canonical[i], canonical[j]);
            }
        return g;
    }

    auto in_class(CVertex s, VertexClass k) -> bool
    {
        switch (k) {
        case VertexClass::A: return s.lower() == 0b0001;
        case VertexClass::B: return s.lower() == 0b0010;
        case VertexClass::V: return s.upper() == 0b0100;
        case VertexClass::W: return s.upper() == 0b1000;
        }
        return false;
    }

    auto classify_vertices() -> std::array<VertexClassRow, 8>
    {
        std::array<VertexClassRow, 8> rows;
        for (std::size_t i = 0; i < 8; ++i) {
            auto s = canonical[i];
            rows[i] = VertexClassRow{s, in_class(s, VertexClass::A), in_class(s, VertexClass::B),
                in_class(s, VertexClass::V), in_class(s, VertexClass::W)};
        }
        return rows;
    }

    auto theta(CVertex s) -> CVertex
    {
        if (s == cv::av)
            return cv::avw;
        if (s == cv::bw)
            return cv::bvw;
        if (s == cv::aw)
            return cv::abw;
        if (s == cv::bv)
            return cv::abv;
        return s;
    }

    auto c_automorphisms() -> const std::vector<CPermutation> &
    {
        static const std::vector<CPermutation> result = [] {
            std::vector<CPermutation> found;
            std::array<std::size_t, 8> perm;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (std::size_t i = 0; i < 8 && ok; ++i) {
                    if (canonical[i].size() != canonical[perm[i]].size())
                        ok = false;
                    for (std::size_t j = 0; j < 8 && ok; ++j)
                        if (l_edge(canonical[i], canonical[j]) != l_edge(canonical[perm[i]], canonical[perm[j]])
                            || u_edge(canonical[i], canonical[j]) != u_edge(canonical[perm[i]], canonical[perm[j]]))
                            ok = false;
                }
                if (ok) {
                    CPermutation p;
                    for (std::size_t i = 0; i < 8; ++i)
                        p[i] = canonical[perm[i]];
                    found.push_back(p);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return found;
        }();
        return result;
    }

    auto role_swap(CVertex s, bool swap_lower, bool swap_upper) -> CVertex
    {
        std::uint8_t lower = s.lower(), upper = s.upper();
        if (swap_lower)
            lower = static_cast<std::uint8_t>(((lower & 1) << 1) | ((lower >> 1) & 1));
        if (swap_upper)
            upper = static_cast<std::uint8_t>(((upper & 0b0100) << 1) | ((upper >> 1) & 0b0100));
        return CVertex{static_cast<std::uint8_t>(lower | upper)};
    }

    auto delta(CVertex s, CVertex t) -> DeltaMap
    {
        if (s.size() != 3 || t.size() != 3 || s == t || ! l_edge(s, t) || ! u_edge(s, t))
            throw Error(ErrorCode::NotATwoClique, s.label() + " and " + t.label() + " do not form a 3-point two-clique");

        DeltaMap d;
        d.domain = {s, t};
        for (std::size_t i = 0; i < 8; ++i)
            d.image[i] = canonical[i];

        auto shared = CVertex{static_cast<std::uint8_t>(s.mask() & t.mask())};
        for (auto x : canonical) {
            if (x.size() != 2)
                continue;
            bool in_s = (x.mask() & s.mask()) == x.mask(), in_t = (x.mask() & t.mask()) == x.mask();
            if (! in_s && ! in_t)
                continue;
            d.domain.push_back(x);
            if (x != shared)
                d.image[x.index()] = in_s ? s : t;
        }
        return d;
    }

    auto FMultigraph::degree(std::size_t f) const -> std::size_t
    {
        std::size_t deg = 0;
        for (std::size_t g = 0; g < vertex_count; ++g)
            if (g != f && (l_adj[f][g] || u_adj[f][g]))
                ++deg;
        return deg;
    }

    auto build_F_graph(const Poset & poset, const CrownFamily & family) -> FMultigraph
    {
        (void)poset;
        FMultigraph g;
        const auto n = family.size();
        g.vertex_count = n;
        g.l_adj.assign(n, std::vector<bool>(n, false));
        g.u_adj.assign(n, std::vector<bool>(n, false));
        g.complete = true;
        for (std::size_t f = 0; f < n; ++f)
            for (std::size_t h = f; h < n; ++h) {
                auto lower = family.crowns[f].lower() & family.crowns[h].lower();
                auto upper = family.crowns[f].upper() & family.crowns[h].upper();
                if (! lower.empty()) {
                    g.l_adj[f][h] = g.l_adj[h][f] = true;
                    g.l_edges.push_back(FEdge{f, h, lower.front()});
                }
                if (! upper.empty()) {
                    g.u_adj[f][h] = g.u_adj[h][f] = true;
                    g.u_edges.push_back(FEdge{f, h, upper.front()});
                }
                if (f != h && (lower.empty() || upper.empty()))
                    g.complete = false;
            }
        return g;
    }

    auto rebuild_from_witnesses(const FMultigraph & graph) -> FMultigraph
    {
        FMultigraph g;
        g.vertex_count = graph.vertex_count;
        g.l_adj.assign(g.vertex_count, std::vector<bool>(g.vertex_count, false));
        g.u_adj.assign(g.vertex_count, std::vector<bool>(g.vertex_count, false));
        g.l_edges = graph.l_edges;
        g.u_edges = graph.u_edges;
        for (const auto & e : g.l_edges)
            g.l_adj[e.first][e.second] = g.l_adj[e.second][e.first] = true;
        for (const auto & e : g.u_edges)
            g.u_adj[e.first][e.second] = g.u_adj[e.second][e.first] = true;
        g.complete = true;
        for (std::size_t f = 0; f < g.vertex_count; ++f)
            for (std::size_t h = f + 1; h < g.vertex_count; ++h)
                if (! g.l_adj[f][h] || ! g.u_adj[f][h])
                    g.complete = false;
        return g;
    }
}
