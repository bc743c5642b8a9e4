#include <crownlab/crown_graphs.hpp>
#include <crownlab/error.hpp>
#include <crownlab/generators.hpp>

#include <doctest.h>
#include <fixtures.hpp>

#include <set>

using namespace crownlab;

namespace
{
    auto is_hom(const std::array<CVertex, 8> & map) -> bool
    {
        for (auto s : all_cvertices())
            for (auto t : all_cvertices()) {
                if (l_edge(s, t) && ! l_edge(map[s.index()], map[t.index()]))
                    return false;
                if (u_edge(s, t) && ! u_edge(map[s.index()], map[t.index()]))
                    return false;
            }
        return true;
    }

    constexpr VertexClass classes[] = {VertexClass::A, VertexClass::B, VertexClass::V, VertexClass::W};
}

TEST_CASE("the fixed multigraph")
{
    auto g = build_C_graph();
    CHECK(g.vertices.size() == 8);
    std::size_t two = 0;
    for (auto s : g.vertices)
        two += s.size() == 2;
    CHECK(two == 4);

    CHECK(l_edge(cv::abv, cv::avw));
    CHECK(u_edge(cv::avw, cv::bvw));
    CHECK_FALSE(l_edge(cv::av, cv::bw));
    CHECK(l_edge(cv::av, cv::av));
    CHECK(u_edge(cv::av, cv::av));

    // within the 3-point vertices only avw–bvw lacks an L-edge and abv–abw a U-edge
    for (auto s : three_point_cvertices())
        for (auto t : three_point_cvertices()) {
            bool no_l = (s == cv::avw && t == cv::bvw) || (s == cv::bvw && t == cv::avw);
            bool no_u = (s == cv::abv && t == cv::abw) || (s == cv::abw && t == cv::abv);
            CHECK(l_edge(s, t) == ! no_l);
            CHECK(u_edge(s, t) == ! no_u);
        }
    CHECK(cv::avw.label() == "avw");
    CHECK(cv::av.label() == "{a,v}");
}

TEST_CASE("vertex classes")
{
    auto rows = classify_vertices();
    std::array<int, 4> counts{};
    for (const auto & r : rows) {
        counts[0] += r.in_A;
        counts[1] += r.in_B;
        counts[2] += r.in_V;
        counts[3] += r.in_W;
        CHECK((r.in_A || r.in_B || r.in_V || r.in_W));
    }
    CHECK(counts == std::array<int, 4>{3, 3, 3, 3});

    CHECK(in_class(cv::avw, VertexClass::A));
    CHECK_FALSE(in_class(cv::avw, VertexClass::B));
    CHECK_FALSE(in_class(cv::avw, VertexClass::V));
    CHECK_FALSE(in_class(cv::avw, VertexClass::W));
    CHECK(in_class(cv::bw, VertexClass::B));
    CHECK(in_class(cv::bw, VertexClass::W));
    CHECK(in_class(cv::abv, VertexClass::V));
    CHECK_FALSE(in_class(cv::abv, VertexClass::A));
    CHECK_FALSE(in_class(cv::abv, VertexClass::B));
    CHECK_FALSE(in_class(cv::abv, VertexClass::W));
}

TEST_CASE("theta")
{
    std::array<CVertex, 8> map;
    for (auto s : all_cvertices()) {
        map[s.index()] = theta(s);
        CHECK(theta(s).size() == 3);
        CHECK(theta(theta(s)) == theta(s));
        for (auto k : classes)
            if (! in_class(s, k))
                CHECK_FALSE(in_class(theta(s), k));
    }
    CHECK(theta(cv::abv) == cv::abv);
    CHECK(is_hom(map));
}

TEST_CASE("automorphisms")
{
    const auto & autos = c_automorphisms();
    CHECK(autos.size() == 4);
    std::set<std::array<std::uint8_t, 8>> swaps;
    for (bool lo : {false, true})
        for (bool hi : {false, true}) {
            std::array<std::uint8_t, 8> m;
            for (auto s : all_cvertices())
                m[s.index()] = role_swap(s, lo, hi).mask();
            swaps.insert(m);
        }
    for (const auto & perm : autos) {
        CHECK(is_hom(perm));
        std::array<std::uint8_t, 8> m;
        for (std::size_t i = 0; i < 8; ++i)
            m[i] = perm[i].mask();
        CHECK(swaps.count(m) == 1);

        // each automorphism fixes or exchanges the classes A, B (and V, W)
        auto image_class = [&](VertexClass k) {
            std::set<std::uint8_t> out;
            for (auto s : all_cvertices())
                if (in_class(s, k))
                    out.insert(perm[s.index()].mask());
            return out;
        };
        auto members = [](VertexClass k) {
            std::set<std::uint8_t> out;
            for (auto s : all_cvertices())
                if (in_class(s, k))
                    out.insert(s.mask());
            return out;
        };
        auto ia = image_class(VertexClass::A), iv = image_class(VertexClass::V);
        CHECK((ia == members(VertexClass::A) || ia == members(VertexClass::B)));
        CHECK((iv == members(VertexClass::V) || iv == members(VertexClass::W)));
    }
    CHECK(role_swap(cv::avw, true, false) == cv::bvw);
    CHECK(role_swap(cv::abv, true, false) == cv::abv);
    CHECK(role_swap(cv::abw, true, false) == cv::abw);
}

TEST_CASE("delta")
{
    auto d = delta(cv::avw, cv::abv);
    CHECK(d.domain.size() == 5);
    CHECK(d(cv::avw) == cv::avw);
    CHECK(d(cv::abv) == cv::abv);
    CHECK(is_hom(d.image));
    std::set<std::uint8_t> image;
    for (auto s : d.domain) {
        CHECK(d(d(s)) == d(s));
        image.insert(d(s).mask());
        for (auto k : classes)
            if (! in_class(s, k))
                CHECK_FALSE(in_class(d(s), k));
    }
    // the image is a clique of the fixed multigraph
    for (auto s : image)
        for (auto t : image) {
            CHECK(l_edge(CVertex{s}, CVertex{t}));
            CHECK(u_edge(CVertex{s}, CVertex{t}));
        }

    try {
        delta(cv::avw, cv::bvw);
        FAIL("expected NotATwoClique");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::NotATwoClique);
    }
}

TEST_CASE("maps into a clique are homomorphisms")
{
    // every 2-clique {S, T} of 3-point vertices, with any assignment of the family
    auto p9 = fixtures::p9_like();
    auto fam = improper_family(p9);
    auto g = build_F_graph(p9, fam);
    for (auto s : three_point_cvertices())
        for (auto t : three_point_cvertices()) {
            if (! l_edge(s, t) || ! u_edge(s, t))
                continue;
            for (unsigned mask = 0; mask < (1u << fam.size()); ++mask) {
                bool ok = true;
                auto val = [&](std::size_t f) { return (mask >> f) & 1 ? s : t; };
                for (std::size_t f = 0; f < fam.size(); ++f)
                    for (std::size_t h = 0; h < fam.size(); ++h) {
                        if (g.l_adj[f][h] && ! l_edge(val(f), val(h)))
                            ok = false;
                        if (g.u_adj[f][h] && ! u_edge(val(f), val(h)))
                            ok = false;
                    }
                CHECK(ok);
            }
        }
}

TEST_CASE("instance multigraph")
{
    auto hg = fixtures::hg();
    auto g1 = build_F_graph(hg, improper_family(hg));
    CHECK(g1.vertex_count == 1);
    CHECK(g1.l_adj[0][0]);
    CHECK(g1.u_adj[0][0]);

    auto w2 = fixtures::w2();
    auto fam = improper_family(w2);
    auto g2 = build_F_graph(w2, fam);
    REQUIRE(g2.vertex_count == 2);
    CHECK(g2.l_adj[0][1]);
    CHECK(g2.u_adj[0][1]);
    for (const auto & e : g2.l_edges)
        if (e.first != e.second)
            CHECK(w2.name(e.witness) == "b");
    for (const auto & e : g2.u_edges)
        if (e.first != e.second)
            CHECK(w2.name(e.witness) == "w");

    auto p9 = fixtures::p9_like();
    auto g3 = build_F_graph(p9, improper_family(p9));
    CHECK(g3.vertex_count == 4);
    CHECK(g3.complete);

    for (std::uint64_t s = 0; s < 100; ++s) {
        auto p = random_connected_poset(400 + s, {10, 3, 55});
        auto f = improper_family(p);
        auto g = build_F_graph(p, f);
        auto r = rebuild_from_witnesses(g);
        CHECK(r.l_adj == g.l_adj);
        CHECK(r.u_adj == g.u_adj);
        CHECK(r.complete == g.complete);
        for (const auto & e : g.l_edges)
            CHECK((f.crowns[e.first].lower() & f.crowns[e.second].lower()).contains(e.witness));
        for (const auto & e : g.u_edges)
            CHECK((f.crowns[e.first].upper() & f.crowns[e.second].upper()).contains(e.witness));
    }
}
