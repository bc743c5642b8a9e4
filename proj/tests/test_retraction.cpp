#include <crownlab/error.hpp>
#include <crownlab/generators.hpp>
#include <crownlab/oracle.hpp>
#include <crownlab/retraction.hpp>

#include <doctest.h>
#include <fixtures.hpp>

using namespace crownlab;

namespace
{
    auto set_of(const Poset & p, std::initializer_list<const char *> names) -> PointSet
    {
        PointSet s;
        for (auto n : names)
            s.insert(p.index_of(n));
        return s;
    }

    auto code_of(auto && fn) -> ErrorCode
    {
        try {
            fn();
        }
        catch (const Error & e) {
            return e.code();
        }
        FAIL("no error raised");
        return ErrorCode::MalformedDocument;
    }

    auto is_retraction_onto(const PointMap & r, PointSet image) -> bool
    {
        return classify_map(r, PointSet{}).retraction && r.image_set() == image;
    }

    auto partition(const Poset & p, std::initializer_list<const char *> a, std::initializer_list<const char *> b,
        std::initializer_list<const char *> v, std::initializer_list<const char *> w) -> ExtremalPartition
    {
        return {set_of(p, a), set_of(p, b), set_of(p, v), set_of(p, w)};
    }

    auto cycle_of(const Poset & p, std::initializer_list<const char *> names) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (auto n : names)
            out.push_back(p.index_of(n));
        return out;
    }
}

TEST_CASE("partition condition")
{
    auto f6 = fixtures::flat6();
    auto part6 = partition(f6, {"x0"}, {"x1", "x2", "q"}, {"y0", "p"}, {"y1", "y2"});
    CHECK(check_partition_condition(f6, improper_family(f6), part6).ok);

    auto hg = fixtures::hg();
    auto verdict = check_partition_condition(hg, improper_family(hg), partition(hg, {"a"}, {"b"}, {"v"}, {"w"}));
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violator == 0u);

    CHECK(code_of([&] {
        check_partition_condition(hg, improper_family(hg), ExtremalPartition{set_of(hg, {"a", "b"}), {},
                                                                  set_of(hg, {"v"}), set_of(hg, {"w"})});
    }) == ErrorCode::InvalidPartition);
}

TEST_CASE("induced homomorphism")
{
    auto c4 = fixtures::c4();
    auto f = induced_hom(c4, partition(c4, {"a"}, {"b"}, {"v"}, {"w"}));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(f(i) == i);
    auto v = classify_map(f, f.source().all());
    CHECK(v.homomorphism);
    CHECK(v.strict);
    CHECK(v.surjective);

    auto k6 = fixtures::k6();
    auto g = induced_hom(k6, partition(k6, {"x0", "x2"}, {"x1"}, {"y0"}, {"y1", "y2"}));
    CHECK(g(k6.index_of("x0")) == 0);
    CHECK(g(k6.index_of("x2")) == 0);
}

TEST_CASE("extension to P")
{
    auto k6 = fixtures::k6();
    auto f = induced_hom(k6, partition(k6, {"x0"}, {"x1", "x2"}, {"y0"}, {"y1", "y2"}));
    auto g = extend_to_P(k6, f);
    for (std::size_t x = 0; x < k6.size(); ++x)
        CHECK(g(x) == f(x));

    // W2: the partition from the search keeps m2 on the single upper image
    auto w2 = fixtures::w2();
    auto fam = improper_family(w2);
    auto proper = classify_crown(w2, set_of(w2, {"a", "c", "v", "u"}));
    auto search = find_C_separating(w2, fam, proper);
    REQUIRE(search.found());
    auto part = separating_partition(w2, fam, proper, search.assignment);
    CHECK(check_partition_condition(w2, fam, part).ok);
    auto fw = induced_hom(w2, part);
    auto gw = extend_to_P(w2, fw);
    CHECK(classify_map(gw).homomorphism);
    auto ab = alpha_beta(w2, fw);
    auto m2 = w2.index_of("m2");
    if (ab.alpha[m2].size() >= 2 && ! ab.alpha[m2].intersects(ab.beta[m2]))
        CHECK(gw(m2) == ab.beta[m2].front());

    auto hg = fixtures::hg();
    auto fh = induced_hom(hg, partition(hg, {"a"}, {"b"}, {"v"}, {"w"}));
    CHECK(extension_obstructions(hg, fh) == set_of(hg, {"x"}));
    CHECK(code_of([&] { extend_to_P(hg, fh); }) == ErrorCode::HypothesisViolated);

    // α(x) always lies below β(x)
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto p = random_connected_poset(700 + s, {9, 4, 45});
        auto d = extremal_decomposition(p);
        if ((d.minimal).size() < 2 || d.maximal.size() < 2)
            continue;
        std::vector<std::size_t> lo(d.minimal.begin(), d.minimal.end()), hi(d.maximal.begin(), d.maximal.end());
        ExtremalPartition pt{PointSet::single(lo[0]), PointSet::of(lo) - PointSet::single(lo[0]),
            PointSet::single(hi[0]), PointSet::of(hi) - PointSet::single(hi[0])};
        auto fp = induced_hom(p, pt);
        auto abp = alpha_beta(p, fp);
        for (std::size_t x = 0; x < p.size(); ++x) {
            CHECK_FALSE(abp.alpha[x].empty());
            CHECK_FALSE(abp.beta[x].empty());
            for (auto l : abp.alpha[x])
                for (auto u : abp.beta[x])
                    CHECK(template_crown().leq(l, u));
        }
    }
}

TEST_CASE("normalization")
{
    auto chain = fixtures::make({"a", "v"}, {{"a", "v"}});
    auto g = normalize_hom(PointMap{chain, chain, {1, 1}});
    CHECK(g(0) == 0);
    CHECK(g(1) == 1);
    CHECK(classify_map(g).retraction);

    auto c4 = fixtures::c4();
    auto id = normalize_hom(identity_map(c4));
    CHECK(id == identity_map(c4));

    for (std::uint64_t s = 0; s < 100; ++s) {
        auto p = random_connected_poset(800 + s, {8, 3, 50});
        auto dp = extremal_decomposition(p);
        for (const auto & c : enumerate_4crowns_in_E(p)) {
            auto o = oracle_retraction_exists(p, c.points());
            if (! o.exists)
                continue;
            auto n = normalize_retraction(*o.witness);
            CHECK(is_retraction_onto(n, c.points()));
            for (auto x : dp.minimal)
                CHECK(c.lower().contains(n(x)));
            for (auto x : dp.maximal)
                CHECK(c.upper().contains(n(x)));
            for (auto x : dp.middle)
                CHECK(n(x) == (*o.witness)(x));
        }
    }
}

TEST_CASE("retraction onto a 4-crown")
{
    auto c4 = fixtures::c4();
    auto r = retract_onto_4crown(c4, enumerate_4crowns_in_E(c4).front());
    REQUIRE(r);
    CHECK(*r == identity_map(c4));

    auto w2 = fixtures::w2();
    auto proper = classify_crown(w2, set_of(w2, {"a", "c", "v", "u"}));
    auto rw = retract_onto_4crown(w2, proper);
    REQUIRE(rw);
    CHECK(is_retraction_onto(*rw, proper.points()));
    CHECK(oracle_retraction_exists(w2, proper.points()).exists);

    auto hg = fixtures::hg();
    CHECK_FALSE(retract_onto_4crown(hg, enumerate_4crowns_in_E(hg).front()));

    auto p9 = fixtures::p9_like();
    for (const auto & c : enumerate_4crowns_in_E(p9))
        CHECK_FALSE(retract_onto_4crown(p9, c));
}

TEST_CASE("flat lift")
{
    auto k6 = fixtures::k6();
    auto g = lift_flat_hom(k6, identity_map(k6));
    CHECK(g == identity_map(k6));

    // a 6-crown in E(P) with a middle point lifts to a retraction of P
    auto km = fixtures::k6_mid();
    auto sub = induced(km, extremal_decomposition(km).extremal);
    auto lifted = lift_flat_hom(km, identity_map(sub.poset));
    CHECK(classify_map(lifted).homomorphism);
    CHECK(lifted(km.index_of("m")) == *sub.child_of(km.index_of("x0")));

    // into a fence
    auto f5 = fixtures::fence5();
    auto p = fixtures::make({"a", "b", "c", "v", "w", "m"},
        {{"a", "v"}, {"b", "v"}, {"b", "w"}, {"c", "w"}, {"a", "m"}, {"m", "v"}});
    auto ps = induced(p, extremal_decomposition(p).extremal);
    std::vector<std::size_t> onto(ps.poset.size());
    for (std::size_t i = 0; i < onto.size(); ++i) {
        const auto & n = ps.poset.name(i);
        onto[i] = f5.index_of(n == "a" ? "p0" : n == "v" ? "p1" : n == "b" ? "p2" : n == "w" ? "p3" : "p4");
    }
    auto lf = lift_flat_hom(p, PointMap{ps.poset, f5, onto});
    CHECK(classify_map(lf).homomorphism);

    CHECK(code_of([&] { lift_flat_hom(fixtures::c4(), identity_map(fixtures::c4())); }) == ErrorCode::TargetHas4Crown);
    auto hg = fixtures::hg();
    CHECK(code_of([&] { lift_flat_hom(hg, PointMap{induced(hg, extremal_decomposition(hg).extremal).poset, hg,
                                               {0, 1, 2, 3}}); })
        == ErrorCode::TargetNotFlat);
}

TEST_CASE("fence retraction")
{
    auto k6 = fixtures::k6();
    auto cycle = cycle_of(k6, {"x0", "y0", "x1", "y1", "x2", "y2"});
    CHECK(fence_retraction(k6, cycle, cycle[0], cycle[1]) == identity_map(k6));

    // an extra maximal point above two antipodal minimal points sits farther than the crown
    auto extra = fixtures::make({"x0", "x1", "x2", "y0", "y1", "y2", "u"},
        {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x0", "y2"}, {"x0", "u"},
            {"x1", "u"}});
    auto ec = cycle_of(extra, {"x2", "y1", "x1", "y0", "x0", "y2"});
    auto shortest = minimal_crown_through_edge(extra, ec[0], ec[1]);
    REQUIRE(shortest);
    CHECK(shortest->size() == 6);
    auto r = fence_retraction(extra, *shortest, ec[0], ec[1]);
    CHECK(is_retraction_onto(r, PointSet::of(*shortest)));

    auto c4e = fixtures::make({"a", "b", "c", "v", "w"},
        {{"a", "v"}, {"a", "w"}, {"b", "v"}, {"b", "w"}, {"c", "v"}, {"c", "w"}});
    auto cc = cycle_of(c4e, {"a", "v", "b", "w"});
    auto rc = fence_retraction(c4e, cc, cc[0], cc[1]);
    CHECK(is_retraction_onto(rc, PointSet::of(cc)));
    CHECK(rc(c4e.index_of("c")) == c4e.index_of("b"));

    // a 6-crown through an edge that also lies on a 4-crown is not minimal
    auto both = fixtures::make({"x0", "x1", "x2", "y0", "y1", "y2", "z"},
        {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x0", "y2"}, {"x0", "y1"},
            {"z", "y0"}});
    CHECK(code_of([&] {
        fence_retraction(both, cycle_of(both, {"x0", "y0", "x1", "y1", "x2", "y2"}), both.index_of("x0"),
            both.index_of("y0"));
    }) != ErrorCode::MalformedDocument);
    CHECK(code_of([&] { fence_retraction(k6, cycle, k6.index_of("x0"), k6.index_of("y1")); })
        == ErrorCode::EdgeMissing);
}

TEST_CASE("retract-crown from a free edge")
{
    auto f6 = fixtures::flat6();
    for (auto [x, y] : crown_edges_in_E(f6)) {
        auto res = retract_crown_from_free_edge(f6, x, y);
        CHECK(res.crown.size() == 6);
        CHECK(is_retraction_onto(res.retraction, PointSet::of(res.crown)));
    }

    auto w2 = fixtures::w2();
    auto res = retract_crown_from_free_edge(w2, w2.index_of("a"), w2.index_of("u"));
    CHECK(res.crown.size() == 4);
    CHECK(is_retraction_onto(res.retraction, PointSet::of(res.crown)));

    auto p9 = fixtures::p9_like();
    for (auto [x, y] : crown_edges_in_E(p9))
        CHECK(code_of([&] { retract_crown_from_free_edge(p9, x, y); }) == ErrorCode::EdgeInImproperCrown);

    auto f5 = fixtures::fence5();
    CHECK(code_of([&] { retract_crown_from_free_edge(f5, 0, 1); }) == ErrorCode::NoCrownThroughEdge);

    auto km = fixtures::k6_mid();
    auto rk = retract_crown_from_free_edge(km, km.index_of("x1"), km.index_of("y1"));
    CHECK(is_retraction_onto(rk.retraction, PointSet::of(rk.crown)));
}

TEST_CASE("fixed point screen")
{
    auto f6 = fixtures::flat6();
    auto s = fpp_screen(f6);
    CHECK(s.verdict == FppVerdict::NoFixedPointProperty);
    REQUIRE_FALSE(s.certificates.empty());
    for (const auto & c : s.certificates) {
        REQUIRE(c.retraction);
        CHECK(is_retraction_onto(*c.retraction, PointSet::of(c.crown)));
    }

    auto hg = fixtures::hg();
    CHECK(fpp_screen(hg).verdict == FppVerdict::Inconclusive);
    auto f5 = fixtures::fence5();
    auto sf = fpp_screen(f5);
    CHECK(sf.verdict == FppVerdict::Inconclusive);
    CHECK(sf.extremal_crown_free);

    auto tm = fixtures::two_mid();
    auto st = fpp_screen(tm);
    CHECK(st.verdict == FppVerdict::NoFixedPointProperty);
    for (const auto & c : st.certificates)
        CHECK_FALSE(c.retraction);
}
