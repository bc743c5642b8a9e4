#include <crownlab/error.hpp>
#include <crownlab/generators.hpp>
#include <crownlab/separating.hpp>

#include <doctest.h>
#include <fixtures.hpp>

using namespace crownlab;

namespace
{
    auto crown_named(const Poset & p, std::initializer_list<const char *> names) -> FourCrown
    {
        PointSet s;
        for (auto n : names)
            s.insert(p.index_of(n));
        return classify_crown(p, s);
    }

    /// Decides C-separation by trying every assignment into the given values.
    auto brute_force(const Poset & p, const CrownFamily & fam, const FourCrown & c, bool three_point) -> bool
    {
        std::vector<CVertex> values;
        for (auto s : all_cvertices())
            if (! three_point || s.size() == 3)
                values.push_back(s);
        CrownAssignment phi(fam.size(), values[0]);
        std::vector<std::size_t> digit(fam.size(), 0);
        while (true) {
            for (std::size_t f = 0; f < fam.size(); ++f)
                phi[f] = values[digit[f]];
            if (verify_separating(p, fam, phi, anchored_witness(c)).ok)
                return true;
            std::size_t i = 0;
            while (i < digit.size() && ++digit[i] == values.size())
                digit[i++] = 0;
            if (i == digit.size())
                return false;
        }
    }
}

TEST_CASE("verify_separating")
{
    auto c4 = fixtures::c4();
    auto crown = enumerate_4crowns_in_E(c4).front();
    CHECK(verify_separating(c4, improper_family(c4), {}, anchored_witness(crown)).ok);

    auto hg = fixtures::hg();
    auto fam = improper_family(hg);
    auto hc = fam.crowns.front();
    for (auto s : all_cvertices())
        CHECK_FALSE(verify_separating(hg, fam, {s}, anchored_witness(hc)).ok);

    // W2 with the proper crown a, c | v, u as witness: the crown through a goes to abw, the one through c to avw
    auto w2 = fixtures::w2();
    auto wf = improper_family(w2);
    auto proper = crown_named(w2, {"a", "c", "v", "u"});
    CrownAssignment phi;
    for (const auto & f : wf.crowns)
        phi.push_back(f.points().contains(w2.index_of("a")) ? cv::abw : cv::avw);
    auto verdict = verify_separating(w2, wf, phi, anchored_witness(proper));
    CHECK(verdict.ok);
    CHECK(verdict.violation.empty());
    phi.back() = cv::abv;
    CHECK_FALSE(verify_separating(w2, wf, phi, anchored_witness(proper)).ok);
}

TEST_CASE("find_C_separating on fixtures")
{
    auto c4 = fixtures::c4();
    auto r = find_C_separating(c4, improper_family(c4), enumerate_4crowns_in_E(c4).front());
    CHECK(r.found());
    CHECK(r.assignment.empty());

    auto w2 = fixtures::w2();
    auto wf = improper_family(w2);
    for (const auto & c : enumerate_4crowns_in_E(w2)) {
        auto res = find_C_separating(w2, wf, c);
        if (c.improper()) {
            CHECK(res.status == SearchStatus::CrownImproper);
            continue;
        }
        REQUIRE(res.found());
        CHECK(verify_separating(w2, wf, res.assignment, anchored_witness(c)).ok);
        for (auto s : res.assignment)
            CHECK(s.size() == 3);
    }

    auto p9 = fixtures::p9_like();
    auto pf = improper_family(p9);
    auto p9crown = crown_named(p9, {"a", "b", "v", "w"});
    CHECK(p9crown.kind == CrownKind::Proper);
    CHECK(find_C_separating(p9, pf, p9crown).status == SearchStatus::NotFound);
    CHECK(find_C_separating(p9, pf, p9crown, {SearchDomain::Full, false}).status == SearchStatus::NotFound);

    auto hg = fixtures::hg();
    CHECK(find_C_separating(hg, improper_family(hg), enumerate_4crowns_in_E(hg).front()).status
        == SearchStatus::CrownImproper);

    // a crown whose lower point x is not minimal
    auto q = fixtures::make({"p", "x", "b", "v", "w"}, {{"p", "x"}, {"x", "v"}, {"x", "w"}, {"b", "v"}, {"b", "w"}});
    try {
        find_C_separating(q, improper_family(q), crown_named(q, {"x", "b", "v", "w"}));
        FAIL("expected CrownNotInE");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::CrownNotInE);
    }
}

TEST_CASE("find_separating")
{
    auto f6 = fixtures::flat6();
    CHECK(find_separating(f6, improper_family(f6)).found());
    auto hg = fixtures::hg();
    CHECK_FALSE(find_separating(hg, improper_family(hg)).found());
    auto w2 = fixtures::w2();
    auto res = find_separating(w2, improper_family(w2));
    REQUIRE(res.found());
    REQUIRE(res.witness);
    CHECK(verify_separating(w2, improper_family(w2), res.assignment, *res.witness).ok);

    auto chain = fixtures::chain3();
    try {
        find_separating(chain, improper_family(chain));
        FAIL("expected TooFewExtremalPoints");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::TooFewExtremalPoints);
    }
}

TEST_CASE("fast paths")
{
    auto c4 = fixtures::c4();
    auto fast = clique_fast_paths(c4, improper_family(c4), enumerate_4crowns_in_E(c4).front());
    REQUIRE(fast);
    CHECK(fast->found());
    CHECK(fast->stats.fast_path == "constant");

    auto p9 = fixtures::p9_like();
    auto pf = improper_family(p9);
    auto pc = clique_fast_paths(p9, pf, crown_named(p9, {"a", "b", "v", "w"}));
    REQUIRE(pc);
    CHECK(pc->status == SearchStatus::NotFound);
    CHECK(pc->stats.fast_path == "clique");

    // W2 has a complete multigraph on two crowns
    auto w2 = fixtures::w2();
    auto wf = improper_family(w2);
    CHECK(build_F_graph(w2, wf).complete);
    std::size_t clique_found = 0;
    for (const auto & c : enumerate_4crowns_in_E(w2)) {
        auto d = clique_fast_paths(w2, wf, c);
        REQUIRE(d);
        if (d->found()) {
            CHECK(verify_separating(w2, wf, d->assignment, anchored_witness(c)).ok);
            clique_found += d->stats.fast_path == "clique";
        }
        CHECK(d->status == find_C_separating(w2, wf, c).status);
    }
    CHECK(clique_found > 0);
}

TEST_CASE("search agrees with brute force and across domains")
{
    std::size_t compared = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        auto p = random_connected_poset(600 + s, {6 + s % 7, 3, 60});
        auto fam = improper_family(p);
        if (fam.size() > 5)
            continue;
        for (const auto & c : enumerate_4crowns_in_E(p)) {
            if (c.improper())
                continue;
            ++compared;
            bool full = brute_force(p, fam, c, false);
            bool three = brute_force(p, fam, c, true);
            CHECK(full == three);
            auto pinned = find_C_separating(p, fam, c);
            auto unpinned = find_C_separating(p, fam, c, {SearchDomain::ThreePoint, false});
            auto wide = find_C_separating(p, fam, c, {SearchDomain::Full, false});
            CHECK(pinned.found() == full);
            CHECK(unpinned.found() == full);
            CHECK(wide.found() == full);
            for (const auto * r : {&pinned, &unpinned, &wide})
                if (r->found()) {
                    CHECK(verify_separating(p, fam, r->assignment, anchored_witness(c)).ok);
                    CHECK(check_separating_invariants(p, fam, c, r->assignment).empty());
                }
            if (pinned.found()) {
                auto [psi, wit] = pinned_normal_form(pinned.assignment, c);
                CHECK(verify_separating(p, fam, psi, wit).ok);
                for (auto sv : three_point_cvertices()) {
                    PointSet pts;
                    if (sv.has(Role::A))
                        pts.insert(c.lo[0]);
                    if (sv.has(Role::B))
                        pts.insert(c.lo[1]);
                    if (sv.has(Role::V))
                        pts.insert(c.hi[0]);
                    if (sv.has(Role::W))
                        pts.insert(c.hi[1]);
                    for (std::size_t f = 0; f < fam.size(); ++f)
                        if (pts.subset_of(fam.crowns[f].points()))
                            CHECK(psi[f] == sv);
                }
            }
        }
    }
    CHECK(compared > 50);
}
