#pragma once

#include <crownlab/crowns.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace crownlab
{
    /// Roles of the template 4-crown: a, b below; v, w above.
    enum class Role : std::uint8_t
    {
        A = 0,
        B = 1,
        V = 2,
        W = 3
    };

    /// A connected 2- or 3-point sub-poset of the template crown, stored as a
    /// 4-bit role mask (bit 0 = a, 1 = b, 2 = v, 3 = w).
    class CVertex
    {
        std::uint8_t _mask = 0;

    public:
        constexpr CVertex() = default;
        constexpr explicit CVertex(std::uint8_t mask) : _mask(mask) {}

        constexpr auto mask() const -> std::uint8_t { return _mask; }
        constexpr auto has(Role r) const -> bool { return (_mask >> static_cast<int>(r)) & 1u; }
        constexpr auto size() const -> int { return __builtin_popcount(_mask); }
        constexpr auto lower() const -> std::uint8_t { return _mask & 0b0011; }
        constexpr auto upper() const -> std::uint8_t { return _mask & 0b1100; }

        /// Dense index 0..7 in the canonical order av, aw, bv, bw, abv, abw, avw, bvw.
        auto index() const -> std::size_t;
        auto label() const -> std::string;

        friend constexpr auto operator==(CVertex, CVertex) -> bool = default;
    };

    namespace cv
    {
        inline constexpr CVertex av{0b0101}, aw{0b1001}, bv{0b0110}, bw{0b1010};
        inline constexpr CVertex abv{0b0111}, abw{0b1011}, avw{0b1101}, bvw{0b1110};
    }

    /// All eight vertices in canonical order.
    auto all_cvertices() -> const std::array<CVertex, 8> &;
    /// The four 3-point vertices in search value order: abv, abw, avw, bvw.
    auto three_point_cvertices() -> const std::array<CVertex, 4> &;

    auto l_edge(CVertex s, CVertex t) -> bool;
    auto u_edge(CVertex s, CVertex t) -> bool;

    struct CMultigraph
    {
        std::array<CVertex, 8> vertices;
        std::array<std::array<bool, 8>, 8> l_edges;
        std::array<std::array<bool, 8>, 8> u_edges;
    };

    auto build_C_graph() -> CMultigraph;

    enum class VertexClass : std::uint8_t
    {
        A,
        B,
        V,
        W
    };

    /// Membership in 𝒜 = {S : L(C) ∩ S = {a}} and the dual classes.
    auto in_class(CVertex s, VertexClass k) -> bool;

    struct VertexClassRow
    {
        CVertex vertex;
        bool in_A, in_B, in_V, in_W;
    };

    auto classify_vertices() -> std::array<VertexClassRow, 8>;

    /// The retraction of ℭ onto its 3-point vertices used to shrink the search
    /// domain: av ↦ avw, bw ↦ bvw, aw ↦ abw, bv ↦ abv, 3-point vertices fixed.
    auto theta(CVertex s) -> CVertex;

    /// A vertex permutation of ℭ, indexed by CVertex::index().
    using CPermutation = std::array<CVertex, 8>;

    /// Every permutation of the 8 vertices preserving both edge relations,
    /// found by exhaustive enumeration. Identity first.
    auto c_automorphisms() -> const std::vector<CPermutation> &;

    /// The automorphism induced by exchanging a with b and/or v with w.
    auto role_swap(CVertex s, bool swap_lower, bool swap_upper) -> CVertex;

    struct DeltaMap
    {
        /// S, T, and the 2-point subsets of S or T.
        std::vector<CVertex> domain;
        /// Images of all eight vertices; identity off the two collapsed vertices.
        std::array<CVertex, 8> image;

        auto operator()(CVertex s) const -> CVertex { return image[s.index()]; }
    };

    /// Collapse onto the clique {S, T, S ∩ T} for a 3-point two-clique {S, T}.
    /// Throws NotATwoClique.
    auto delta(CVertex s, CVertex t) -> DeltaMap;

    /// An edge of 𝔽(P) with the shared point that witnesses it.
    struct FEdge
    {
        std::size_t first;
        std::size_t second;
        std::size_t witness;
    };

    struct FMultigraph
    {
        std::size_t vertex_count = 0;
        /// Symmetric adjacency with loops; witness is the least shared point index.
        std::vector<std::vector<bool>> l_adj, u_adj;
        std::vector<FEdge> l_edges, u_edges;
        /// Every two distinct vertices joined by both an L- and a U-edge.
        bool complete = false;

        auto l_edge(std::size_t f, std::size_t g) const -> bool { return l_adj[f][g]; }
        auto u_edge(std::size_t f, std::size_t g) const -> bool { return u_adj[f][g]; }
        auto degree(std::size_t f) const -> std::size_t;
    };

    auto build_F_graph(const Poset & poset, const CrownFamily & family) -> FMultigraph;

    /// Re-derives both adjacency relations from the stored witnesses alone.
    auto rebuild_from_witnesses(const FMultigraph & graph) -> FMultigraph;
}
