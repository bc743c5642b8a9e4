#pragma once

#include <crownlab/crown_graphs.hpp>
#include <crownlab/crowns.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crownlab
{
    /// Points x ≠ x' of L(P) and y ≠ y' of U(P) against which a homomorphism
    /// 𝔽(P) → ℭ is separating.
    struct SeparationWitness
    {
        std::size_t x, x_prime, y, y_prime;

        friend auto operator==(const SeparationWitness &, const SeparationWitness &) -> bool = default;
    };

    /// The witness anchored at a crown: (a, b, v, w) = (lo[0], lo[1], hi[0], hi[1]).
    auto anchored_witness(const FourCrown & crown) -> SeparationWitness;

    /// φ : ℱ(P) → ℭ, indexed like CrownFamily::crowns.
    using CrownAssignment = std::vector<CVertex>;

    enum class SearchStatus
    {
        Found,
        NotFound,
        CrownImproper
    };

    auto to_string(SearchStatus status) -> std::string;

    struct SearchStats
    {
        std::size_t nodes = 0;
        /// Empty when the general search ran; otherwise names the shortcut used.
        std::string fast_path;
    };

    struct SearchResult
    {
        SearchStatus status = SearchStatus::NotFound;
        CrownAssignment assignment;
        std::optional<SeparationWitness> witness;
        SearchStats stats;

        auto found() const -> bool { return status == SearchStatus::Found; }
    };

    struct SeparationVerdict
    {
        bool ok = true;
        std::string violation;
    };

    auto is_multigraph_homomorphism(const FMultigraph & graph, const CrownAssignment & phi) -> bool;

    /// Homomorphism 𝔽(P) → ℭ plus the four avoidance implications for `witness`.
    auto verify_separating(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi,
        const SeparationWitness & witness) -> SeparationVerdict;

    /// Points sent into each vertex class: A0 = {x ∈ L(P) : x ∈ F, φ(F) ∈ 𝒜 for some F}, etc.
    struct SeparationClasses
    {
        PointSet a0, b0, v0, w0;
    };

    auto separation_classes(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi)
        -> SeparationClasses;

    /// Some witness with x ∉ A0, x' ∉ B0, y ∉ V0, y' ∉ W0, if one exists (least indices first).
    auto acceptance_witness(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi)
        -> std::optional<SeparationWitness>;

    enum class SearchDomain
    {
        ThreePoint,
        Full
    };

    struct CSearchOptions
    {
        SearchDomain domain = SearchDomain::ThreePoint;
        /// Fix every F ⊇ S (S a 3-point vertex read in C) in advance.
        bool pin = true;
    };

    /// Decides whether a C-separating homomorphism exists, for the witness
    /// (a, b, v, w) read off `crown`. Throws CrownNotInE; improper crowns yield
    /// SearchStatus::CrownImproper.
    auto find_C_separating(const Poset & poset, const CrownFamily & family, const FourCrown & crown,
        CSearchOptions options = {}) -> SearchResult;

    /// Decides whether any separating homomorphism exists (onto-C criterion).
    /// Throws TooFewExtremalPoints unless |L(P)|, |U(P)| ≥ 2.
    auto find_separating(const Poset & poset, const CrownFamily & family, SearchDomain domain = SearchDomain::Full)
        -> SearchResult;

    /// The constant-map and complete-𝔽(P) shortcuts. nullopt when neither applies.
    auto clique_fast_paths(const Poset & poset, const CrownFamily & family, const FourCrown & crown)
        -> std::optional<SearchResult>;

    /// Rewrites a C-separating assignment for witness (a,b,v,w) into the form
    /// ψ(F) = S for all F ⊇ S, separating for the witness (b,a,w,v).
    auto pinned_normal_form(const CrownAssignment & phi, const FourCrown & crown)
        -> std::pair<CrownAssignment, SeparationWitness>;

    /// Structural facts every C-separating assignment satisfies; returns
    /// human-readable violations (empty when all hold).
    auto check_separating_invariants(const Poset & poset, const CrownFamily & family, const FourCrown & crown,
        const CrownAssignment & phi) -> std::vector<std::string>;
}
