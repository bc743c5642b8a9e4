#pragma once

#include <crownlab/crowns.hpp>
#include <crownlab/poset.hpp>
#include <crownlab/separating.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crownlab
{
    /// The abstract 4-crown with points a, b (below) and v, w (above), in that order.
    auto template_crown() -> const Poset &;

    /// A ∪ B = L(P) and V ∪ W = U(P), all four non-empty, unions disjoint.
    struct ExtremalPartition
    {
        PointSet a, b, v, w;
    };

    struct PartitionVerdict
    {
        bool ok = true;
        /// Index into the family of a member meeting all four classes.
        std::optional<std::size_t> violator;
    };

    /// True iff no improper crown of the family meets all four classes.
    /// Throws InvalidPartition if `part` does not partition L(P) and U(P).
    auto check_partition_condition(const Poset & poset, const CrownFamily & family, const ExtremalPartition & part)
        -> PartitionVerdict;

    /// f : E(P) → template crown sending A, B, V, W to a, b, v, w. The source is
    /// induced(P, E(P)).poset.
    auto induced_hom(const Poset & poset, const ExtremalPartition & part) -> PointMap;

    /// α(x) = f[L(P) ∩ ↓x] and β(x) = f[U(P) ∩ ↑x], in target indices, for every
    /// point of P. `f` is defined on induced(P, E(P)).
    struct AlphaBeta
    {
        std::vector<PointSet> alpha;
        std::vector<PointSet> beta;
    };

    auto alpha_beta(const Poset & poset, const PointMap & f) -> AlphaBeta;

    /// The points x violating the extension hypothesis: α(x) ∩ β(x) = ∅ with
    /// both α(x) and β(x) of size at least two.
    auto extension_obstructions(const Poset & poset, const PointMap & f) -> PointSet;

    /// Extends a homomorphism f : E(P) → Q (Q flat) to all of P. On M(P):
    /// the single element of β(x) if #α(x) ≥ 2, of α(x) if #β(x) ≥ 2, else of β(x).
    /// Throws NotAHomomorphism, TargetNotFlat, TargetMismatch or HypothesisViolated.
    auto extend_to_P(const Poset & poset, const PointMap & f) -> PointMap;

    /// Pushes images of minimal (maximal) points down (up) to minimal (maximal)
    /// points of the target, leaving M(P) untouched. Least-index choices.
    auto normalize_hom(const PointMap & f) -> PointMap;

    /// normalize_hom applied to a self-retraction read as a map onto its image;
    /// the result is again a self-retraction with the same image.
    auto normalize_retraction(const PointMap & retraction) -> PointMap;

    /// Completes the classes of a C-separating assignment to a partition that
    /// sends C bijectively onto the template crown (a and b swapped, v and w
    /// swapped). Leftover minimal points join a's class, leftover maximal points v's.
    auto separating_partition(const Poset & poset, const CrownFamily & family, const FourCrown & crown,
        const CrownAssignment & phi) -> ExtremalPartition;

    /// An explicit retraction of P onto the 4-crown C ⊆ E(P), or nullopt if none
    /// exists. Throws CrownNotInE.
    auto retract_onto_4crown(const Poset & poset, const FourCrown & crown) -> std::optional<PointMap>;
    auto retract_onto_4crown(const Poset & poset, const CrownFamily & family, const FourCrown & crown)
        -> std::optional<PointMap>;

    /// Extends f : E(P) → Q to P when Q is flat and contains no 4-crown.
    /// Throws TargetNotFlat or TargetHas4Crown.
    auto lift_flat_hom(const Poset & poset, const PointMap & f) -> PointMap;

    /// Retraction of a connected flat poset onto a shortest crown through the
    /// edge x < y, built from fence distances with that edge removed.
    /// `crown` lists the cycle starting x, y. Throws EdgeMissing,
    /// MinimalityViolated, NotACrown, NotFlat or NotConnected.
    auto fence_retraction(const Poset & flat, const std::vector<std::size_t> & crown, std::size_t x, std::size_t y)
        -> PointMap;

    struct CrownRetraction
    {
        /// The crown as a cycle in P's indices, starting x, y.
        std::vector<std::size_t> crown;
        PointMap retraction;
    };

    /// For an edge x < y of E(P) lying on a crown of E(P) and in no improper
    /// 4-crown: a retraction of P onto a shortest such crown.
    /// Throws NotAnEdge, EdgeInImproperCrown or NoCrownThroughEdge.
    auto retract_crown_from_free_edge(const Poset & poset, std::size_t x, std::size_t y) -> CrownRetraction;

    /// Edges x < y of E(P) that lie on some crown of E(P).
    auto crown_edges_in_E(const Poset & poset) -> std::vector<Generator>;

    enum class FppVerdict
    {
        NoFixedPointProperty,
        Inconclusive
    };

    auto to_string(FppVerdict verdict) -> std::string;

    struct FppCertificate
    {
        Generator edge;
        std::string reason;
        /// The crown the certificate is about (cycle order for retract-crowns).
        std::vector<std::size_t> crown;
        std::optional<PointMap> retraction;
    };

    struct FppScreen
    {
        FppVerdict verdict = FppVerdict::Inconclusive;
        std::vector<FppCertificate> certificates;
        std::vector<Generator> crown_edges;
        bool extremal_crown_free = false;
    };

    /// Reports failures of the necessary conditions for the fixed point property
    /// visible from crowns in E(P); never claims the property holds.
    auto fpp_screen(const Poset & poset) -> FppScreen;

    struct DismantleStep
    {
        std::size_t removed;
        std::size_t absorbed_by;
        /// Carrier after the step.
        PointSet carrier;
    };

    struct DismantleTrace
    {
        std::vector<DismantleStep> steps;
        PointSet terminal;

        auto reached_singleton() const -> bool { return terminal.size() == 1; }
    };

    /// x is irreducible in the sub-poset on `carrier`: returns the unique maximal
    /// point of ↓x∖{x} or else the unique minimal point of ↑x∖{x}.
    auto irreducible_target(const Poset & poset, PointSet carrier, std::size_t x) -> std::optional<std::size_t>;

    /// Greedy I-retractions, least index first, until no irreducible point remains.
    auto i_dismantle(const Poset & poset) -> DismantleTrace;

    /// Re-checks one step: the one-point map is a retraction of the sub-poset
    /// on `before` with image of size |before| − 1.
    auto is_valid_i_retraction(const Poset & poset, PointSet before, const DismantleStep & step) -> bool;
}
