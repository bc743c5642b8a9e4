#include <crownlab/retraction.hpp>

namespace crownlab
{
    auto irreducible_target(const Poset & poset, PointSet carrier, std::size_t x) -> std::optional<std::size_t>
    {
        if (! carrier.contains(x))
            return std::nullopt;
        auto below = poset.maximal_in(poset.strict_down_set(x) & carrier);
        if (below.size() == 1)
            return below.front();
        auto above = poset.minimal_in(poset.strict_up_set(x) & carrier);
        if (above.size() == 1)
            return above.front();
        return std::nullopt;
    }

    auto i_dismantle(const Poset & poset) -> DismantleTrace
    {
        DismantleTrace trace;
        auto carrier = poset.all();
        bool progress = true;
        while (progress && carrier.size() > 1) {
            progress = false;
            for (auto x : carrier)
                if (auto t = irreducible_target(poset, carrier, x)) {
                    carrier.erase(x);
                    trace.steps.push_back(DismantleStep{x, *t, carrier});
                    progress = true;
                    break;
                }
        }
        trace.terminal = carrier;
        return trace;
    }

    auto is_valid_i_retraction(const Poset & poset, PointSet before, const DismantleStep & step) -> bool
    {
        if (! before.contains(step.removed) || ! before.contains(step.absorbed_by) || step.removed == step.absorbed_by)
            return false;
        if (step.carrier != before - PointSet::single(step.removed))
            return false;

        // the one-point map x ↦ target, identity elsewhere, must preserve order on `before`
        auto sub = induced(poset, before);
        std::vector<std::size_t> image(sub.poset.size());
        for (std::size_t i = 0; i < image.size(); ++i)
            image[i] = sub.parent[i] == step.removed ? *sub.child_of(step.absorbed_by) : i;
        PointMap r{sub.poset, sub.poset, std::move(image)};
        auto v = classify_map(r, PointSet{});
        return v.retraction && r.image_set().size() + 1 == before.size();
    }
}
