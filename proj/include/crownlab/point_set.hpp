#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace crownlab
{
    /// Maximum number of points a Poset may carry. Every subset of a carrier
    /// is one machine word.
    inline constexpr std::size_t max_points = 64;

    /// A subset of a poset carrier, addressed by dense point index.
    class PointSet
    {
        std::uint64_t _bits = 0;

    public:
        class iterator
        {
            std::uint64_t _rest = 0;

        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = std::size_t;
            using difference_type = std::ptrdiff_t;
            using pointer = void;
            using reference = std::size_t;

            constexpr iterator() = default;
            constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

            constexpr auto operator*() const -> std::size_t { return static_cast<std::size_t>(std::countr_zero(_rest)); }

            constexpr auto operator++() -> iterator &
            {
                _rest &= _rest - 1;
                return *this;
            }

            constexpr auto operator++(int) -> iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }

            constexpr auto operator==(const iterator &) const -> bool = default;
        };

        constexpr PointSet() = default;
        constexpr explicit PointSet(std::uint64_t bits) : _bits(bits) {}

        static constexpr auto single(std::size_t i) -> PointSet { return PointSet{std::uint64_t{1} << i}; }

        static constexpr auto first(std::size_t n) -> PointSet
        {
            return PointSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        }

        template <typename Range>
        static constexpr auto of(const Range & indices) -> PointSet
        {
            PointSet s;
            for (auto i : indices)
                s.insert(static_cast<std::size_t>(i));
            return s;
        }

        static constexpr auto of(std::initializer_list<std::size_t> indices) -> PointSet
        {
            PointSet s;
            for (auto i : indices)
                s.insert(i);
            return s;
        }

        constexpr auto bits() const -> std::uint64_t { return _bits; }
        constexpr auto contains(std::size_t i) const -> bool { return (_bits >> i) & 1u; }
        constexpr auto insert(std::size_t i) -> void { _bits |= std::uint64_t{1} << i; }
        constexpr auto erase(std::size_t i) -> void { _bits &= ~(std::uint64_t{1} << i); }
        constexpr auto size() const -> std::size_t { return static_cast<std::size_t>(std::popcount(_bits)); }
        constexpr auto empty() const -> bool { return _bits == 0; }

        /// Least index in the set; undefined on the empty set.
        constexpr auto front() const -> std::size_t { return static_cast<std::size_t>(std::countr_zero(_bits)); }

        constexpr auto subset_of(PointSet other) const -> bool { return (_bits & ~other._bits) == 0; }
        constexpr auto intersects(PointSet other) const -> bool { return (_bits & other._bits) != 0; }

        constexpr auto begin() const -> iterator { return iterator{_bits}; }
        constexpr auto end() const -> iterator { return iterator{0}; }

        constexpr auto operator|=(PointSet o) -> PointSet &
        {
            _bits |= o._bits;
            return *this;
        }

        constexpr auto operator&=(PointSet o) -> PointSet &
        {
            _bits &= o._bits;
            return *this;
        }

        constexpr auto operator-=(PointSet o) -> PointSet &
        {
            _bits &= ~o._bits;
            return *this;
        }

        friend constexpr auto operator|(PointSet a, PointSet b) -> PointSet { return PointSet{a._bits | b._bits}; }
        friend constexpr auto operator&(PointSet a, PointSet b) -> PointSet { return PointSet{a._bits & b._bits}; }
        friend constexpr auto operator-(PointSet a, PointSet b) -> PointSet { return PointSet{a._bits & ~b._bits}; }
        friend constexpr auto operator==(PointSet a, PointSet b) -> bool = default;
        friend constexpr auto operator<=>(PointSet a, PointSet b) = default;
    };
}
