#pragma once

// Seeded random instances shared by the unit and acceptance tests.

#include <vector>

#include "polyss/generate.hpp"

namespace corpus {

inline std::vector<polyss::Polycomplex> polycomplexes(std::size_t count, std::size_t k, int extent, std::uint64_t seed,
                                                      std::uint64_t p = 2, std::size_t max_cell_dim = 2)
{
    polyss::Rng rng(seed);
    polyss::PolycomplexShape shape;
    shape.k = k;
    shape.extent = extent;
    shape.max_cell_dim = max_cell_dim;
    std::vector<polyss::Polycomplex> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(polyss::random_polycomplex(polyss::FieldSpec::prime(p), shape, rng));
    return out;
}

/// Direct sums of cubes, zigzags and dots under a random change of basis.
inline std::vector<polyss::Polycomplex> direct_sums(std::size_t count, std::size_t k, int extent, std::uint64_t seed,
                                                    std::uint64_t p = 2)
{
    polyss::Rng rng(seed);
    polyss::DirectSumShape shape;
    shape.k = k;
    shape.extent = extent;
    std::vector<polyss::Polycomplex> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(polyss::random_direct_sum_polycomplex(polyss::FieldSpec::prime(p), shape, rng));
    return out;
}

// The GF(2) acceptance corpus.
inline std::vector<polyss::Polycomplex> bicomplexes() { return direct_sums(50, 2, 5, 0xb1c0); }
inline std::vector<polyss::Polycomplex> tricomplexes() { return direct_sums(20, 3, 3, 0x7e1c); }
inline std::vector<polyss::Polycomplex> four_complexes() { return direct_sums(5, 4, 2, 0x4c0f); }

} // namespace corpus
