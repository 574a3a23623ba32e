#include "../corpus.hpp"
#include "../oracle.hpp"
#include "helpers.hpp"
#include "polyss/polycomplex.hpp"

using namespace polyss;
using testing::m;

TEST_SUITE("polycomplex")
{
    const FieldSpec gf2 = FieldSpec::prime(2);
    const FieldSpec q = FieldSpec::rationals();

    TEST_CASE("multidegrees")
    {
        const MultiDegree x{1, 0, 2};
        CHECK(x.total() == 3);
        CHECK(x.partial_sum({1, 3}) == 3);
        CHECK(x.shifted(2) == MultiDegree{1, 1, 2});
        CHECK(!x.shifted(2, -1).is_nonnegative());
        CHECK(x.to_string() == "(1,0,2)");
        CHECK(MultiDegree{0, 2} < MultiDegree{1, 0});
    }

    TEST_CASE("shape checks")
    {
        Polycomplex v(q, 2);
        v.set_dim({0, 0}, 2);
        v.set_dim({1, 0}, 1);
        CHECK_ERROR_KIND(v.set_partial(1, {0, 0}, Matrix(q, 2, 2)), ErrorKind::shape);
        CHECK_ERROR_KIND(v.set_partial(3, {0, 0}, Matrix(q, 1, 2)), ErrorKind::shape);
        CHECK_ERROR_KIND(v.set_dim({0, 0, 0}, 1), ErrorKind::shape);
        v.set_partial(1, {0, 0}, m(q, {{1, 1}}));
        CHECK(v.partial(1, {0, 0}) == m(q, {{1, 1}}));
        CHECK(v.partial(2, {0, 0}).rows() == 0);
        v.set_dim({1, 0}, 0);
        CHECK(v.partials().empty());
    }

    TEST_CASE("1-complexes are always consistent with d^2 = 0")
    {
        Polycomplex v(q, 1);
        v.set_dim({0}, 1);
        v.set_dim({1}, 1);
        v.set_dim({2}, 1);
        v.set_partial(1, {0}, m(q, {{1}}));
        CHECK(!validate_polycomplex(v));
        v.set_partial(1, {1}, m(q, {{1}}));
        const auto bad = validate_polycomplex(v);
        REQUIRE(bad);
        CHECK(bad->i == 1);
        CHECK(bad->j == 1);
        CHECK(bad->x == MultiDegree{0});
        // k = 1: the total complex is the complex itself.
        Polycomplex w(q, 1);
        w.set_dim({0}, 2);
        w.set_dim({1}, 1);
        w.set_partial(1, {0}, m(q, {{1, 2}}));
        const auto t = totalize(w);
        CHECK(t.underlying.differential(0) == m(q, {{1, 2}}));
    }

    TEST_CASE("commuting squares over GF(2) are anticommuting")
    {
        Polycomplex v(gf2, 2);
        for (const MultiDegree& x : {MultiDegree{0, 0}, MultiDegree{1, 0}, MultiDegree{0, 1}, MultiDegree{1, 1}})
            v.set_dim(x, 1);
        v.set_partial(1, {0, 0}, m(gf2, {{1}}));
        v.set_partial(2, {0, 0}, m(gf2, {{1}}));
        v.set_partial(1, {0, 1}, m(gf2, {{1}}));
        v.set_partial(2, {1, 0}, m(gf2, {{1}}));
        CHECK(!validate_polycomplex(v));
        const auto w = anticommutify(v, 2, 1);
        CHECK(w.partials() == v.partials());
    }

    TEST_CASE("commuting squares over Q are caught and fixed by the sign twist")
    {
        Polycomplex v(q, 2);
        for (const MultiDegree& x : {MultiDegree{0, 0}, MultiDegree{1, 0}, MultiDegree{0, 1}, MultiDegree{1, 1}})
            v.set_dim(x, 1);
        v.set_partial(1, {0, 0}, m(q, {{1}}));
        v.set_partial(2, {0, 0}, m(q, {{1}}));
        v.set_partial(1, {0, 1}, m(q, {{1}}));
        v.set_partial(2, {1, 0}, m(q, {{1}}));
        const auto bad = validate_polycomplex(v);
        REQUIRE(bad);
        CHECK(bad->i == 1);
        CHECK(bad->j == 2);
        CHECK(bad->x == MultiDegree{0, 0});

        const auto w = anticommutify(v, 2, 1);
        CHECK(w.partial(2, {0, 0}) == m(q, {{1}}));
        CHECK(w.partial(2, {1, 0}) == m(q, {{-1}}));
        CHECK(w.partial(1, {0, 0}) == m(q, {{1}}));
        CHECK(!validate_polycomplex(w));
        // Direct check of the four identities.
        CHECK((w.partial(1, {1, 0}) * w.partial(1, {0, 0})).is_zero());
        CHECK((w.partial(2, {0, 1}) * w.partial(2, {0, 0})).is_zero());
        CHECK((w.partial(2, {1, 0}) * w.partial(1, {0, 0}) + w.partial(1, {0, 1}) * w.partial(2, {0, 0})).is_zero());

        Polycomplex zero(q, 2);
        zero.set_dim({0, 0}, 1);
        zero.set_dim({1, 1}, 1);
        CHECK(anticommutify(zero, 2, 1).cells() == zero.cells());

        // Anticommuting (non-commuting) input is rejected.
        CHECK_ERROR_KIND(anticommutify(w, 2, 1), ErrorKind::axiom);
    }

    TEST_CASE("the six tricomplex identities are exactly d^1 d^0 = 0")
    {
        Rng rng(4);
        for (int trial = 0; trial < 30; ++trial) {
            Polycomplex v(q, 3);
            const std::vector<MultiDegree> cells = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
                                                   {0, 2, 0},  {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
            for (const auto& x : cells)
                v.set_dim(x, 1);
            std::uniform_int_distribution<int> coin(0, 3);
            for (const auto& x : cells)
                for (std::size_t i = 1; i <= 3; ++i)
                    if (x.total() < 2 && coin(rng) > 0)
                        v.set_partial(i, x, Matrix::from_ints(q, {{coin(rng) - 1}}, 1));
            const auto t = totalize(v);
            const bool composite_zero = (t.underlying.differential(1) * t.underlying.differential(0)).is_zero();
            CHECK(composite_zero == !validate_polycomplex(v));
        }
    }

    TEST_CASE("tricomplex total complex")
    {
        Polycomplex v(q, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    v.set_dim({a, b, c}, 1);
        const auto t = totalize(v);
        CHECK(t.summand_order[0] == std::vector<MultiDegree>{{0, 0, 0}});
        CHECK(t.summand_order[1] == std::vector<MultiDegree>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
        CHECK(t.summand_order[2].size() == 6);
        CHECK(t.underlying.dim(2) == 6);
        CHECK(t.underlying.differential(0).rows() == 3);
        const auto desc = totalize(v, SummandOrder::descending_lex);
        CHECK(desc.summand_order[1] == std::vector<MultiDegree>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    }

    TEST_CASE("slices")
    {
        Polycomplex v(gf2, 3);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    v.set_dim({a, b, c}, 1);
        for (const auto& [x, d] : v.cells())
            for (std::size_t i = 1; i <= 3; ++i)
                if (v.dim(x.shifted(i)))
                    v.set_partial(i, x, m(gf2, {{1}}));
        REQUIRE(!validate_polycomplex(v));

        const auto s = slice(v, {1}, 0);
        CHECK(s.cells().size() == 4);
        for (const auto& [x, d] : s.cells())
            CHECK(x[0] == 0);
        for (const auto& [key, mat] : s.partials())
            CHECK(key.first != 1);
        CHECK(s.partial(2, {0, 0, 0}) == m(gf2, {{1}}));
        CHECK(s.degree_shift() == 0);

        const auto s12 = slice(v, {1, 2}, 1);
        std::set<MultiDegree> cells;
        for (const auto& [x, d] : s12.cells())
            cells.insert(x);
        CHECK(cells == std::set<MultiDegree>{{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}});
        for (const auto& [key, mat] : s12.partials())
            CHECK(key.first == 3);
        CHECK(s12.degree_shift() == 1);
        CHECK(totalize(s12).underlying.dim(0) == 2);

        const auto empty = slice(v, {1}, 7);
        CHECK(empty.cells().empty());
        CHECK(totalize(empty).underlying.top_degree() == -1);

        CHECK_ERROR_KIND(slice(v, {}, 0), ErrorKind::invalid_subset);
        CHECK_ERROR_KIND(slice(v, {1, 2, 3}, 0), ErrorKind::invalid_subset);
        CHECK_ERROR_KIND(slice(v, {4}, 0), ErrorKind::invalid_subset);
        CHECK_ERROR_KIND(slice(v, {1, 1}, 0), ErrorKind::invalid_subset);
    }

    TEST_CASE("property: random polycomplexes validate and totalize to complexes")
    {
        Rng rng(12);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (const FieldSpec& f : {gf2, FieldSpec::prime(3), q}) {
                PolycomplexShape shape;
                shape.k = k;
                shape.extent = k <= 2 ? 4 : 3 - static_cast<int>(k > 3);
                shape.generic = k % 2 == 0;
                DirectSumShape sum_shape;
                sum_shape.k = k;
                sum_shape.extent = shape.extent;
                for (int trial = 0; trial < 4; ++trial) {
                    for (const auto& v : {random_polycomplex(f, shape, rng), random_direct_sum_polycomplex(f, sum_shape, rng)}) {
                        REQUIRE(!validate_polycomplex(v));
                        const auto t = totalize(v);
                        CHECK(!validate_complex(t.underlying));
                        for (int n = 0; n <= t.underlying.top_degree(); ++n) {
                            std::size_t total = 0;
                            for (const auto& [x, d] : v.cells())
                                if (x.total() == n)
                                    total += d;
                            CHECK(t.underlying.dim(n) == total);
                        }
                        // Reordering summands conjugates by permutations: same cohomology.
                        const auto h1 = cohomology(t.underlying);
                        const auto h2 = cohomology(totalize(v, SummandOrder::descending_lex).underlying);
                        for (int n = 0; n <= t.underlying.top_degree(); ++n)
                            CHECK(h1.dim(n) == h2.dim(n));
                        if (f.is_prime()) {
                            const auto expected = oracle::cohomology_dims(oracle::total(v));
                            REQUIRE(expected.size() == t.underlying.dims().size());
                            for (std::size_t n = 0; n < expected.size(); ++n)
                                CHECK(h1.dim(static_cast<int>(n)) == expected[n]);
                        }
                    }
                }
            }
        }
    }
}
