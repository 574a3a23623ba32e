#include "../oracle.hpp"
#include "helpers.hpp"
#include "polyss/cochain.hpp"
#include "polyss/generate.hpp"

using namespace polyss;
using testing::m;

namespace {

/// The mapping cone of f : A -> B shifted so it starts in degree 0; d(a, b) = (-d a, f a + d b).
CochainComplex cone(const CochainMap& f)
{
    const auto& a = f.source();
    const auto& b = f.target();
    const FieldSpec& field = a.field();
    const int top = std::max(a.top_degree() + 1, b.top_degree());
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int n = 0; n <= top; ++n)
        dims.push_back(a.dim(n + 1) + b.dim(n));
    for (int n = 0; n <= top; ++n) {
        Matrix dn(field, n + 1 <= top ? dims[static_cast<std::size_t>(n + 1)] : 0, dims[static_cast<std::size_t>(n)]);
        if (dn.rows() > 0) {
            dn.set_block(0, 0, -a.differential(n + 1));
            dn.set_block(a.dim(n + 2), 0, f.at(n + 1));
            dn.set_block(a.dim(n + 2), a.dim(n + 1), b.differential(n));
        }
        d.push_back(dn);
    }
    return CochainComplex(field, dims, d);
}

CochainComplex random_complex(const FieldSpec& f, int top, std::size_t max_dim, Rng& rng)
{
    // Random d built as a product of two factors so consecutive maps compose to zero:
    // d(n) = inclusion of a complement of ker d(n+1) composed with a random map.
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n)
        dims.push_back(dim(rng));
    std::vector<Matrix> d(dims.size(), Matrix(f, 0, 0));
    for (int n = top; n >= 0; --n) {
        const std::size_t rows = n == top ? 0 : dims[static_cast<std::size_t>(n + 1)];
        if (rows == 0) {
            d[static_cast<std::size_t>(n)] = Matrix(f, rows, dims[static_cast<std::size_t>(n)]);
            continue;
        }
        const auto kernel = kernel_basis(d[static_cast<std::size_t>(n + 1)]).basis();
        d[static_cast<std::size_t>(n)] = kernel * random_matrix(f, kernel.cols(), dims[static_cast<std::size_t>(n)], rng);
    }
    return CochainComplex(f, dims, d);
}

} // namespace

TEST_SUITE("cochain")
{
    const FieldSpec gf2 = FieldSpec::prime(2);
    const FieldSpec q = FieldSpec::rationals();

    TEST_CASE("validate examples")
    {
        const CochainComplex exact(q, {1, 1}, {m(q, {{1}})});
        CHECK(!validate_complex(exact));
        const CochainComplex bad(q, {1, 1, 1}, {m(q, {{1}}), m(q, {{1}})});
        const auto violation = validate_complex(bad);
        REQUIRE(violation);
        CHECK(violation->degree == 0);
        const CochainComplex zero(q, {2, 3, 1}, {Matrix(q, 3, 2), Matrix(q, 1, 3)});
        CHECK(!validate_complex(zero));
        CHECK_ERROR_KIND(CochainComplex(q, {1, 2}, {Matrix(q, 1, 1)}), ErrorKind::shape);
    }

    TEST_CASE("cohomology examples")
    {
        const auto h = cohomology(CochainComplex(q, {1, 1}, {m(q, {{1}})}));
        CHECK(h.dim(0) == 0);
        CHECK(h.dim(1) == 0);
        const auto z = cohomology(CochainComplex(q, {2, 3, 1}, {Matrix(q, 3, 2), Matrix(q, 1, 3)}));
        CHECK(z.dim(0) == 2);
        CHECK(z.dim(1) == 3);
        CHECK(z.dim(2) == 1);
        CHECK(z.dim(7) == 0);
        CHECK(z.dim(-1) == 0);
    }

    TEST_CASE("GF(2) cohomology checked by enumeration")
    {
        const CochainComplex c(gf2, {1, 1, 1}, {m(gf2, {{1}}), m(gf2, {{0}})});
        const auto h = cohomology(c);
        CHECK(h.dim(0) == 0);
        CHECK(h.dim(1) == 0);
        CHECK(h.dim(2) == 1);
        for (int n = 0; n <= 2; ++n) {
            const auto dn = oracle::from(c.differential(n));
            const auto dprev = oracle::from(c.differential(n - 1));
            std::size_t cycles = 0;
            for (const auto& v : oracle::all_vectors(c.dim(n), 2)) {
                const auto image = oracle::apply(dn, v, 2);
                cycles += std::all_of(image.begin(), image.end(), [](auto x) { return x == 0; });
            }
            const auto boundaries = oracle::span_set(dprev, 2).size();
            CHECK(cycles / boundaries == (std::size_t{1} << h.dim(n)));
        }
    }

    TEST_CASE("cochain map examples")
    {
        const CochainComplex c(q, {1, 1}, {m(q, {{1}})});
        CHECK(!validate_cochain_map(CochainMap::identity(c)));
        CHECK(!validate_cochain_map(CochainMap::zero(c, c)));
        const CochainMap broken(c, c, {m(q, {{1}}), m(q, {{2}})});
        const auto v = validate_cochain_map(broken);
        REQUIRE(v);
        CHECK(v->degree == 0);
        CHECK_ERROR_KIND(CochainMap(c, c, {m(q, {{1, 0}})}), ErrorKind::shape);
    }

    TEST_CASE("composition")
    {
        Rng rng(2);
        const auto c = random_complex(q, 3, 3, rng);
        const auto id = CochainMap::identity(c);
        const auto twice = compose(id, id);
        for (int n = 0; n <= c.top_degree(); ++n)
            CHECK(twice.at(n) == Matrix::identity(q, c.dim(n)));
    }

    TEST_CASE("property: Euler characteristic and brute-force cohomology of cones")
    {
        Rng rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_complex(gf2, 3, 2, rng);
            const auto b = random_complex(gf2, 3, 2, rng);
            // Any degreewise map that commutes: f = 0 on a random pair, or the identity of a.
            const CochainMap f = trial % 2 ? CochainMap::identity(a) : CochainMap::zero(a, b);
            const auto c = cone(f);
            REQUIRE(!validate_complex(c));
            const auto h = cohomology(c);
            std::vector<std::size_t> hd;
            for (int n = 0; n <= c.top_degree(); ++n)
                hd.push_back(h.dim(n));
            CHECK(euler_characteristic(c.dims()) == euler_characteristic(hd));
            std::size_t total = 0;
            for (auto d : c.dims())
                total += d;
            if (total > 12)
                continue;
            for (int n = 0; n <= c.top_degree(); ++n) {
                const auto dn = oracle::from(c.differential(n));
                std::size_t cycles = 0;
                for (const auto& v : oracle::all_vectors(c.dim(n), 2)) {
                    const auto image = oracle::apply(dn, v, 2);
                    cycles += std::all_of(image.begin(), image.end(), [](auto x) { return x == 0; });
                }
                const auto boundaries = oracle::span_set(oracle::from(c.differential(n - 1)), 2).size();
                CHECK(cycles / boundaries == (std::size_t{1} << h.dim(n)));
            }
        }
    }
}
