#include "polyss/snake.hpp"

#include <algorithm>

#include "polyss/error.hpp"

namespace polyss {

namespace {

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name)
{
    if (m.rows() != rows || m.cols() != cols)
        fail(ErrorKind::snake_input, std::string(name) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void expect_short_exact(const Matrix& left, const Matrix& right, const char* row)
{
    if (rank(left) != left.cols())
        fail(ErrorKind::snake_input, std::string(row) + " row is not exact at its first term (left map not injective)");
    if (!(right * left).is_zero() || left.rows() != left.cols() + right.rows())
        fail(ErrorKind::snake_input, std::string(row) + " row is not exact at its middle term");
    if (rank(right) != right.rows())
        fail(ErrorKind::snake_input, std::string(row) + " row is not exact at its last term (right map not surjective)");
}

// Selects the V^x block of T^n; zero rows when x is not a summand.
Matrix block_projection(const TotalComplex& t, int n, const MultiDegree& x, std::size_t block_dim, const FieldSpec& f)
{
    const std::size_t ambient = t.underlying.dim(n);
    Matrix m(f, block_dim, ambient);
    if (n < 0 || n > t.underlying.top_degree() || !t.offsets[static_cast<std::size_t>(n)].count(x))
        return m;
    auto coords = t.block_coordinates(n, x);
    for (std::size_t i = 0; i < coords.size(); ++i)
        m.at(i, coords[i]) = Scalar::one(f);
    return m;
}

bool all_zero(const Page& page)
{
    return std::all_of(page.cells().begin(), page.cells().end(), [](const auto& kv) { return kv.second.dim() == 0; });
}

} // namespace

void validate_snake(const SnakeDiagram& s)
{
    for (const Matrix* m : {&s.bottom_left, &s.bottom_right, &s.top_left, &s.top_right, &s.alpha, &s.beta, &s.gamma})
        if (!(m->field() == s.field))
            fail(ErrorKind::snake_input, "snake maps must all live over " + s.field.to_string());
    expect_shape(s.bottom_right, s.bottom_right.rows(), s.dim_b(), "B -> C");
    expect_shape(s.top_right, s.top_right.rows(), s.dim_e(), "E -> F");
    expect_shape(s.alpha, s.dim_d(), s.dim_a(), "alpha");
    expect_shape(s.beta, s.dim_e(), s.dim_b(), "beta");
    expect_shape(s.gamma, s.dim_f(), s.dim_c(), "gamma");
    expect_short_exact(s.bottom_left, s.bottom_right, "bottom");
    expect_short_exact(s.top_left, s.top_right, "top");
    if (!(s.beta * s.bottom_left == s.top_left * s.alpha))
        fail(ErrorKind::snake_input, "left square does not commute");
    if (!(s.gamma * s.bottom_right == s.top_right * s.beta))
        fail(ErrorKind::snake_input, "right square does not commute");
}

Polycomplex snake_bicomplex(const SnakeDiagram& s)
{
    Polycomplex v(s.field, 2);
    const std::array<std::size_t, 6> dims{s.dim_a(), s.dim_b(), s.dim_c(), s.dim_d(), s.dim_e(), s.dim_f()};
    for (int i = 0; i < 6; ++i)
        v.set_dim(MultiDegree{i % 3, i / 3}, dims[static_cast<std::size_t>(i)]);
    auto put = [&](std::size_t idx, const MultiDegree& from, const Matrix& m) {
        if (!m.empty())
            v.set_partial(idx, from, m);
    };
    put(1, {0, 0}, s.bottom_left);
    put(1, {1, 0}, s.bottom_right);
    put(1, {0, 1}, s.top_left);
    put(1, {1, 1}, s.top_right);
    put(2, {0, 0}, s.alpha);
    put(2, {1, 0}, s.beta);
    put(2, {2, 0}, s.gamma);
    return v;
}

bool SnakeResult::exact() const noexcept
{
    return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
}

const char* snake_term_name(std::size_t i) noexcept
{
    static constexpr const char* names[] = {"ker alpha", "ker beta", "ker gamma", "coker alpha", "coker beta", "coker gamma"};
    return i < 6 ? names[i] : "?";
}

SnakeResult snake(const SnakeDiagram& s)
{
    validate_snake(s);
    const auto& f = s.field;
    const auto v = anticommutify(snake_bicomplex(s), 2, 1);
    const auto total = totalize(v);
    auto vertical_fc = apply_filtration(total, IndexSubsetFiltration({1}, 2));
    auto horizontal_fc = apply_filtration(total, IndexSubsetFiltration({2}, 2));
    auto vertical = compute_pages(vertical_fc);
    auto horizontal = compute_pages(horizontal_fc);

    auto kernel_term = [&](const Matrix& m) { return Subquotient::whole(kernel_basis(m)); };
    auto cokernel_term = [&](const Matrix& m) { return Subquotient(Subspace::full(f, m.rows()), image_basis(m)); };
    std::array<Subquotient, 6> terms{kernel_term(s.alpha),   kernel_term(s.beta),   kernel_term(s.gamma),
                                     cokernel_term(s.alpha), cokernel_term(s.beta), cokernel_term(s.gamma)};

    // delta = (E_2(0,1) -> coker alpha) o d_2^{-1} o (ker gamma -> E_2(2,0)).
    const auto& e2 = vertical.page(2);
    const std::size_t left_dim = e2.dim(0, 1);
    const std::size_t right_dim = e2.dim(2, 0);
    Matrix d2(f, right_dim, left_dim);
    Matrix delta(f, terms[3].dim(), terms[2].dim());
    if (left_dim != right_dim)
        fail(ErrorKind::internal, "snake: E_2(0,1) and E_2(2,0) have different dimensions");
    if (left_dim > 0) {
        const auto* left = e2.find(0, 1);
        const auto* right = e2.find(2, 0);
        d2 = e2.differential(0, 1);
        Matrix to_coker = induced_map(left->sq, terms[3], block_projection(total, 1, {0, 1}, s.dim_d(), f));
        Matrix from_ker = induced_map(terms[2], right->sq, block_projection(total, 2, {2, 0}, s.dim_c(), f).transpose());
        try {
            delta = to_coker * inverse(d2) * from_ker;
        } catch (const Error&) {
            fail(ErrorKind::internal, "snake: d_2 between the two corner cells is not invertible");
        }
    }

    std::array<Matrix, 5> maps{induced_map(terms[0], terms[1], s.bottom_left), induced_map(terms[1], terms[2], s.bottom_right), delta,
                               induced_map(terms[3], terms[4], s.top_left), induced_map(terms[4], terms[5], s.top_right)};

    SnakeResult result{terms, maps, {}, false, false, false, d2, std::move(vertical), std::move(horizontal)};
    result.exact_at[0] = rank(maps[0]) == terms[0].dim();
    for (std::size_t i = 1; i < 5; ++i)
        result.exact_at[i] = (maps[i] * maps[i - 1]).is_zero() && rank(maps[i - 1]) + rank(maps[i]) == terms[i].dim();
    result.exact_at[5] = rank(maps[4]) == terms[5].dim();

    result.horizontal_e1_zero = all_zero(result.horizontal.page(1));
    const auto h = cohomology(total.underlying);
    bool acyclic = true;
    for (int n = 0; n <= total.underlying.top_degree(); ++n)
        acyclic = acyclic && h.dim(n) == 0;
    result.vertical_converges_to_zero = acyclic && all_zero(result.vertical.e_infinity()) &&
                                        check_convergence(result.vertical, vertical_fc).converged;
    result.horizontal_converges_to_zero = acyclic && all_zero(result.horizontal.e_infinity()) &&
                                          check_convergence(result.horizontal, horizontal_fc).converged;
    return result;
}

} // namespace polyss
