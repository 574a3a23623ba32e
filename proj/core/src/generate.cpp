#include "polyss/generate.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "polyss/error.hpp"
#include "polyss/linalg.hpp"

namespace polyss {

namespace {

Scalar random_scalar(const FieldSpec& field, Rng& rng)
{
    if (field.is_prime()) {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
        return Scalar::from_int(field, static_cast<std::int64_t>(dist(rng)));
    }
    std::uniform_int_distribution<int> dist(-3, 3);
    return Scalar::from_int(field, dist(rng));
}

std::vector<std::size_t> iota(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

std::vector<MultiDegree> box(std::size_t k, int extent)
{
    std::vector<MultiDegree> out;
    std::vector<int> c(k, 0);
    while (true) {
        out.emplace_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == extent - 1) {
            c[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
        ++c[i - 1];
    }
    std::stable_sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) { return a.total() < b.total(); });
    return out;
}

} // namespace

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = random_scalar(field, rng);
    return m;
}

Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng)
{
    while (true) {
        Matrix m = random_matrix(field, n, n, rng);
        if (rank(m) == n)
            return m;
    }
}

Matrix random_matrix_of_rank(const FieldSpec& field, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng)
{
    if (r > std::min(rows, cols))
        fail(ErrorKind::dimension_mismatch, "rank exceeds matrix size");
    const Matrix left = random_invertible(field, rows, rng).select_cols(iota(r));
    const Matrix right = random_invertible(field, cols, rng).select_rows(iota(r));
    return left * right;
}

Polycomplex random_polycomplex(const FieldSpec& field, const PolycomplexShape& shape, Rng& rng)
{
    if (shape.k == 0 || shape.extent <= 0)
        fail(ErrorKind::shape, "random_polycomplex needs k >= 1 and a positive extent");
    Polycomplex v(field, shape.k);
    std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(shape.max_cell_dim, 1));
    std::bernoulli_distribution empty(shape.empty_fraction);

    for (const auto& y : box(shape.k, shape.extent)) {
        if (shape.max_cell_dim == 0 || empty(rng))
            continue;
        const std::size_t m = dim_dist(rng);
        v.set_dim(y, m);

        // Incoming blocks: sources y - e_i, in index order.
        std::vector<std::size_t> in_idx;
        std::vector<MultiDegree> in_src;
        std::size_t width = 0;
        for (std::size_t i = 1; i <= shape.k; ++i) {
            auto s = y.shifted(i, -1);
            if (s.is_nonnegative() && v.dim(s) > 0) {
                in_idx.push_back(i);
                in_src.push_back(s);
                width += v.dim(s);
            }
        }
        if (width == 0)
            continue;

        // D: rows indexed by the incoming sources, columns by cells two steps below y.
        std::vector<MultiDegree> second;
        for (std::size_t a = 0; a < in_src.size(); ++a)
            for (std::size_t j = 1; j <= shape.k; ++j) {
                auto z = in_src[a].shifted(j, -1);
                if (z.is_nonnegative() && v.dim(z) > 0 && std::find(second.begin(), second.end(), z) == second.end())
                    second.push_back(z);
            }
        std::size_t depth = 0;
        for (const auto& z : second)
            depth += v.dim(z);
        Matrix d(field, width, depth);
        std::size_t row = 0;
        for (std::size_t a = 0; a < in_src.size(); ++a) {
            std::size_t col = 0;
            for (const auto& z : second) {
                for (std::size_t j = 1; j <= shape.k; ++j)
                    if (z.shifted(j) == in_src[a])
                        d.set_block(row, col, v.partial(j, z));
                col += v.dim(z);
            }
            row += v.dim(in_src[a]);
        }

        // Rows of M lie in the left kernel of D.
        auto allowed = kernel_basis(d.transpose());
        std::size_t t = allowed.dim();
        if (!shape.generic && t > 0)
            t = std::uniform_int_distribution<std::size_t>(0, t)(rng);
        Matrix mt(field, width, m);
        if (t > 0)
            mt = allowed.basis() * random_matrix(field, allowed.dim(), t, rng) * random_matrix(field, t, m, rng);
        Matrix block_row = mt.transpose();

        std::size_t col = 0;
        for (std::size_t a = 0; a < in_src.size(); ++a) {
            v.set_partial(in_idx[a], in_src[a], block_row.block(0, m, col, v.dim(in_src[a])));
            col += v.dim(in_src[a]);
        }
    }
    return v;
}

namespace {

struct Piece {
    std::vector<MultiDegree> cells;
    struct Arrow {
        std::size_t i;
        std::size_t from;
        std::size_t to;
        int sign;
    };
    std::vector<Arrow> arrows;
};

bool in_box(const MultiDegree& x, int extent)
{
    return std::all_of(x.coords().begin(), x.coords().end(), [&](int c) { return c >= 0 && c < extent; });
}

std::optional<Piece> cube(const MultiDegree& base, const std::vector<std::size_t>& axes, int extent)
{
    Piece piece;
    const std::size_t m = axes.size();
    for (std::size_t t = 0; t < (std::size_t{1} << m); ++t) {
        MultiDegree x = base;
        for (std::size_t a = 0; a < m; ++a)
            if (t >> a & 1)
                x = x.shifted(axes[a]);
        if (!in_box(x, extent))
            return std::nullopt;
        piece.cells.push_back(x);
    }
    for (std::size_t t = 0; t < piece.cells.size(); ++t) {
        for (std::size_t a = 0; a < m; ++a) {
            if (t >> a & 1)
                continue;
            int below = 0;
            for (std::size_t c = 0; c < a; ++c)
                below += static_cast<int>(t >> c & 1);
            piece.arrows.push_back({axes[a], t, t | (std::size_t{1} << a), below % 2 ? -1 : 1});
        }
    }
    return piece;
}

// Alternates x -> x + e_i and x <- x + e_j (i.e. the next cell is x + e_i - e_j);
// every cell is a source or a sink, so all composites vanish.
std::optional<Piece> zigzag(const MultiDegree& base, std::size_t i, std::size_t j, int length, bool rising, int extent)
{
    Piece piece;
    piece.cells.push_back(base);
    for (int s = 1; s < length; ++s) {
        const MultiDegree& cur = piece.cells.back();
        MultiDegree next = rising ? cur.shifted(i) : cur.shifted(j, -1);
        if (!in_box(next, extent))
            return std::nullopt;
        const std::size_t a = piece.cells.size() - 1;
        piece.cells.push_back(next);
        if (rising)
            piece.arrows.push_back({i, a, a + 1, 1});
        else
            piece.arrows.push_back({j, a + 1, a, 1});
        rising = !rising;
    }
    return piece;
}

} // namespace

Polycomplex random_direct_sum_polycomplex(const FieldSpec& field, const DirectSumShape& shape, Rng& rng)
{
    if (shape.k == 0 || shape.extent <= 0)
        fail(ErrorKind::shape, "random_direct_sum_polycomplex needs k >= 1 and a positive extent");
    std::size_t target = shape.pieces;
    if (target == 0) {
        target = 1;
        for (std::size_t i = 0; i < shape.k; ++i)
            target *= static_cast<std::size_t>(shape.extent);
    }
    std::uniform_int_distribution<int> coord(0, shape.extent - 1);
    std::uniform_int_distribution<std::size_t> axis(1, shape.k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> length(2, std::max(2, shape.max_zigzag_length));

    std::vector<Piece> pieces;
    while (pieces.size() < target) {
        std::vector<int> c(shape.k);
        for (auto& x : c)
            x = coord(rng);
        const MultiDegree base(std::move(c));
        const double kind = unit(rng);
        std::optional<Piece> piece;
        if (kind < shape.dot_fraction) {
            piece = Piece{{base}, {}};
        } else if (kind < shape.dot_fraction + shape.zigzag_fraction && shape.k >= 2) {
            const std::size_t i = axis(rng);
            std::size_t j = axis(rng);
            while (j == i)
                j = axis(rng);
            piece = zigzag(base, i, j, length(rng), unit(rng) < 0.5, shape.extent);
        } else {
            std::vector<std::size_t> axes;
            for (std::size_t i = 1; i <= shape.k; ++i)
                if (unit(rng) < 0.6)
                    axes.push_back(i);
            if (!axes.empty())
                piece = cube(base, axes, shape.extent);
        }
        if (piece)
            pieces.push_back(std::move(*piece));
    }

    std::map<MultiDegree, std::size_t> dims;
    std::vector<std::vector<std::size_t>> slot(pieces.size());
    for (std::size_t n = 0; n < pieces.size(); ++n)
        for (const auto& x : pieces[n].cells)
            slot[n].push_back(dims[x]++);

    std::map<std::pair<std::size_t, MultiDegree>, Matrix> maps;
    for (std::size_t n = 0; n < pieces.size(); ++n) {
        for (const auto& a : pieces[n].arrows) {
            const auto& x = pieces[n].cells[a.from];
            const auto& y = pieces[n].cells[a.to];
            auto it = maps.try_emplace({a.i, x}, field, dims[y], dims[x]).first;
            it->second.set(slot[n][a.to], slot[n][a.from], Scalar::from_int(field, a.sign));
        }
    }

    Polycomplex v(field, shape.k);
    std::map<MultiDegree, Matrix> basis, basis_inverse;
    for (const auto& [x, d] : dims) {
        v.set_dim(x, d);
        Matrix p = random_invertible(field, d, rng);
        basis_inverse.emplace(x, inverse(p));
        basis.emplace(x, std::move(p));
    }
    for (const auto& [key, m] : maps)
        v.set_partial(key.first, key.second, basis.at(key.second.shifted(key.first)) * m * basis_inverse.at(key.second));
    return v;
}

SnakeDiagram random_snake(const FieldSpec& field, std::size_t max_dim, Rng& rng)
{
    // B = A (+) C and E = D (+) F in adapted bases, then conjugate by random changes of basis.
    std::uniform_int_distribution<std::size_t> dist(0, max_dim);
    std::size_t a, c, d, f;
    do {
        a = dist(rng);
        c = dist(rng);
    } while (a + c > max_dim);
    do {
        d = dist(rng);
        f = dist(rng);
    } while (d + f > max_dim);
    const std::size_t b = a + c;
    const std::size_t e = d + f;

    auto inclusion_first = [&](std::size_t total, std::size_t first) {
        Matrix m(field, total, first);
        for (std::size_t i = 0; i < first; ++i)
            m.at(i, i) = Scalar::one(field);
        return m;
    };
    auto projection_last = [&](std::size_t total, std::size_t last) {
        Matrix m(field, last, total);
        for (std::size_t i = 0; i < last; ++i)
            m.at(i, total - last + i) = Scalar::one(field);
        return m;
    };

    Matrix pb = random_invertible(field, b, rng);
    Matrix pe = random_invertible(field, e, rng);
    auto random_rank = [&](std::size_t rows, std::size_t cols) {
        return random_matrix_of_rank(field, rows, cols,
                                     std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng), rng);
    };
    Matrix alpha = random_rank(d, a);
    Matrix gamma = random_rank(f, c);
    Matrix h = random_matrix(field, d, c, rng);

    Matrix beta_adapted(field, e, b);
    beta_adapted.set_block(0, 0, alpha);
    beta_adapted.set_block(0, a, h);
    beta_adapted.set_block(d, a, gamma);

    SnakeDiagram s{field,
                   pb * inclusion_first(b, a),
                   projection_last(b, c) * inverse(pb),
                   pe * inclusion_first(e, d),
                   projection_last(e, f) * inverse(pe),
                   alpha,
                   pe * beta_adapted * inverse(pb),
                   gamma};
    return s;
}

} // namespace polyss
