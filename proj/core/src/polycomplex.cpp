#include "polyss/polycomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "polyss/error.hpp"

namespace polyss {

MultiDegree::MultiDegree(std::vector<int> coords) : coords_(std::move(coords)) {}

int MultiDegree::total() const noexcept
{
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

int MultiDegree::partial_sum(const std::vector<std::size_t>& indices) const
{
    int s = 0;
    for (auto i : indices)
        s += coords_.at(i - 1);
    return s;
}

MultiDegree MultiDegree::shifted(std::size_t i, int delta) const
{
    auto c = coords_;
    c.at(i - 1) += delta;
    return MultiDegree(std::move(c));
}

bool MultiDegree::is_nonnegative() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

std::string MultiDegree::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ")";
    return os.str();
}

// ------------------------------------------------------------ Polycomplex

Polycomplex::Polycomplex(const FieldSpec& field, std::size_t k) : field_(field), k_(k)
{
    if (k == 0)
        fail(ErrorKind::shape, "a polycomplex needs k >= 1");
}

void Polycomplex::check_degree(const MultiDegree& x) const
{
    if (x.size() != k_)
        fail(ErrorKind::shape, "multidegree " + x.to_string() + " does not have " + std::to_string(k_) + " coordinates");
    if (!x.is_nonnegative())
        fail(ErrorKind::shape, "multidegree " + x.to_string() + " has a negative coordinate");
}

void Polycomplex::set_dim(const MultiDegree& x, std::size_t dim)
{
    check_degree(x);
    if (dim == 0) {
        dims_.erase(x);
        std::erase_if(partial_, [&](const auto& kv) {
            return kv.first.second == x || kv.first.second.shifted(kv.first.first) == x;
        });
        return;
    }
    dims_[x] = dim;
    std::erase_if(partial_, [&](const auto& kv) {
        const auto& [i, from] = kv.first;
        return kv.second.cols() != this->dim(from) || kv.second.rows() != this->dim(from.shifted(i));
    });
}

std::size_t Polycomplex::dim(const MultiDegree& x) const
{
    auto it = dims_.find(x);
    return it == dims_.end() ? 0 : it->second;
}

void Polycomplex::set_partial(std::size_t i, const MultiDegree& from, Matrix m)
{
    if (i < 1 || i > k_)
        fail(ErrorKind::shape, "differential index " + std::to_string(i) + " outside 1.." + std::to_string(k_));
    check_degree(from);
    require_same_field(field_, m.field());
    auto to = from.shifted(i);
    if (m.rows() != dim(to) || m.cols() != dim(from))
        fail(ErrorKind::shape, "partial_" + std::to_string(i) + " at " + from.to_string() + " must be " + std::to_string(dim(to)) +
                                   "x" + std::to_string(dim(from)) + ", got " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()));
    if (m.empty())
        partial_.erase({i, from});
    else
        partial_.insert_or_assign({i, from}, std::move(m));
}

Matrix Polycomplex::partial(std::size_t i, const MultiDegree& from) const
{
    auto it = partial_.find({i, from});
    if (it != partial_.end())
        return it->second;
    return Matrix(field_, from.is_nonnegative() ? dim(from.shifted(i)) : 0, from.is_nonnegative() ? dim(from) : 0);
}

int Polycomplex::top_degree() const noexcept
{
    int top = -1;
    for (const auto& [x, d] : dims_)
        top = std::max(top, x.total() - degree_shift_);
    return top;
}

std::optional<PolycomplexViolation> validate_polycomplex(const Polycomplex& v)
{
    for (const auto& [x, d] : v.cells()) {
        for (std::size_t i = 1; i <= v.k(); ++i) {
            if (!(v.partial(i, x.shifted(i)) * v.partial(i, x)).is_zero())
                return PolycomplexViolation{i, i, x, "partial_" + std::to_string(i) + " squared is nonzero at " + x.to_string()};
        }
        for (std::size_t i = 1; i <= v.k(); ++i)
            for (std::size_t j = i + 1; j <= v.k(); ++j) {
                Matrix ij = v.partial(i, x.shifted(j)) * v.partial(j, x);
                Matrix ji = v.partial(j, x.shifted(i)) * v.partial(i, x);
                if (!(ij + ji).is_zero())
                    return PolycomplexViolation{i, j, x,
                                                "partial_" + std::to_string(i) + " and partial_" + std::to_string(j) +
                                                    " do not anticommute at " + x.to_string()};
            }
    }
    return std::nullopt;
}

Polycomplex anticommutify(const Polycomplex& v, std::size_t i, std::size_t j)
{
    if (i < 1 || i > v.k() || j < 1 || j > v.k() || i == j)
        fail(ErrorKind::invalid_subset, "anticommutify needs two distinct indices in 1.." + std::to_string(v.k()));
    for (const auto& [x, d] : v.cells()) {
        if (!(v.partial(i, x.shifted(i)) * v.partial(i, x)).is_zero())
            fail(ErrorKind::axiom, "anticommutify: partial_" + std::to_string(i) + " squared is nonzero at " + x.to_string());
        Matrix ij = v.partial(i, x.shifted(j)) * v.partial(j, x);
        Matrix ji = v.partial(j, x.shifted(i)) * v.partial(i, x);
        if (!(ij == ji))
            fail(ErrorKind::axiom, "anticommutify: partial_" + std::to_string(i) + " and partial_" + std::to_string(j) +
                                       " do not commute at " + x.to_string());
    }
    Polycomplex out = v;
    for (const auto& [key, m] : v.partials()) {
        const auto& [idx, from] = key;
        if (idx == i && from[j - 1] % 2 != 0)
            out.set_partial(idx, from, -m);
    }
    return out;
}

std::size_t TotalComplex::offset(int n, const MultiDegree& x) const
{
    const auto& table = offsets.at(static_cast<std::size_t>(n));
    auto it = table.find(x);
    if (it == table.end())
        fail(ErrorKind::dimension_mismatch, x.to_string() + " is not a summand of T^" + std::to_string(n));
    return it->second;
}

std::vector<std::size_t> TotalComplex::block_coordinates(int n, const MultiDegree& x) const
{
    std::size_t first = offset(n, x);
    std::size_t size = block_sizes.at(static_cast<std::size_t>(n)).at(x);
    std::vector<std::size_t> coords(size);
    for (std::size_t q = 0; q < size; ++q)
        coords[q] = first + q;
    return coords;
}

TotalComplex totalize(const Polycomplex& v, SummandOrder order)
{
    const int top = v.top_degree();
    const auto levels = static_cast<std::size_t>(top + 1);
    std::vector<std::vector<MultiDegree>> summands(levels);
    for (const auto& [x, d] : v.cells())
        summands[static_cast<std::size_t>(x.total() - v.degree_shift())].push_back(x);
    if (order == SummandOrder::descending_lex)
        for (auto& s : summands)
            std::reverse(s.begin(), s.end());

    std::vector<std::size_t> dims(levels, 0);
    std::vector<std::map<MultiDegree, std::size_t>> offsets(levels);
    std::vector<std::map<MultiDegree, std::size_t>> sizes(levels);
    for (std::size_t n = 0; n < levels; ++n)
        for (const auto& x : summands[n]) {
            offsets[n][x] = dims[n];
            sizes[n][x] = v.dim(x);
            dims[n] += v.dim(x);
        }

    std::vector<Matrix> d;
    for (std::size_t n = 0; n < levels; ++n) {
        std::size_t rows = n + 1 < levels ? dims[n + 1] : 0;
        Matrix dn(v.field(), rows, dims[n]);
        for (const auto& x : summands[n])
            for (std::size_t i = 1; i <= v.k(); ++i) {
                auto y = x.shifted(i);
                if (v.dim(y) == 0)
                    continue;
                dn.set_block(offsets[n + 1].at(y), offsets[n].at(x), v.partial(i, x));
            }
        d.push_back(std::move(dn));
    }
    return TotalComplex{CochainComplex(v.field(), std::move(dims), std::move(d)), std::move(summands), std::move(offsets),
                        std::move(sizes)};
}

std::vector<std::size_t> checked_index_subset(std::vector<std::size_t> subset, std::size_t k)
{
    std::sort(subset.begin(), subset.end());
    if (subset.empty() || subset.size() >= k)
        fail(ErrorKind::invalid_subset, "index subset must be nonempty and proper in 1.." + std::to_string(k));
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        fail(ErrorKind::invalid_subset, "index subset has a repeated index");
    if (subset.front() < 1 || subset.back() > k)
        fail(ErrorKind::invalid_subset, "index subset entry outside 1.." + std::to_string(k));
    return subset;
}

Polycomplex slice(const Polycomplex& v, const std::vector<std::size_t>& subset, int p)
{
    auto a = checked_index_subset(subset, v.k());
    Polycomplex out(v.field(), v.k());
    out.set_degree_shift(v.degree_shift() + p);
    for (const auto& [x, d] : v.cells())
        if (x.partial_sum(a) == p)
            out.set_dim(x, d);
    for (const auto& [key, m] : v.partials()) {
        const auto& [i, from] = key;
        if (std::binary_search(a.begin(), a.end(), i) || out.dim(from) == 0)
            continue;
        out.set_partial(i, from, m);
    }
    return out;
}

} // namespace polyss
