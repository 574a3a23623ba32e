#pragma once

#include <doctest.h>

#include "polyss/error.hpp"
#include "polyss/matrix.hpp"

#define CHECK_ERROR_KIND(expr, expected_kind)                                                                          \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        } catch (const polyss::Error& e_) {                                                                            \
            thrown_ = true;                                                                                            \
            CHECK_MESSAGE(e_.kind() == (expected_kind), "got " << polyss::to_string(e_.kind()) << ": " << e_.what()); \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, "expected " << polyss::to_string(expected_kind));                                      \
    } while (false)

namespace testing {

inline polyss::Matrix m(const polyss::FieldSpec& f, std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    return polyss::Matrix::from_ints(f, r, c, rows);
}

inline polyss::Matrix col(const polyss::FieldSpec& f, std::initializer_list<std::int64_t> entries)
{
    polyss::Matrix out(f, entries.size(), 1);
    std::size_t i = 0;
    for (auto e : entries)
        out.set(i++, 0, polyss::Scalar::from_int(f, e));
    return out;
}

} // namespace testing
