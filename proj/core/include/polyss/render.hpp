#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyss/spectral.hpp"

namespace polyss {

enum class PageFormat { table, csv, tikz };

std::optional<PageFormat> parse_page_format(std::string_view name);

struct PageArrow {
    Bidegree from;
    Bidegree to;
    std::size_t rank;
};

/// Nonzero differentials of a page with their ranks.
std::vector<PageArrow> page_arrows(const Page& page);

/// Table: rows q descending, columns p ascending, followed by the nonzero arrows.
/// CSV: header "r,p,q,dim,target_p,target_q,rank", one row per cell.
/// TikZ: a standalone picture with one labelled dot per nonzero cell and one arrow per nonzero d_r.
std::string render_page(const Page& page, PageFormat format);

std::string render_convergence(const ConvergenceReport& report);

} // namespace polyss
