#include "polyss/render.hpp"

#include <algorithm>
#include <sstream>

namespace polyss {

std::optional<PageFormat> parse_page_format(std::string_view name)
{
    if (name == "table")
        return PageFormat::table;
    if (name == "csv")
        return PageFormat::csv;
    if (name == "tikz")
        return PageFormat::tikz;
    return std::nullopt;
}

std::vector<PageArrow> page_arrows(const Page& page)
{
    std::vector<PageArrow> out;
    for (const auto& [from, d] : page.differentials()) {
        if (d.is_zero())
            continue;
        out.push_back({from, page.target(from.first, from.second), rank(d)});
    }
    return out;
}

namespace {

std::string render_table(const Page& page)
{
    std::ostringstream out;
    out << "E_" << page.r() << "\n";
    if (page.cells().empty()) {
        out << "(empty)\n";
        return out.str();
    }
    int p_min = 0, p_max = 0, q_min = 0, q_max = 0;
    bool first = true;
    for (const auto& [pq, cell] : page.cells()) {
        if (first) {
            p_min = p_max = pq.first;
            q_min = q_max = pq.second;
            first = false;
        }
        p_min = std::min(p_min, pq.first);
        p_max = std::max(p_max, pq.first);
        q_min = std::min(q_min, pq.second);
        q_max = std::max(q_max, pq.second);
    }
    constexpr int width = 5;
    auto pad = [](const std::string& s, int w) { return std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') + s; };
    for (int q = q_max; q >= q_min; --q) {
        out << pad("q=" + std::to_string(q), 6) << " |";
        for (int p = p_min; p <= p_max; ++p)
            out << pad(std::to_string(page.dim(p, q)), width);
        out << "\n";
    }
    out << std::string(7, ' ') << "+" << std::string(static_cast<std::size_t>(width * (p_max - p_min + 1)), '-') << "\n";
    out << std::string(8, ' ');
    for (int p = p_min; p <= p_max; ++p)
        out << pad("p=" + std::to_string(p), width);
    out << "\n";
    for (const auto& a : page_arrows(page))
        out << "d_" << page.r() << ": (" << a.from.first << "," << a.from.second << ") -> (" << a.to.first << ","
            << a.to.second << ") rank " << a.rank << "\n";
    return out.str();
}

std::string render_csv(const Page& page)
{
    std::ostringstream out;
    out << "r,p,q,dim,target_p,target_q,rank\n";
    for (const auto& [pq, cell] : page.cells()) {
        auto [tp, tq] = page.target(pq.first, pq.second);
        out << page.r() << "," << pq.first << "," << pq.second << "," << cell.dim() << "," << tp << "," << tq << ","
            << rank(page.differential(pq.first, pq.second)) << "\n";
    }
    return out.str();
}

std::string render_tikz(const Page& page)
{
    std::ostringstream out;
    out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[scale=1.2]\n";
    int p_max = 0, q_max = 0;
    for (const auto& [pq, cell] : page.cells()) {
        p_max = std::max(p_max, pq.first);
        q_max = std::max(q_max, pq.second);
    }
    out << "  \\draw[->] (-0.5,0) -- (" << p_max + 1 << ",0) node[right] {$p$};\n";
    out << "  \\draw[->] (0,-0.5) -- (0," << q_max + 1 << ") node[above] {$q$};\n";
    for (const auto& [pq, cell] : page.cells()) {
        if (cell.dim() == 0)
            continue;
        out << "  \\fill (" << pq.first << "," << pq.second << ") circle (2pt) node[above right] {$" << cell.dim() << "$};\n";
    }
    for (const auto& a : page_arrows(page))
        out << "  \\draw[->,thick] (" << a.from.first << "," << a.from.second << ") -- (" << a.to.first << "," << a.to.second
            << ") node[midway,above] {\\tiny " << a.rank << "};\n";
    out << "  \\node at (" << p_max << "," << q_max + 1 << ") {$E_{" << page.r() << "}$};\n";
    out << "\\end{tikzpicture}\n\\end{document}\n";
    return out.str();
}

} // namespace

std::string render_page(const Page& page, PageFormat format)
{
    switch (format) {
    case PageFormat::csv:
        return render_csv(page);
    case PageFormat::tikz:
        return render_tikz(page);
    case PageFormat::table:
        break;
    }
    return render_table(page);
}

std::string render_convergence(const ConvergenceReport& report)
{
    std::ostringstream out;
    for (std::size_t n = 0; n < report.cohomology_dims.size(); ++n) {
        const std::size_t e = n < report.e_infinity_totals.size() ? report.e_infinity_totals[n] : 0;
        out << "n=" << n << "  dim H^n=" << report.cohomology_dims[n] << "  sum E_inf=" << e
            << (e == report.cohomology_dims[n] ? "" : "  MISMATCH") << "\n";
    }
    for (const auto& [pq, c] : report.cells) {
        if (c.e_infinity == c.graded)
            continue;
        out << "  (" << pq.first << "," << pq.second << "): E_inf " << c.e_infinity << " vs gr H " << c.graded << "\n";
    }
    out << "verdict: " << (report.converged ? "converges" : "does not converge") << "\n";
    return out.str();
}

} // namespace polyss
