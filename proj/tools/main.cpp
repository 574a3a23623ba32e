// polyss: spectral sequences of polycomplexes from the command line.
//
// Exit codes: 0 success, 2 invalid input, 3 hypothesis not met, 4 internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyss/error.hpp"
#include "polyss/generate.hpp"
#include "polyss/io.hpp"
#include "polyss/morphism.hpp"
#include "polyss/render.hpp"

using namespace polyss;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitInternal = 4;

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::hypothesis:
        return kExitHypothesis;
    case ErrorKind::internal:
    case ErrorKind::induced_map:
        return kExitInternal;
    default:
        return kExitValidation;
    }
}

struct Globals {
    std::string field;
    std::uint64_t seed = 1;
    std::string format = "table";

    std::optional<FieldSpec> field_override() const
    {
        if (field.empty())
            return std::nullopt;
        return parse_field(field);
    }

    PageFormat page_format() const
    {
        if (auto f = parse_page_format(format))
            return *f;
        fail(ErrorKind::parse, "unknown format '" + format + "' (expected table, csv or tikz)");
    }
};

Instance load(const std::string& path, const Globals& g) { return read_instance(path, g.field_override()); }

/// Snake files are read as their (sign-twisted) two-row bicomplex.
Polycomplex load_polycomplex(const std::string& path, const Globals& g)
{
    auto inst = load(path, g);
    if (inst.is_snake())
        return anticommutify(snake_bicomplex(inst.snake()), 2, 1);
    return inst.polycomplex();
}

IndexSubsetFiltration choose_filtration(const std::string& path, const std::string& indices, const Globals& g,
                                        const Polycomplex& v)
{
    if (!indices.empty())
        return IndexSubsetFiltration(parse_index_list(indices), v.k());
    auto inst = load(path, g);
    if (!inst.is_snake() && inst.filtration)
        return IndexSubsetFiltration(*inst.filtration, v.k());
    fail(ErrorKind::invalid_subset, "no filtration given: pass --indices (see list-filtrations)");
}

void print_matrix(const Matrix& m, const std::string& indent)
{
    if (m.rows() == 0 || m.cols() == 0) {
        std::cout << indent << "(" << m.rows() << "x" << m.cols() << ")\n";
        return;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? " " : "") << m(i, j).to_string();
        std::cout << "]\n";
    }
}

int cmd_validate(const std::string& path, const Globals& g)
{
    auto inst = load(path, g);
    if (inst.is_snake()) {
        const auto& s = inst.snake();
        std::cout << "ok: snake diagram over " << inst.field.to_string() << " with dims A=" << s.dim_a() << " B=" << s.dim_b()
                  << " C=" << s.dim_c() << " D=" << s.dim_d() << " E=" << s.dim_e() << " F=" << s.dim_f() << "\n";
        return 0;
    }
    const auto& v = inst.polycomplex();
    std::cout << "ok: " << v.k() << "-complex over " << inst.field.to_string() << " with " << v.cells().size()
              << " nonzero cells, top degree " << v.top_degree() << "\n";
    return 0;
}

int cmd_cohomology(const std::string& path, bool reps, const Globals& g)
{
    const auto t = totalize(load_polycomplex(path, g));
    const auto h = cohomology(t.underlying);
    std::cout << "n  dim T^n  dim H^n\n";
    for (int n = 0; n <= t.underlying.top_degree(); ++n) {
        std::cout << n << "  " << t.underlying.dim(n) << "  " << h.dim(n) << "\n";
        if (reps && h.dim(n) > 0) {
            std::cout << "  representatives (columns):\n";
            print_matrix(h.groups[static_cast<std::size_t>(n)].reps(), "    ");
        }
    }
    return 0;
}

int cmd_total(const std::string& path, bool show, const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    const auto t = totalize(v);
    for (int n = 0; n <= t.underlying.top_degree(); ++n) {
        std::cout << "T^" << n << " (dim " << t.underlying.dim(n) << "):";
        for (const auto& x : t.summand_order[static_cast<std::size_t>(n)])
            std::cout << " " << x.to_string();
        std::cout << "\n";
        if (show) {
            const auto d = t.underlying.differential(n);
            std::cout << "  d^" << n << " (" << d.rows() << "x" << d.cols() << "):\n";
            print_matrix(d, "    ");
        }
    }
    if (auto bad = validate_complex(t.underlying))
        fail(ErrorKind::internal, "total complex violates d^2 = 0 at degree " + std::to_string(bad->degree));
    return 0;
}

int cmd_pages(const std::string& path, const std::string& indices, std::optional<int> max_page, const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    const auto a = choose_filtration(path, indices, g, v);
    const auto fc = apply_filtration(totalize(v), a);
    PageOptions options;
    options.max_page = max_page;
    const auto ss = compute_pages(fc, options);
    const auto format = g.page_format();
    for (const auto& page : ss.pages())
        std::cout << render_page(page, format) << (format == PageFormat::table ? "\n" : "");
    if (format != PageFormat::table)
        return 0;
    std::cout << "filtration " << a.to_string() << ", stabilizes at r = " << ss.stabilization_page() << "\n";
    if (!ss.complete()) {
        std::cout << "verdict: truncated before stabilization\n";
        return 0;
    }
    std::cout << render_convergence(check_convergence(ss, fc));
    return 0;
}

int cmd_converge(const std::string& path, const std::string& indices, const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    std::vector<IndexSubsetFiltration> filtrations;
    if (!indices.empty())
        filtrations.push_back(IndexSubsetFiltration(parse_index_list(indices), v.k()));
    else
        filtrations = canonical_filtrations(v);
    const auto t = totalize(v);
    bool all = true;
    for (const auto& a : filtrations) {
        const auto fc = apply_filtration(t, a);
        std::cout << "filtration " << a.to_string() << " (" << to_string(classify_boundedness(fc)) << ")\n";
        const auto report = check_convergence(compute_pages(fc), fc);
        std::cout << render_convergence(report);
        all = all && report.converged;
    }
    if (!all)
        fail(ErrorKind::internal, "spectral sequence failed to converge");
    return 0;
}

int cmd_edge(const std::string& path, const std::string& indices, const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    const auto fc = apply_filtration(totalize(v), choose_filtration(path, indices, g, v));
    const auto ss = compute_pages(fc);
    std::cout << "n  rank(H->E2(0,n))  dim Einf(0,n)  rank(E2(n,0)->H)  dim Einf(n,0)\n";
    for (const auto& e : edge_morphisms(ss, fc))
        std::cout << e.n << "  " << rank(e.h_to_e2) << "  " << e.h_to_einf.rows() << "  " << rank(e.e2_to_h) << "  "
                  << e.einf_to_h.cols() << "\n";
    return 0;
}

int cmd_morphism(const std::string& path, const std::string& from, const std::string& to, std::optional<int> page,
                 const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    const IndexSubsetFiltration a(parse_index_list(from), v.k());
    const IndexSubsetFiltration b(parse_index_list(to), v.k());
    const auto f = inclusion_morphism(v, a, b);
    const int first = page ? *page : 0;
    const int last = page ? *page : f.last_page();
    if (first < 0 || first > f.last_page())
        fail(ErrorKind::parse, "page outside 0.." + std::to_string(f.last_page()));
    for (int r = first; r <= last; ++r) {
        std::cout << "f_" << r << ": " << a.to_string() << " -> " << b.to_string() << "\n";
        for (const auto& [pq, m] : f.page(r))
            std::cout << "  (" << pq.first << "," << pq.second << ") " << m.cols() << " -> " << m.rows() << " rank "
                      << rank(m) << "\n";
    }
    return 0;
}

int cmd_snake(const std::string& path, const Globals& g)
{
    const auto inst = load(path, g);
    const auto result = snake(inst.snake());
    for (std::size_t i = 0; i < 6; ++i) {
        std::cout << snake_term_name(i) << ": dim " << result.terms[i].dim() << (result.exact_at[i] ? "" : "  NOT EXACT")
                  << "\n";
        if (i < 5) {
            std::cout << "  " << (i == 2 ? "delta" : "map") << " (rank " << rank(result.maps[i]) << ")\n";
            if (i == 2)
                print_matrix(result.delta(), "    ");
        }
    }
    std::cout << "horizontal E_1 zero: " << (result.horizontal_e1_zero ? "yes" : "no") << "\n";
    std::cout << "both spectral sequences converge to 0: "
              << (result.vertical_converges_to_zero && result.horizontal_converges_to_zero ? "yes" : "no") << "\n";
    std::cout << "exact: " << (result.exact() ? "yes" : "no") << "\n";
    if (!result.exact())
        fail(ErrorKind::internal, "extracted six-term sequence is not exact");
    return 0;
}

int cmd_list_filtrations(const std::string& path, const Globals& g)
{
    const auto v = load_polycomplex(path, g);
    for (const auto& a : canonical_filtrations(v))
        std::cout << a.to_string() << "\n";
    return 0;
}

int cmd_random(const std::string& kind, std::size_t k, int extent, std::size_t max_dim, bool generic, const Globals& g)
{
    const FieldSpec field = g.field.empty() ? FieldSpec::prime(2) : parse_field(g.field);
    Rng rng(g.seed);
    Instance inst;
    inst.field = field;
    if (kind == "snake") {
        inst.content = random_snake(field, max_dim, rng);
    } else {
        PolycomplexShape shape;
        shape.k = k;
        shape.extent = extent;
        shape.max_cell_dim = max_dim;
        shape.generic = generic;
        inst.content = random_polycomplex(field, shape, rng);
    }
    std::cout << serialize_instance(inst);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"polyss: exact spectral sequences of polycomplexes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field", g.field, "Reinterpret entries over this field (prime:5, 2, rational)");
    app.add_option("--seed", g.seed, "Seed for random instance generation");
    app.add_option("--format", g.format, "Page output format: table, csv or tikz");

    std::string file, indices, from, to, kind = "polycomplex";
    bool reps = false, show = false, generic = false;
    std::optional<int> max_page, page;
    std::size_t k = 2, max_dim = 2;
    int extent = 3;

    auto* validate = app.add_subcommand("validate", "Parse and validate an instance file");
    validate->add_option("file", file)->required();
    auto* coh = app.add_subcommand("cohomology", "Cohomology of the total complex");
    coh->add_option("file", file)->required();
    coh->add_flag("--reps", reps, "Print representative cocycles");
    auto* total = app.add_subcommand("total", "Summands and differentials of the total complex");
    total->add_option("file", file)->required();
    total->add_flag("--show-matrices", show, "Print the differential matrices");
    auto* pages = app.add_subcommand("pages", "Pages of the spectral sequence of an index-subset filtration");
    pages->add_option("file", file)->required();
    pages->add_option("--indices", indices, "Index subset, e.g. 1,2");
    pages->add_option("--max-page", max_page, "Stop after this page");
    auto* converge = app.add_subcommand("converge", "Check convergence (all canonical filtrations by default)");
    converge->add_option("file", file)->required();
    converge->add_option("--indices", indices, "Index subset, e.g. 1,2");
    auto* edge = app.add_subcommand("edge", "Ranks of the edge morphisms");
    edge->add_option("file", file)->required();
    edge->add_option("--indices", indices, "Index subset, e.g. 1");
    auto* morphism = app.add_subcommand("morphism", "Morphism between nested index-subset filtrations");
    morphism->add_option("file", file)->required();
    morphism->add_option("--from", from, "Smaller index subset")->required();
    morphism->add_option("--to", to, "Larger index subset")->required();
    morphism->add_option("--page", page, "Only this page");
    auto* snake_cmd = app.add_subcommand("snake", "Six-term exact sequence of a snake diagram");
    snake_cmd->add_option("file", file)->required();
    auto* list = app.add_subcommand("list-filtrations", "List the canonical index-subset filtrations");
    list->add_option("file", file)->required();
    auto* random = app.add_subcommand("random", "Print a random valid instance (GF(2) unless --field is given)");
    random->add_option("--kind", kind, "polycomplex or snake")->check(CLI::IsMember({"polycomplex", "snake"}));
    random->add_option("--k", k, "Number of gradings")->check(CLI::Range(1, 6));
    random->add_option("--extent", extent, "Coordinates range over 0..extent-1")->check(CLI::Range(1, 8));
    random->add_option("--max-dim", max_dim, "Largest cell dimension")->check(CLI::Range(0, 6));
    random->add_flag("--generic", generic, "Use maps of maximal rank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*validate)
            return cmd_validate(file, g);
        if (*coh)
            return cmd_cohomology(file, reps, g);
        if (*total)
            return cmd_total(file, show, g);
        if (*pages)
            return cmd_pages(file, indices, max_page, g);
        if (*converge)
            return cmd_converge(file, indices, g);
        if (*edge)
            return cmd_edge(file, indices, g);
        if (*morphism)
            return cmd_morphism(file, from, to, page, g);
        if (*snake_cmd)
            return cmd_snake(file, g);
        if (*list)
            return cmd_list_filtrations(file, g);
        if (*random)
            return cmd_random(kind, k, extent, max_dim, generic, g);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error [internal-consistency]: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
