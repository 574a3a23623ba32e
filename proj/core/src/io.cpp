#include "polyss/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polyss/error.hpp"

namespace polyss {

using Json = nlohmann::ordered_json;

const Polycomplex& Instance::polycomplex() const
{
    if (auto v = std::get_if<Polycomplex>(&content))
        return *v;
    fail(ErrorKind::parse, "instance holds a snake diagram, not a polycomplex");
}

const SnakeDiagram& Instance::snake() const
{
    if (auto s = std::get_if<SnakeDiagram>(&content))
        return *s;
    fail(ErrorKind::parse, "instance holds a polycomplex, not a snake diagram");
}

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what)
{
    fail(ErrorKind::parse, where + ": " + what);
}

void allow_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys)
{
    if (!obj.is_object())
        parse_error(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
            parse_error(where, "unknown key '" + key + "'");
    }
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        parse_error(where, std::string("missing key '") + key + "'");
    return *it;
}

std::size_t as_size(const Json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        parse_error(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

FieldSpec field_from_json(const Json& j, const std::string& where)
{
    allow_keys(j, where, {"kind", "p"});
    const auto& kind = require(j, "kind", where);
    if (!kind.is_string())
        parse_error(where + ".kind", "expected a string");
    if (kind == "rational") {
        if (j.contains("p"))
            parse_error(where, "'p' is only allowed for prime fields");
        return FieldSpec::rationals();
    }
    if (kind == "prime")
        return FieldSpec::prime(as_size(require(j, "p", where), where + ".p"));
    parse_error(where + ".kind", "expected \"prime\" or \"rational\"");
}

Json field_to_json(const FieldSpec& f)
{
    Json j;
    if (f.is_prime()) {
        j["kind"] = "prime";
        j["p"] = f.characteristic();
    } else {
        j["kind"] = "rational";
    }
    return j;
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j, const std::string& where)
{
    try {
        if (j.is_string())
            return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer())
            return Scalar::parse(f, j.dump());
    } catch (const Error& e) {
        parse_error(where, e.what());
    }
    parse_error(where, "expected a string or integer entry");
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array())
        parse_error(where, "expected an array of rows");
    Matrix m(f, rows, cols);
    if (j.empty() && (rows == 0 || cols == 0))
        return m;
    if (j.size() != rows)
        fail(ErrorKind::shape, where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array())
            parse_error(where + "[" + std::to_string(i) + "]", "expected an array");
        if (row.size() != cols)
            fail(ErrorKind::shape, where + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) + " entries, got " +
                                       std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, scalar_from_json(f, row[c], where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    }
    return m;
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(i, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

MultiDegree degree_from_json(const Json& j, std::size_t k, const std::string& where)
{
    if (!j.is_array() || j.size() != k)
        parse_error(where, "expected an array of " + std::to_string(k) + " coordinates");
    std::vector<int> c;
    for (std::size_t i = 0; i < k; ++i) {
        if (!j[i].is_number_integer() || j[i].get<long long>() < 0)
            parse_error(where + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        c.push_back(j[i].get<int>());
    }
    return MultiDegree(std::move(c));
}

Polycomplex polycomplex_from_json(const Json& doc, const FieldSpec& f)
{
    const std::size_t k = as_size(require(doc, "k", "$"), "$.k");
    if (k == 0)
        parse_error("$.k", "k must be at least 1");
    Polycomplex v(f, k);
    const auto& cells = require(doc, "cells", "$");
    if (!cells.is_array())
        parse_error("$.cells", "expected an array");
    std::set<MultiDegree> seen;
    for (std::size_t n = 0; n < cells.size(); ++n) {
        const std::string where = "$.cells[" + std::to_string(n) + "]";
        allow_keys(cells[n], where, {"deg", "dim"});
        auto x = degree_from_json(require(cells[n], "deg", where), k, where + ".deg");
        if (!seen.insert(x).second)
            parse_error(where, "duplicate cell " + x.to_string());
        v.set_dim(x, as_size(require(cells[n], "dim", where), where + ".dim"));
    }
    if (auto it = doc.find("diff"); it != doc.end()) {
        if (!it->is_array())
            parse_error("$.diff", "expected an array");
        std::set<std::pair<std::size_t, MultiDegree>> maps_seen;
        for (std::size_t n = 0; n < it->size(); ++n) {
            const auto& e = (*it)[n];
            const std::string where = "$.diff[" + std::to_string(n) + "]";
            allow_keys(e, where, {"i", "from", "matrix"});
            const std::size_t i = as_size(require(e, "i", where), where + ".i");
            if (i < 1 || i > k)
                parse_error(where + ".i", "differential index outside 1.." + std::to_string(k));
            auto from = degree_from_json(require(e, "from", where), k, where + ".from");
            if (!maps_seen.insert({i, from}).second)
                parse_error(where, "duplicate map");
            Matrix m = matrix_from_json(f, require(e, "matrix", where), v.dim(from.shifted(i)), v.dim(from), where + ".matrix");
            v.set_partial(i, from, std::move(m));
        }
    }
    if (auto bad = validate_polycomplex(v))
        fail(ErrorKind::axiom, "axiom violation at (i, j, x) = (" + std::to_string(bad->i) + ", " + std::to_string(bad->j) + ", " +
                                   bad->x.to_string() + "): " + bad->message);
    return v;
}

constexpr const char* kSnakeSpaces[] = {"A", "B", "C", "D", "E", "F"};

SnakeDiagram snake_from_json(const Json& j, const FieldSpec& f)
{
    allow_keys(j, "$.snake", {"dims", "maps"});
    const auto& dims_json = require(j, "dims", "$.snake");
    allow_keys(dims_json, "$.snake.dims", {"A", "B", "C", "D", "E", "F"});
    std::map<std::string, std::size_t> dims;
    for (const char* s : kSnakeSpaces)
        dims[s] = as_size(require(dims_json, s, "$.snake.dims"), std::string("$.snake.dims.") + s);
    Json maps = j.contains("maps") ? j.at("maps") : Json::object();
    allow_keys(maps, "$.snake.maps", {"A->B", "B->C", "D->E", "E->F", "alpha", "beta", "gamma"});
    auto read = [&](const char* name, const char* from, const char* to) {
        std::string where = std::string("$.snake.maps.") + name;
        auto it = maps.find(name);
        if (it == maps.end())
            return Matrix(f, dims[to], dims[from]);
        return matrix_from_json(f, *it, dims[to], dims[from], where);
    };
    SnakeDiagram s{f,
                   read("A->B", "A", "B"),
                   read("B->C", "B", "C"),
                   read("D->E", "D", "E"),
                   read("E->F", "E", "F"),
                   read("alpha", "A", "D"),
                   read("beta", "B", "E"),
                   read("gamma", "C", "F")};
    validate_snake(s);
    return s;
}

// Two levels of indentation; anything deeper stays on one line.
std::string layout(const Json& doc)
{
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : doc.items()) {
        out += "  " + Json(key).dump() + ": ";
        if ((value.is_array() || value.is_object()) && !value.empty()) {
            const bool arr = value.is_array();
            out += arr ? "[\n" : "{\n";
            std::size_t j = 0;
            for (const auto& [inner_key, inner] : value.items()) {
                out += "    ";
                if (!arr)
                    out += Json(inner_key).dump() + ": ";
                out += inner.dump();
                out += ++j < value.size() ? ",\n" : "\n";
            }
            out += arr ? "  ]" : "  }";
        } else {
            out += value.dump();
        }
        out += ++i < doc.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

} // namespace

Instance parse_instance(std::string_view text, std::optional<FieldSpec> field_override)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
    }
    allow_keys(doc, "$", {"schema_version", "field", "k", "cells", "diff", "filtration", "snake"});
    Instance inst{kSchemaVersion, FieldSpec::rationals(), Polycomplex(FieldSpec::rationals(), 1), std::nullopt};
    if (auto it = doc.find("schema_version"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != kSchemaVersion)
            parse_error("$.schema_version", std::string("unsupported schema version (expected \"") + kSchemaVersion + "\")");
    }
    inst.field = field_override ? *field_override : field_from_json(require(doc, "field", "$"), "$.field");
    if (field_override && doc.contains("field"))
        (void)field_from_json(doc.at("field"), "$.field");

    if (doc.contains("snake")) {
        for (const char* key : {"k", "cells", "diff", "filtration"})
            if (doc.contains(key))
                parse_error("$", std::string("'") + key + "' is not allowed in a snake instance");
        inst.content = snake_from_json(doc.at("snake"), inst.field);
        return inst;
    }
    inst.content = polycomplex_from_json(doc, inst.field);
    if (auto it = doc.find("filtration"); it != doc.end()) {
        allow_keys(*it, "$.filtration", {"indices"});
        const auto& idx = require(*it, "indices", "$.filtration");
        if (!idx.is_array())
            parse_error("$.filtration.indices", "expected an array");
        std::vector<std::size_t> a;
        for (std::size_t n = 0; n < idx.size(); ++n)
            a.push_back(as_size(idx[n], "$.filtration.indices[" + std::to_string(n) + "]"));
        inst.filtration = checked_index_subset(std::move(a), inst.polycomplex().k());
    }
    return inst;
}

Instance read_instance(const std::filesystem::path& path, std::optional<FieldSpec> field_override)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::parse, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str(), field_override);
}

std::string serialize_instance(const Instance& instance)
{
    Json doc;
    doc["schema_version"] = instance.schema_version;
    doc["field"] = field_to_json(instance.field);
    if (instance.is_snake()) {
        const auto& s = instance.snake();
        Json dims;
        const std::size_t values[] = {s.dim_a(), s.dim_b(), s.dim_c(), s.dim_d(), s.dim_e(), s.dim_f()};
        for (std::size_t i = 0; i < 6; ++i)
            dims[kSnakeSpaces[i]] = values[i];
        Json maps;
        maps["A->B"] = matrix_to_json(s.bottom_left);
        maps["B->C"] = matrix_to_json(s.bottom_right);
        maps["D->E"] = matrix_to_json(s.top_left);
        maps["E->F"] = matrix_to_json(s.top_right);
        maps["alpha"] = matrix_to_json(s.alpha);
        maps["beta"] = matrix_to_json(s.beta);
        maps["gamma"] = matrix_to_json(s.gamma);
        doc["snake"] = {{"dims", dims}, {"maps", maps}};
        return layout(doc);
    }
    const auto& v = instance.polycomplex();
    doc["k"] = v.k();
    Json cells = Json::array();
    for (const auto& [x, d] : v.cells())
        cells.push_back({{"deg", x.coords()}, {"dim", d}});
    doc["cells"] = std::move(cells);
    Json diff = Json::array();
    for (const auto& [key, m] : v.partials()) {
        if (m.is_zero())
            continue;
        diff.push_back({{"i", key.first}, {"from", key.second.coords()}, {"matrix", matrix_to_json(m)}});
    }
    doc["diff"] = std::move(diff);
    if (instance.filtration)
        doc["filtration"] = {{"indices", *instance.filtration}};
    return layout(doc);
}

FieldSpec parse_field(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "rational" || s == "rationals" || s == "q")
        return FieldSpec::rationals();
    std::string digits = s;
    for (const char* prefix : {"prime:", "gf", "gf("}) {
        if (s.rfind(prefix, 0) == 0)
            digits = s.substr(std::string_view(prefix).size());
    }
    if (!digits.empty() && digits.back() == ')')
        digits.pop_back();
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(ErrorKind::parse, "unrecognized field '" + std::string(text) + "'");
    return FieldSpec::prime(std::stoull(digits));
}

std::vector<std::size_t> parse_index_list(std::string_view text)
{
    std::vector<std::size_t> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail(ErrorKind::invalid_subset, "malformed index list '" + std::string(text) + "'");
        out.push_back(std::stoul(item));
    }
    if (out.empty())
        fail(ErrorKind::invalid_subset, "empty index list");
    return out;
}

} // namespace polyss
