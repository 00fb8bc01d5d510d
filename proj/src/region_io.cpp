#include "tricontain/region_io.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tricontain/errors.hpp"

namespace tricontain::io {

namespace {

struct Field {
    int line = 0;
    bool is_array = false;
    double scalar = 0.0;
    std::vector<double> array;
    std::string raw; // for non-numeric values (kind, family)
};

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_number(const std::string& text, int line, const std::string& field) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError(line, field, "empty numeric value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ParseError(line, field, "not a number: '" + t + "'");
    return v;
}

std::vector<double> parse_array(const std::string& text, int line, const std::string& field) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(line, field, "expected an array like [a, b, ...]");
    std::vector<double> out;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line, field));
    return out;
}

using Fields = std::map<std::string, Field>;

Fields read_fields(std::istream& in) {
    Fields fields;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "", "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "", "missing key before '='");
        if (fields.count(key)) throw ParseError(lineno, key, "duplicate field");
        Field f;
        f.line = lineno;
        f.raw = value;
        if (!value.empty() && value.front() == '[') {
            f.is_array = true;
            f.array = parse_array(value, lineno, key);
        }
        fields[key] = f;
    }
    return fields;
}

const Field& require(const Fields& fields, const std::string& key) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(0, key, "missing required field");
    return it->second;
}

double require_scalar(const Fields& fields, const std::string& key) {
    const Field& f = require(fields, key);
    if (f.is_array) throw ParseError(f.line, key, "expected a scalar, got an array");
    return parse_number(f.raw, f.line, key);
}

std::string require_word(const Fields& fields, const std::string& key) {
    const Field& f = require(fields, key);
    if (f.is_array) throw ParseError(f.line, key, "expected a word, got an array");
    return f.raw;
}

void reject_unknown(const Fields& fields, std::initializer_list<const char*> allowed) {
    for (const auto& [key, field] : fields) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError(field.line, key, "unknown field");
    }
}

Region build_polar(const Fields& fields) {
    const std::string family = require_word(fields, "family");
    if (family == "limacon") {
        reject_unknown(fields, {"kind", "family", "a", "anchor"});
        return Region::limacon(require_scalar(fields, "a"));
    }
    if (family == "circle") {
        reject_unknown(fields, {"kind", "family", "R", "anchor"});
        return Region::circle(require_scalar(fields, "R"));
    }
    throw ParseError(require(fields, "family").line, "family",
                     "unknown polar family '" + family + "'");
}

Region build_slices(const Fields& fields) {
    const std::string family = require_word(fields, "family");
    if (family == "crescent") {
        reject_unknown(fields, {"kind", "family", "anchor"});
        return Region::crescent();
    }
    throw ParseError(require(fields, "family").line, "family",
                     "unknown slices family '" + family + "'");
}

RegionSpec assemble(const Fields& fields) {
    const std::string kind = require_word(fields, "kind");
    AnchorPoint anchor{0.0, 0.0};
    if (const auto it = fields.find("anchor"); it != fields.end()) {
        if (!it->second.is_array || it->second.array.size() != 2)
            throw ParseError(it->second.line, "anchor", "expected [x, y]");
        anchor = {it->second.array[0], it->second.array[1]};
    }

    if (kind == "polygon") {
        reject_unknown(fields, {"kind", "vertices", "anchor"});
        const Field& vf = require(fields, "vertices");
        if (!vf.is_array) throw ParseError(vf.line, "vertices", "expected an array");
        if (vf.array.size() < 6 || vf.array.size() % 2 != 0)
            throw ParseError(vf.line, "vertices",
                             "need an even count of at least 6 coordinates");
        std::vector<Vec2> vs;
        for (std::size_t i = 0; i < vf.array.size(); i += 2)
            vs.push_back({vf.array[i], vf.array[i + 1]});
        return {Region::polygon(std::move(vs)), anchor};
    }
    if (kind == "polar") return {build_polar(fields), anchor};
    if (kind == "slices") return {build_slices(fields), anchor};
    if (kind == "disk_slice") {
        reject_unknown(fields, {"kind", "a", "anchor"});
        return {Region::disk_slice(require_scalar(fields, "a")), anchor};
    }
    if (kind == "offset_disk") {
        reject_unknown(fields, {"kind", "r", "anchor"});
        return {Region::offset_disk(require_scalar(fields, "r")), anchor};
    }
    throw ParseError(require(fields, "kind").line, "kind", "unknown kind '" + kind + "'");
}

} // namespace

RegionSpec parse_region_file(std::istream& in) { return assemble(read_fields(in)); }

RegionSpec parse_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "", "cannot open region file: " + path);
    return parse_region_file(in);
}

RegionSpec parse_inline_region(const std::string& text) {
    const std::string t = trim(text);
    std::string name = t;
    std::map<std::string, double> params;
    if (const std::size_t colon = t.find(':'); colon != std::string::npos) {
        name = trim(t.substr(0, colon));
        std::stringstream ss(t.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw ParseError(0, "region", "expected key=value after ':' in '" + t + "'");
            const std::string key = trim(item.substr(0, eq));
            if (params.count(key)) throw ParseError(0, key, "duplicate parameter");
            params[key] = parse_number(item.substr(eq + 1), 0, key);
        }
    }
    auto only = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : params) {
            bool ok = false;
            for (const char* a : allowed)
                if (key == a) ok = true;
            if (!ok) throw ParseError(0, key, "unknown parameter for region '" + name + "'");
        }
    };
    auto need = [&](const char* key) -> double {
        const auto it = params.find(key);
        if (it == params.end())
            throw ParseError(0, key, "region '" + name + "' needs parameter " +
                                         std::string(key) + "=...");
        return it->second;
    };

    if (name == "square") {
        only({});
        return {Region::unit_square(), {0.0, 0.0}};
    }
    if (name == "disk") {
        only({});
        return {Region::disk(), {0.0, 0.0}};
    }
    if (name == "crescent") {
        only({});
        return {Region::crescent(), {0.0, 0.0}};
    }
    if (name == "triangle") {
        only({});
        return {Region::equilateral_triangle(), {0.0, 0.0}};
    }
    if (name == "limacon") {
        only({"a"});
        return {Region::limacon(need("a")), {0.0, 0.0}};
    }
    if (name == "circle") {
        only({"R"});
        return {Region::circle(need("R")), {0.0, 0.0}};
    }
    if (name == "regular-polygon") {
        only({"m"});
        const double m = need("m");
        if (m != static_cast<int>(m)) throw ParseError(0, "m", "m must be an integer");
        return {Region::regular_polygon(static_cast<int>(m)), {0.0, 0.0}};
    }
    if (name == "disk-slice") {
        only({"a"});
        return {Region::disk_slice(need("a")), {0.0, 0.0}};
    }
    if (name == "offset-disk") {
        only({"r"});
        return {Region::offset_disk(need("r")), {0.0, 0.0}};
    }
    throw ParseError(0, "region",
                     "unknown region '" + name +
                         "' (not a file, and not one of: square, disk, crescent, triangle, "
                         "limacon:a=, circle:R=, regular-polygon:m=, disk-slice:a=, "
                         "offset-disk:r=)");
}

RegionSpec resolve_region(const std::string& text) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return parse_region_file(text);
    return parse_inline_region(text);
}

} // namespace tricontain::io
