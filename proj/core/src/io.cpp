#include "johnsimplex/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace johnsimplex {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <Scalar S>
S parse_field(std::string_view field, std::size_t line) {
    try {
        return parse_scalar<S>(field);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

template <Scalar S>
PointSet<S> parse_csv(std::string_view text) {
    std::optional<PointSet<S>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::vector<S> coords;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const std::string_view field =
                trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (field.empty()) throw ParseError("empty field", line_no);
            coords.push_back(parse_field<S>(field, line_no));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!out) out.emplace(coords.size());
        if (coords.size() != out->dim()) {
            throw ParseError("expected " + std::to_string(out->dim()) + " coordinates, found " +
                                 std::to_string(coords.size()),
                             line_no);
        }
        out->add(Point<S>(std::move(coords)));
    }
    if (!out) throw ParseError("no points found", 0);
    return std::move(*out);
}

template <Scalar S>
S json_scalar(const nlohmann::json& v, std::size_t row) {
    if (v.is_string()) return parse_field<S>(v.get<std::string>(), 0);
    if (v.is_number_integer()) return S(v.get<long>());
    if (v.is_number()) return parse_field<S>(v.dump(), 0);
    throw ParseError("point " + std::to_string(row) + ": coordinate is not a number", 0);
}

template <Scalar S>
PointSet<S> parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw ParseError("expected an object with a \"points\" array", 0);
    }
    const auto& rows = doc["points"];
    std::size_t dim = 0;
    if (doc.contains("dim")) {
        if (!doc["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a positive integer", 0);
        dim = doc["dim"].get<std::size_t>();
    } else if (!rows.empty() && rows[0].is_array()) {
        dim = rows[0].size();
    }
    if (dim == 0) throw ParseError("point dimension must be positive", 0);

    PointSet<S> out(dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) throw ParseError("point " + std::to_string(r) + " is not an array", 0);
        if (rows[r].size() != dim) {
            throw ParseError("point " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                 " coordinates, dim is " + std::to_string(dim),
                             0);
        }
        std::vector<S> coords;
        coords.reserve(dim);
        for (const auto& v : rows[r]) coords.push_back(json_scalar<S>(v, r));
        out.add(Point<S>(std::move(coords)));
    }
    if (out.empty()) throw ParseError("no points found", 0);
    return out;
}

}  // namespace

std::string to_string(PointFormat format) { return format == PointFormat::Csv ? "csv" : "json"; }

PointFormat parse_point_format(std::string_view name) {
    if (name == "csv") return PointFormat::Csv;
    if (name == "json") return PointFormat::Json;
    throw InvalidArgument("unknown point format '" + std::string(name) + "'");
}

PointFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? PointFormat::Json : PointFormat::Csv;
}

template <Scalar S>
PointSet<S> parse_points_text(std::string_view text, PointFormat format) {
    return format == PointFormat::Csv ? parse_csv<S>(text) : parse_json<S>(text);
}

template <Scalar S>
PointSet<S> parse_points(const std::filesystem::path& path, std::optional<PointFormat> format) {
    return parse_points_text<S>(read_text_file(path), format.value_or(format_for_path(path)));
}

template <Scalar S>
std::string serialize_points(const PointSet<S>& points, PointFormat format) {
    if (format == PointFormat::Csv) {
        std::string out;
        for (const auto& p : points) {
            for (std::size_t k = 0; k < p.dim(); ++k) {
                if (k) out += ',';
                out += format_scalar(p[k]);
            }
            out += '\n';
        }
        return out;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : points) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if constexpr (is_exact_v<S>) {
                row.push_back(format_scalar(p[k]));
            } else {
                row.push_back(p[k]);
            }
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"dim", points.dim()}, {"points", std::move(rows)}};
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InvalidArgument("failed writing '" + path.string() + "'");
}

template PointSet<double> parse_points_text(std::string_view, PointFormat);
template PointSet<Rational> parse_points_text(std::string_view, PointFormat);
template PointSet<double> parse_points(const std::filesystem::path&, std::optional<PointFormat>);
template PointSet<Rational> parse_points(const std::filesystem::path&, std::optional<PointFormat>);
template std::string serialize_points(const PointSet<double>&, PointFormat);
template std::string serialize_points(const PointSet<Rational>&, PointFormat);

}  // namespace johnsimplex
