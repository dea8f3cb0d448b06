#pragma once

// Algebra spec parsing (inline lists, JSON, a TOML subset) and report
// serialization.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace nsalg::io {

using Json = nlohmann::ordered_json;

struct AlgebraSpec {
    std::vector<Rat> coefficient;
    std::vector<Rat> extension;
    Rat scale{1};
    std::optional<std::string> label;

    AlgebraPair to_pair() const { return AlgebraPair::make(coefficient, extension, scale); }
};

/// "16,24, 35/2" -> rationals.
inline std::vector<Rat> parse_rat_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(Rat::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace detail {

inline Rat rat_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<Int>());
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    throw Error(ErrorCode::ParseError, where + ": expected a rational string or integer");
}

inline std::vector<Rat> rat_list_from_json(const Json& v, const std::string& where) {
    if (v.is_string()) return parse_rat_list(v.get<std::string>());
    if (!v.is_array()) throw Error(ErrorCode::ParseError, where + ": expected an array");
    std::vector<Rat> out;
    for (const auto& item : v) out.push_back(rat_from_json(item, where));
    return out;
}

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline AlgebraSpec spec_from_json(const Json& j, const std::string& where = "spec") {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, where + ": expected a JSON object");
    AlgebraSpec spec;
    if (!j.contains("coefficient")) throw Error(ErrorCode::ParseError, where + ": missing 'coefficient'");
    if (!j.contains("extension")) throw Error(ErrorCode::ParseError, where + ": missing 'extension'");
    spec.coefficient = detail::rat_list_from_json(j.at("coefficient"), where + ": coefficient");
    spec.extension = detail::rat_list_from_json(j.at("extension"), where + ": extension");
    if (j.contains("scale")) spec.scale = detail::rat_from_json(j.at("scale"), where + ": scale");
    if (j.contains("label") && !j.at("label").is_null()) {
        if (!j.at("label").is_string()) throw Error(ErrorCode::ParseError, where + ": label must be a string");
        spec.label = j.at("label").get<std::string>();
    }
    return spec;
}

inline AlgebraSpec spec_from_json_text(const std::string& text, const std::string& where = "spec") {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }
    return spec_from_json(j, where);
}

/// Reads the TOML subset used for specs: `key = value` lines where value is
/// a quoted string, an integer, or a (possibly multi-line) array of those.
/// `#` starts a comment outside strings.
inline AlgebraSpec spec_from_toml_text(const std::string& text, const std::string& where = "spec") {
    Json j = Json::object();
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto strip_comment = [](const std::string& s) {
        bool quoted = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '"') quoted = !quoted;
            if (s[i] == '#' && !quoted) return s.substr(0, i);
        }
        return s;
    };
    auto fail = [&](int ln, const std::string& why) -> Error {
        return Error(ErrorCode::ParseError, where + ":" + std::to_string(ln) + ": " + why);
    };
    auto scalar = [&](const std::string& raw, int ln) -> Json {
        const auto v = detail::trim(raw);
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
        try {
            std::size_t used = 0;
            const long long value = std::stoll(v, &used);
            if (used == v.size()) return static_cast<Int>(value);
        } catch (const std::exception&) {
        }
        throw fail(ln, "unsupported value '" + v + "'");
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto content = detail::trim(strip_comment(line));
        if (content.empty()) continue;
        if (content.front() == '[') throw fail(line_no, "tables are not supported");
        const auto eq = content.find('=');
        if (eq == std::string::npos) throw fail(line_no, "expected 'key = value'");
        const auto key = detail::trim(content.substr(0, eq));
        auto value = detail::trim(content.substr(eq + 1));
        const int start_line = line_no;
        if (!value.empty() && value.front() == '[') {
            while (value.find(']') == std::string::npos) {
                if (!std::getline(in, line)) throw fail(start_line, "unterminated array");
                ++line_no;
                value += " " + detail::trim(strip_comment(line));
            }
            const auto close = value.find(']');
            if (!detail::trim(value.substr(close + 1)).empty()) throw fail(line_no, "trailing characters after array");
            Json arr = Json::array();
            const auto inner = value.substr(1, close - 1);
            std::size_t pos = 0;
            while (pos <= inner.size()) {
                const auto comma = inner.find(',', pos);
                const auto item = detail::trim(inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
                if (!item.empty()) arr.push_back(scalar(item, start_line));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            j[key] = arr;
        } else {
            j[key] = scalar(value, start_line);
        }
    }
    return spec_from_json(j, where);
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// Picks the format from the extension (.toml / .json); otherwise sniffs for '{'.
inline AlgebraSpec load_spec_file(const std::string& path) {
    const auto text = read_file(path);
    const bool toml = path.size() > 5 && path.substr(path.size() - 5) == ".toml";
    const bool json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
    if (toml) return spec_from_toml_text(text, path);
    if (json) return spec_from_json_text(text, path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return spec_from_json_text(text, path);
    return spec_from_toml_text(text, path);
}

inline Json rat_list_json(const std::vector<Rat>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

inline Json matrix_json(const IntMatrix& m) {
    Json arr = Json::array();
    for (const auto& row : m.rows()) arr.push_back(row);
    return arr;
}

inline Json rectangle_json(const RectangleAnalysis& ra) {
    Json r = Json::object();
    r["sizes"] = ra.rectangle.sizes;
    if (ra.matrix) {
        r["matrix"] = matrix_json(ra.matrix->matrix);
        r["t"] = ra.matrix->t;
        r["det"] = ra.matrix->det;
        r["nonsingular"] = is_nonsingular(*ra.matrix);
        if (ra.triangular_permutation) {
            r["triangular_permutation"] = *ra.triangular_permutation;
        } else {
            r["triangular_permutation"] = nullptr;
        }
    }
    return r;
}

/// Report with the stable key order used by every subcommand and batch mode.
inline Json report_json(const ClassificationReport& rep, const std::optional<std::string>& label) {
    Json j = Json::object();
    j["label"] = label ? Json(*label) : Json(nullptr);
    j["coefficient"] = rat_list_json(rep.coefficient);
    j["extension"] = rat_list_json(rep.extension);
    j["scale"] = rep.scale_t.str();
    j["exponent_scale"] = rep.common_scale;
    j["d"] = rep.d;
    j["d_prime"] = rep.d_prime;
    j["apery"] = rep.apery.exponents;
    j["minimal_monomials"] = rep.minimal_monomials;
    j["flat"] = rep.flat.is_flat;
    j["flat_witness"] = rep.flat.witness ? Json(rep.flat.witness->exponent) : Json(nullptr);
    Json rects = Json::array();
    for (const auto& ra : rep.rectangles) rects.push_back(rectangle_json(ra));
    j["rectangular"] = rep.rectangular();
    j["rectangles"] = rects;
    j["gorenstein_indicator"] = rep.gorenstein_indicator;
    j["ci"] = std::string(to_string(rep.ci));
    Json just = Json::array();
    for (Rule r : rep.justification) just.push_back(std::string(to_string(r)));
    j["justification"] = just;
    if (rep.ci == CiVerdict::Unknown) j["unknown_reason"] = rep.unknown_reason;
    return j;
}

}  // namespace nsalg::io
