#include "cremona/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cremona {

namespace {

const Integer kInt64Min = Integer(std::numeric_limits<std::int64_t>::min());
const Integer kInt64Max = Integer(std::numeric_limits<std::int64_t>::max());

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
    }
    throw std::runtime_error(where + ": expected an integer or integer string");
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
    }
    throw std::runtime_error(where + ": expected a rational \"p/q\" string or integer");
}

}  // namespace

Json json_integer(const Integer& v) {
    if (v >= kInt64Min && v <= kInt64Max) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

Json json_rational(const Rational& v) {
    return Json(to_string(v));
}

Json json_integer_array(const std::vector<Integer>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(json_integer(x));
    return arr;
}

Json polytope_to_json(const VPolytope& p) {
    Json j;
    j["dimension"] = p.dimension();
    Json vertices = Json::array();
    for (const auto& v : p.vertices()) {
        Json point = Json::array();
        for (const auto& coord : v) point.push_back(json_rational(coord));
        vertices.push_back(std::move(point));
    }
    j["vertices"] = std::move(vertices);
    return j;
}

VPolytope polytope_from_json(const Json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices")) {
        throw std::runtime_error(context +
                                 ": polytope JSON needs \"dimension\" and \"vertices\"");
    }
    if (!j["dimension"].is_number_integer() || j["dimension"].get<std::int64_t>() < 1) {
        throw std::runtime_error(context + ": \"dimension\" must be a positive integer");
    }
    const std::size_t n = j["dimension"].get<std::size_t>();
    if (!j["vertices"].is_array() || j["vertices"].empty()) {
        throw std::runtime_error(context + ": \"vertices\" must be a nonempty array");
    }
    std::vector<Point> points;
    points.reserve(j["vertices"].size());
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const Json& row = j["vertices"][i];
        std::ostringstream where;
        where << context << ": vertex " << i;
        if (!row.is_array() || row.size() != n) {
            throw std::runtime_error(where.str() + " must be an array of " +
                                     std::to_string(n) + " coordinates");
        }
        Point p(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::ostringstream coord_where;
            coord_where << where.str() << ", coordinate " << c;
            p[c] = rational_from_json(row[c], coord_where.str());
        }
        points.push_back(std::move(p));
    }
    return VPolytope(n, std::move(points));
}

LinearFormMatrix matrix_from_json(const Json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw std::runtime_error(context + ": matrix JSON needs \"n\" and \"rows\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1) {
        throw std::runtime_error(context + ": \"n\" must be a positive integer");
    }
    const int n = j["n"].get<int>();
    if (!j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(n + 1)) {
        throw std::runtime_error(context + ": \"rows\" must be an array of n+1 rows");
    }
    std::vector<std::vector<LinearForm>> rows;
    rows.reserve(n + 1);
    for (int r = 0; r <= n; ++r) {
        const Json& row = j["rows"][r];
        std::ostringstream row_where;
        row_where << context << ": row " << r;
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw std::runtime_error(row_where.str() + " must list n linear forms");
        }
        std::vector<LinearForm> forms;
        forms.reserve(n);
        for (int c = 0; c < n; ++c) {
            const Json& form = row[c];
            std::ostringstream form_where;
            form_where << row_where.str() << ", form " << c;
            if (!form.is_array() || form.size() != static_cast<std::size_t>(n + 1)) {
                throw std::runtime_error(form_where.str() + " must list n+1 coefficients");
            }
            std::vector<Integer> coeffs(n + 1);
            for (int k = 0; k <= n; ++k) {
                std::ostringstream coeff_where;
                coeff_where << form_where.str() << ", coefficient " << k;
                coeffs[k] = integer_from_json(form[k], coeff_where.str());
            }
            forms.emplace_back(std::move(coeffs));
        }
        rows.push_back(std::move(forms));
    }
    return LinearFormMatrix(n, std::move(rows));
}

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        const std::size_t stop = std::min(e.byte, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') ++line;
        }
        std::ostringstream msg;
        msg << path << ":" << line << ": " << e.what();
        throw std::runtime_error(msg.str());
    }
}

}  // namespace

VPolytope load_polytope(const std::string& path) {
    return polytope_from_json(parse_file(path), path);
}

LinearFormMatrix load_matrix(const std::string& path) {
    return matrix_from_json(parse_file(path), path);
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += "\"\"";
        else quoted += ch;
    }
    quoted += "\"";
    return quoted;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += csv_escape(prefix.empty() ? "value" : prefix);
        out += ",";
        out += csv_escape(scalar_text(j));
        out += "\n";
    }
}

}  // namespace

std::string csv_from_json(const Json& j) {
    std::string out = "key,value\n";
    flatten(j, "", out);
    return out;
}

}  // namespace cremona
