#include "ifr/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <system_error>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace ifr {
namespace {

std::string with_line(const std::string& message, std::size_t line) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ": " + message;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(const std::string& token, const std::string& what, std::size_t line) {
    std::string t = trim(token);
    if (t.empty()) throw ParseError(what + " is empty", line);
    double value = 0.0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || end != t.data() + t.size()) {
        throw ParseError(what + " is not a number: '" + t + "'", line);
    }
    if (!std::isfinite(value)) throw ParseError(what + " is not finite: '" + t + "'", line);
    return value;
}

void check_id(const std::string& id, std::size_t line) {
    if (id.empty()) throw ParseError("record id is empty", line);
    for (char c : id) {
        if (c == ';' || c == '#' || static_cast<unsigned char>(c) < 0x20) {
            throw ParseError("record id '" + id + "' contains a reserved character", line);
        }
    }
}

Trifn make_number(const std::vector<double>& a, double w, double u, const std::string& context,
                  std::size_t line) {
    try {
        if (a.size() == 3) return Trifn::triangular(a[0], a[1], a[2], w, u);
        return Trifn(a[0], a[1], a[2], a[3], w, u);
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what(), line);
    }
}

std::vector<DatasetRecord> parse_lines(const std::string& text) {
    std::vector<DatasetRecord> records;
    std::unordered_set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields = split(line, ';');
        if (fields.size() != 4) {
            throw ParseError("expected 4 ';'-separated fields (id; abscissae; w; u), got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        std::string id = trim(fields[0]);
        check_id(id, line_no);
        if (!seen.insert(id).second) throw ParseError("duplicate record id '" + id + "'", line_no);

        std::vector<std::string> parts = split(fields[1], ',');
        if (parts.size() != 3 && parts.size() != 4) {
            throw ParseError("expected 3 or 4 comma-separated abscissae, got " +
                                 std::to_string(parts.size()),
                             line_no);
        }
        std::vector<double> a;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            a.push_back(parse_number(parts[i], "abscissa " + std::to_string(i + 1), line_no));
        }
        double w = parse_number(fields[2], "membership degree w", line_no);
        double u = parse_number(fields[3], "non-membership degree u", line_no);
        records.push_back({id, make_number(a, w, u, "record '" + id + "'", line_no)});
    }
    return records;
}

std::vector<DatasetRecord> parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what(), 0);
    }
    if (!doc.is_array()) throw ParseError("json dataset must be an array of records", 0);

    std::vector<DatasetRecord> records;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const nlohmann::json& rec = doc[i];
        std::string context = "record " + std::to_string(i + 1);
        if (!rec.is_object()) throw ParseError(context + " is not an object", 0);
        for (const char* key : {"id", "a", "w", "u"}) {
            if (!rec.contains(key)) {
                throw ParseError(context + " is missing field '" + key + "'", 0);
            }
        }
        if (!rec["id"].is_string()) throw ParseError(context + ": 'id' must be a string", 0);
        std::string id = rec["id"].get<std::string>();
        check_id(id, 0);
        if (!seen.insert(id).second) throw ParseError(context + ": duplicate record id '" + id + "'", 0);
        context += " (id '" + id + "')";

        const nlohmann::json& arr = rec["a"];
        if (!arr.is_array() || (arr.size() != 3 && arr.size() != 4)) {
            throw ParseError(context + ": 'a' must be an array of 3 or 4 numbers", 0);
        }
        std::vector<double> a;
        for (const nlohmann::json& v : arr) {
            if (!v.is_number()) throw ParseError(context + ": 'a' must contain only numbers", 0);
            a.push_back(v.get<double>());
        }
        if (!rec["w"].is_number() || !rec["u"].is_number()) {
            throw ParseError(context + ": 'w' and 'u' must be numbers", 0);
        }
        records.push_back({id, make_number(a, rec["w"].get<double>(), rec["u"].get<double>(),
                                           context, 0)});
    }
    return records;
}

std::string render(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;  // shortest form of a finite double always fits
    return std::string(buf, end);
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(with_line(message, line)), line_(line) {}

std::vector<DatasetRecord> parse_dataset_text(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') return parse_json(text);
    return parse_lines(text);
}

std::vector<DatasetRecord> parse_dataset(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("could not read input", 0);
    return parse_dataset_text(buf.str());
}

std::string serialize_dataset(const std::vector<DatasetRecord>& records) {
    std::string out;
    for (const DatasetRecord& r : records) {
        const Trifn& n = r.number;
        out += r.id + "; " + render(n.a1()) + "," + render(n.a2()) + "," + render(n.a3()) + "," +
               render(n.a4()) + "; " + render(n.w()) + "; " + render(n.u()) + "\n";
    }
    return out;
}

std::string serialize_dataset_json(const std::vector<DatasetRecord>& records) {
    nlohmann::json doc = nlohmann::json::array();
    for (const DatasetRecord& r : records) {
        const Trifn& n = r.number;
        doc.push_back({{"id", r.id},
                       {"a", {n.a1(), n.a2(), n.a3(), n.a4()}},
                       {"w", n.w()},
                       {"u", n.u()}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace ifr
