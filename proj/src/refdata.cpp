#include "haarbvp/refdata.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "refdata_embedded.hpp"

namespace haarbvp {

namespace {

constexpr char kHeader[] = "example,method,J,r,t,value";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::optional<int> parse_optional_int(const std::string& text, int line_no) {
    if (text.empty()) return std::nullopt;
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw Error("reference data line " + std::to_string(line_no) + ": bad integer '" +
                    text + "'");
    }
}

double parse_value(const std::string& text, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw Error("reference data line " + std::to_string(line_no) + ": bad number '" +
                    text + "'");
    return v;
}

}  // namespace

ReferenceData ReferenceData::from_csv_text(const std::string& text) {
    ReferenceData data;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kHeader)
                throw Error("reference data: expected header '" + std::string(kHeader) + "'");
            continue;
        }
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 6)
            throw Error("reference data line " + std::to_string(line_no) +
                        ": expected 6 fields, got " + std::to_string(f.size()));
        ReferenceRow row;
        row.example = static_cast<int>(parse_value(f[0], line_no));
        row.method = f[1];
        row.j_text = f[2];
        row.r_text = f[3];
        row.t_text = f[4];
        row.value_text = f[5];
        row.J = parse_optional_int(f[2], line_no);
        row.r = parse_optional_int(f[3], line_no);
        row.t = (f[4] == "inf") ? std::numeric_limits<double>::infinity()
                                : parse_value(f[4], line_no);
        row.value = parse_value(f[5], line_no);
        data.rows_.push_back(std::move(row));
    }
    return data;
}

ReferenceData ReferenceData::embedded() { return from_csv_text(kEmbeddedReferenceCsv); }

ReferenceData ReferenceData::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open reference data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv_text(buf.str());
}

ReferenceData ReferenceData::load() {
    if (const char* path = std::getenv(env_var()); path != nullptr && *path != '\0')
        return from_file(path);
    return embedded();
}

double ReferenceData::lookup(int example, const std::string& method, std::optional<int> J,
                             double t) const {
    for (const ReferenceRow& row : rows_) {
        if (row.example != example || row.method != method || row.J != J) continue;
        if (std::isinf(t) ? std::isinf(row.t) : std::abs(row.t - t) < 1e-12) return row.value;
    }
    std::ostringstream msg;
    msg << "no reference cell for example " << example << ", method " << method << ", J ";
    if (J) msg << *J; else msg << "-";
    msg << ", t " << t;
    throw MissingCell(msg.str());
}

ReferenceTable ReferenceData::table(int example, const std::string& method,
                                    std::optional<int> J) const {
    ReferenceTable tab;
    tab.example_id = example;
    tab.method = method;
    tab.J = J;
    for (const ReferenceRow& row : rows_) {
        if (row.example != example || row.method != method || row.J != J) continue;
        if (std::isinf(row.t)) {
            tab.r_inf = row.value;
            continue;
        }
        tab.r = row.r;
        tab.t.push_back(row.t);
        tab.values.push_back(row.value);
        tab.value_texts.push_back(row.value_text);
    }
    if (tab.values.empty()) {
        std::ostringstream msg;
        msg << "no reference table for example " << example << ", method " << method << ", J ";
        if (J) msg << *J; else msg << "-";
        throw MissingCell(msg.str());
    }
    return tab;
}

bool ReferenceData::has_table(int example, const std::string& method,
                              std::optional<int> J) const {
    for (const ReferenceRow& row : rows_)
        if (row.example == example && row.method == method && row.J == J && !std::isinf(row.t))
            return true;
    return false;
}

std::string ReferenceData::serialize() const {
    std::string out(kHeader);
    out.push_back('\n');
    for (const ReferenceRow& row : rows_) {
        out += std::to_string(row.example);
        out.push_back(',');
        out += row.method;
        out.push_back(',');
        out += row.j_text;
        out.push_back(',');
        out += row.r_text;
        out.push_back(',');
        out += row.t_text;
        out.push_back(',');
        out += row.value_text;
        out.push_back('\n');
    }
    return out;
}

ComparisonReport compare(const SolutionGrid& sol, const ReferenceTable& ref, double atol) {
    if (sol.eval_points.size() != ref.t.size())
        throw GridMismatch("solution evaluated at " + std::to_string(sol.eval_points.size()) +
                           " points, reference has " + std::to_string(ref.t.size()));
    for (size_t i = 0; i < ref.t.size(); ++i)
        if (std::abs(sol.eval_points[i] - ref.t[i]) > 1e-9)
            throw GridMismatch("evaluation grid does not match the reference grid");

    ComparisonReport report;
    report.atol = atol;
    report.diffs.reserve(ref.t.size());
    for (size_t i = 0; i < ref.t.size(); ++i) {
        const double d = std::abs(sol.y[i] - ref.values[i]);
        report.diffs.push_back(d);
        if (d > report.max_diff) report.max_diff = d;
    }
    report.pass = report.max_diff <= atol;
    return report;
}

}  // namespace haarbvp
