#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haarbvp/errors.hpp"
#include "haarbvp/problem.hpp"

namespace haarbvp {

// One CSV record. Numeric fields keep their verbatim text so the store can be
// serialized back byte-identically.
struct ReferenceRow {
    int example = 0;
    std::string method;          // "qlm", "newton" or "ealgo"
    std::optional<int> J;
    std::optional<int> r;
    double t = 0.0;              // +inf marks a residual-norm record
    double value = 0.0;
    std::string j_text;
    std::string r_text;
    std::string t_text;
    std::string value_text;
};

// One published column: y values over the report grid plus the optional
// residual norm.
struct ReferenceTable {
    int example_id = 0;
    std::string method;
    std::optional<int> J;
    std::optional<int> r;
    std::vector<double> t;
    std::vector<double> values;
    std::vector<std::string> value_texts;
    std::optional<double> r_inf;
};

class ReferenceData {
  public:
    static const char* env_var() { return "HAARBVP_REFDATA"; }

    static ReferenceData embedded();
    static ReferenceData from_csv_text(const std::string& text);
    static ReferenceData from_file(const std::string& path);
    // File named by the environment override when set, embedded data otherwise.
    static ReferenceData load();

    double lookup(int example, const std::string& method, std::optional<int> J, double t) const;
    ReferenceTable table(int example, const std::string& method, std::optional<int> J) const;
    bool has_table(int example, const std::string& method, std::optional<int> J) const;

    std::string serialize() const;
    const std::vector<ReferenceRow>& rows() const { return rows_; }

  private:
    std::vector<ReferenceRow> rows_;
};

struct ComparisonReport {
    std::vector<double> diffs;
    double max_diff = 0.0;
    double atol = 0.0;
    bool pass = false;
};

ComparisonReport compare(const SolutionGrid& sol, const ReferenceTable& ref, double atol);

}  // namespace haarbvp
