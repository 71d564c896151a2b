#include "schubkit/io.hpp"

#include <sstream>

#include <json.hpp>

namespace schubkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(); }

}  // namespace

std::string to_json(const Diagram& d) {
    ordered_json j;
    j["n_rows"] = d.n_rows;
    j["columns"] = d.columns;
    return dump(j);
}

std::string to_json(const SparsePoly& f) {
    ordered_json j;
    j["n_vars"] = f.n_vars();
    ordered_json terms = ordered_json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        ordered_json t;
        t["exp"] = exp;
        t["coeff"] = coeff.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return dump(j);
}

std::string to_json(const SupportSet& s) {
    ordered_json j;
    j["n_vars"] = s.n_vars;
    ordered_json points = ordered_json::array();
    for (const auto& p : s.points) points.push_back(p);
    j["points"] = std::move(points);
    return dump(j);
}

std::string to_json(const BoundReport& r) {
    ordered_json j;
    j["subject"] = r.subject;
    j["lhs"] = r.lhs.get_str();
    j["rhs"] = r.rhs.get_str();
    j["holds"] = r.holds;
    j["detail"] = r.detail;
    return dump(j);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string sweep_csv_header() {
    return "n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,"
           "staircase_upper\n";
}

std::string sweep_csv(const std::vector<SweepCsvRow>& rows) {
    std::ostringstream out;
    out << sweep_csv_header();
    for (const auto& [row, corollary_bound] : rows) {
        std::string maxers;
        for (std::size_t i = 0; i < row.maximizers.size(); ++i) {
            if (i) maxers += ';';
            maxers += to_string(row.maximizers[i]);
        }
        out << row.n << ',' << row.beta.get_str() << ',' << row.maximizers.size() << ','
            << csv_quote(maxers) << ',' << decimal_ln(row.beta) << ',' << row.normalized_gap << ','
            << csv_quote(corollary_bound) << ',' << decimal_ln_factorial(row.n) << '\n';
    }
    return out.str();
}

std::string beta_sweep_csv(int n_max, PolyKind kind, const SweepOptions& opts) {
    std::vector<SweepCsvRow> rows;
    for (auto& row : beta_sweep(n_max, kind, opts)) {
        std::string bound;
        if (kind == PolyKind::Schubert) {
            if (row.n >= 3) bound = corollary_product_bound(row.n).get_str();
        } else {
            bound = crude_groth_rhs(layered(groth_construction(row.n))).get_str();
        }
        rows.push_back({std::move(row), std::move(bound)});
    }
    return sweep_csv(rows);
}

std::string asymptotic_table_csv(int n_max, const SweepOptions& opts) {
    std::vector<SweepCsvRow> rows;
    for (auto& row : beta_sweep(n_max, PolyKind::Schubert, opts)) {
        std::string bound;
        if (row.n >= 3) bound = corollary_analytic_bound(row.n);
        rows.push_back({std::move(row), std::move(bound)});
    }
    return sweep_csv(rows);
}

}  // namespace schubkit
