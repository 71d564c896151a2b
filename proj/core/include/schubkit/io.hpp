#pragma once

#include <string>
#include <vector>

#include "schubkit/bounds.hpp"
#include "schubkit/diagram.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

namespace schubkit {

// Canonical JSON renderings.  Key order is fixed, element order follows the
// container's canonical (sorted) order, and all big integers are decimal
// strings, so equal values always serialize to identical bytes.
std::string to_json(const Diagram& d);
std::string to_json(const SparsePoly& f);
std::string to_json(const SupportSet& s);
std::string to_json(const BoundReport& r);

// CSV for sweep-style tables, schema
//   n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,staircase_upper
// maximizers holds the lex-ordered one-line forms joined by ';' and is
// quoted (one-line forms contain commas).  corollary_bound comes from the
// caller: the exact integer product bound for support sweeps, the analytic
// decimal for the asymptotic table; an empty string leaves the cell empty.
struct SweepCsvRow {
    SweepRow row;
    std::string corollary_bound;
};
std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepCsvRow>& rows);

// RFC 4180 quoting: wraps fields containing commas, quotes, or newlines.
std::string csv_quote(const std::string& field);

// Complete sweep tables.  beta_sweep_csv fills corollary_bound with the
// exact integer lower bound for the constructed layered family (empty where
// the construction needs n >= 3); asymptotic_table_csv uses the analytic
// decimal bound instead, alongside the same ln(n!) ceiling column.
std::string beta_sweep_csv(int n_max, PolyKind kind, const SweepOptions& opts = {});
std::string asymptotic_table_csv(int n_max, const SweepOptions& opts = {});

}  // namespace schubkit
