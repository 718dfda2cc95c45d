#ifndef HCENSUS_CHARTS_HPP
#define HCENSUS_CHARTS_HPP

#include "poly.hpp"

#include <optional>

namespace hc {

// Top-degree form coeff * dx_1 ^ ... ^ dx_k over the coefficient's chart.
struct TopForm {
    RatFn coeff;
    std::vector<std::string> frame;
};

// Coordinate change onto a new chart: assignments send old variables to
// rational functions of the new ones (unassigned names carry over when the
// new chart keeps them), new_frame lists the new chart's frame coordinates.
struct ChartMap {
    std::vector<std::string> new_vars;
    std::vector<std::string> new_frame;
    std::map<std::string, RatFn> assignments;

    // builds the map from expression strings
    static ChartMap make(std::vector<std::string> new_vars,
                         std::vector<std::string> new_frame,
                         const std::vector<std::pair<std::string, std::string>>& exprs);
};

// Substitutes the coordinates and multiplies by the Jacobian determinant of
// the frame change; the sign is whatever the determinant produces.
TopForm pullback(const TopForm& form, const ChartMap& map);
TopForm pullback(const TopForm& form, const std::vector<ChartMap>& chain);

// Vanishing order of the coefficient along {var = shift}; negative values
// are poles of that order.
int order_along(const TopForm& form, const std::string& var, const Rat& shift = Rat(0));

// Determinant of a square RatFn matrix (fraction-free elimination on the
// row-denominator-cleared polynomial matrix).
RatFn ratfn_det(const std::vector<std::vector<RatFn>>& m);

struct PoleRow {
    std::string divisor;
    std::string chart;
    std::string locus;
    int computed = 0; // pole order (positive means a pole)
    int expected = 0;
    bool match = false;
};

struct PoleReport {
    std::string example;
    std::vector<PoleRow> rows;
    bool all_match = true;
};

// Recomputes the gauge-form pole orders along every boundary divisor of the
// named example from the hardcoded chart substitution chains.
PoleReport run_preset(const std::string& example_id, unsigned n = 0);

std::string pole_report_json(const PoleReport& r);

// Chart-chain file runner: {"vars": [...], "form": {"num","den","frame"},
// "chain": [{"var","expr"[,"wrt"]}...]}.  Each chain entry substitutes one
// variable; when it replaces a frame coordinate the incoming expression
// must introduce exactly one new variable (or name it via "wrt").
TopForm run_chain_json(const std::string& text);
std::string chain_result_json(const TopForm& form,
                              const std::vector<std::string>& order_vars);

} // namespace hc

#endif
