#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/scatter.hpp"

namespace qca {

using Point = std::pair<Rational, Rational>;

struct BrokenLineCrossing {
    size_t wall = 0;
    Point at;
    int sign = 1;
    int64_t power = 0;  // 0 means the line continues unbent
};

struct BrokenLineSegment {
    LVec exponent;
    QScalar coeff;
    std::optional<Point> start;  // none for the unbounded initial segment
    Point end;
};

struct BrokenLine {
    LVec m0;
    Point endpoint;
    std::vector<BrokenLineCrossing> crossings;  // in travel order
    std::vector<BrokenLineSegment> segments;
    const LVec& final_exponent() const { return segments.back().exponent; }
    const QScalar& final_coeff() const { return segments.back().coeff; }
    size_t bends() const;
};

// all broken lines for m0 ending at Q with total bend degree <= budget;
// with a filter only lines ending in that exponent are returned
std::vector<BrokenLine> enumerate_broken_lines(const LVec& m0, const Point& Q, const Diagram& d, const Rational& budget,
                                               const std::optional<LVec>& filter = std::nullopt);

// default budget: the diagram order, or exactly the degree of the filter exponent over m0
Rational broken_line_budget(const ScatterData& data, const LVec& m0, int order, const std::optional<LVec>& filter);

Terms theta_function(const LVec& m0, const Point& Q, const Diagram& d, const Rational& budget);

LVec greedy_T(const LVec& m, int64_t c);

std::string broken_lines_json(const Diagram& d, const std::vector<BrokenLine>& lines);
std::vector<PolyLine> broken_line_polylines(const Diagram& d, const std::vector<BrokenLine>& lines, double extent);
std::string theta_str(const ScatterData& data, const Terms& t);

}  // namespace qca
