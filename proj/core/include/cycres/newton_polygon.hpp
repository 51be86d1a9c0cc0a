#pragma once

#include <cycres/int_polynomial.hpp>

#include <vector>

namespace cycres {

// One edge of the lower hull.  slope = slope_num / slope_den in lowest terms
// (slope_den >= 1); multiplicity is the horizontal run, i.e. the number of
// roots (with multiplicity) of that valuation.  infinite marks the roots at
// t = 0 (valuation +infinity).
struct PolygonSegment {
  long slope_num = 0;
  unsigned long slope_den = 1;
  unsigned long multiplicity = 0;
  bool infinite = false;
};

// Newton polygon of f at p.  Orientation: point i carries the valuation of
// the coefficient of t^(deg f - i), i.e. i counts from the leading
// coefficient, and with this indexing the slope of a lower-hull segment
// equals the common valuation of the roots it counts (a segment of slope -1
// means a root with |a|_p = p).  The quadratic constructive tests pin this
// orientation down.
class NewtonPolygon {
 public:
  static NewtonPolygon compute(const IntPolynomial& f, unsigned long p);

  unsigned long prime() const { return p_; }
  // lower-hull lattice points (i, v), leading-first indexing
  const std::vector<std::pair<unsigned long, long>>& vertices() const {
    return vertices_;
  }
  const std::vector<PolygonSegment>& segments() const { return segments_; }

  // #roots with |a|_p > 1, = 1, < 1 (the last includes roots at 0), all with
  // multiplicity; the three counts sum to deg f.
  unsigned long count_neg() const { return count_neg_; }
  unsigned long count_unit() const { return count_unit_; }
  unsigned long count_pos() const { return count_pos_; }

 private:
  unsigned long p_ = 0;
  std::vector<std::pair<unsigned long, long>> vertices_;
  std::vector<PolygonSegment> segments_;
  unsigned long count_neg_ = 0, count_unit_ = 0, count_pos_ = 0;
};

}  // namespace cycres
