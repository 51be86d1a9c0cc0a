#include <cycres/newton_polygon.hpp>

#include <cycres/errors.hpp>

#include <cassert>
#include <numeric>

namespace cycres {

NewtonPolygon NewtonPolygon::compute(const IntPolynomial& f, unsigned long p) {
  if (f.is_zero()) throw ZeroPolynomialError();
  NewtonPolygon np;
  np.p_ = p;

  const std::size_t e0 = f.order_at_zero();  // roots at t = 0
  const int d = f.degree();
  const int dd = d - static_cast<int>(e0);

  // finite points (i, v_p(coeff of t^(d-i))), i = 0 .. dd
  std::vector<std::pair<long, long>> pts;
  BigInt bp(p);
  for (int i = 0; i <= dd; ++i) {
    const BigInt& c = f.coeff(static_cast<std::size_t>(d - i));
    if (c == 0) continue;
    pts.emplace_back(i, static_cast<long>(big_valuation(c, bp)));
  }
  assert(!pts.empty() && pts.front().first == 0 && pts.back().first == dd);

  // lower convex hull, left to right
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below segment a-pt
      if ((b.second - a.second) * (pt.first - a.first) <
          (pt.second - a.second) * (b.first - a.first))
        break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  for (const auto& v : hull)
    np.vertices_.emplace_back(static_cast<unsigned long>(v.first), v.second);

  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    long run = hull[k + 1].first - hull[k].first;
    long rise = hull[k + 1].second - hull[k].second;
    long g = std::gcd(std::abs(rise), run);
    if (g == 0) g = 1;
    PolygonSegment seg;
    seg.slope_num = rise / g;
    seg.slope_den = static_cast<unsigned long>(run / g);
    seg.multiplicity = static_cast<unsigned long>(run);
    np.segments_.push_back(seg);
    if (rise < 0)
      np.count_neg_ += seg.multiplicity;
    else if (rise == 0)
      np.count_unit_ += seg.multiplicity;
    else
      np.count_pos_ += seg.multiplicity;
  }
  if (e0 > 0) {
    PolygonSegment inf;
    inf.infinite = true;
    inf.multiplicity = e0;
    np.segments_.push_back(inf);
    np.count_pos_ += e0;
  }
  assert(np.count_neg_ + np.count_unit_ + np.count_pos_ ==
         static_cast<unsigned long>(d));
  return np;
}

}  // namespace cycres
