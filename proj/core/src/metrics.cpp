#include "msoro/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace msoro {
namespace {

double cross3(Vec2 o, Vec2 a, Vec2 b) { return (a - o).cross(b - o); }

bool segments_cross(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
  const double d1 = cross3(p3, p4, p1);
  const double d2 = cross3(p3, p4, p2);
  const double d3 = cross3(p1, p2, p3);
  const double d4 = cross3(p1, p2, p4);
  return ((d1 > 0) != (d2 > 0)) && d1 != 0 && d2 != 0 &&
         ((d3 > 0) != (d4 > 0)) && d3 != 0 && d4 != 0;
}

// Piecewise-linear graph y(x) of the limb curve on a uniform grid. Where the
// polyline is not a graph (the bulge folds back at extreme amplitudes) the
// outermost crossing is kept.
class LimbGraph {
 public:
  explicit LimbGraph(const std::vector<PlanarPoint>& limb, int cells = 2048) {
    const int n = static_cast<int>(limb.size());
    x_lo_ = limb.front().x;
    const double x_hi = limb.back().x;
    dx_ = (x_hi - x_lo_) / cells;
    y_.assign(cells + 1, 0.0);

    bool monotone = true;
    for (int i = 0; i + 1 < n; ++i)
      if (limb[i + 1].x <= limb[i].x) {
        monotone = false;
        break;
      }

    if (monotone) {
      int seg = 0;
      for (int k = 0; k <= cells; ++k) {
        const double x = x_lo_ + k * dx_;
        while (seg + 2 < n && limb[seg + 1].x < x) ++seg;
        const double x0 = limb[seg].x, x1 = limb[seg + 1].x;
        const double t = x1 > x0 ? std::clamp((x - x0) / (x1 - x0), 0.0, 1.0) : 0.0;
        y_[k] = limb[seg].y + t * (limb[seg + 1].y - limb[seg].y);
      }
      return;
    }
    for (int k = 0; k <= cells; ++k) {
      const double x = x_lo_ + k * dx_;
      double best = -1e300;
      for (int i = 0; i + 1 < n; ++i) {
        const double x0 = limb[i].x, x1 = limb[i + 1].x;
        if ((x0 - x) * (x1 - x) > 0.0) continue;
        const double t = x1 != x0 ? (x - x0) / (x1 - x0) : 0.0;
        best = std::max(best, limb[i].y + t * (limb[i + 1].y - limb[i].y));
      }
      if (best == -1e300) best = k == 0 ? limb.front().y : y_[k - 1];
      y_[k] = best;
    }
  }

  double operator()(double x) const {
    const double s = std::clamp((x - x_lo_) / dx_, 0.0, double(y_.size() - 1));
    const int k = std::min(static_cast<int>(s), static_cast<int>(y_.size()) - 2);
    const double t = s - k;
    return y_[k] + t * (y_[k + 1] - y_[k]);
  }

 private:
  double x_lo_ = 0.0;
  double dx_ = 1.0;
  std::vector<double> y_;
};

double integrate_overlap(const LimbGraph& graph, double b, double t1, double t2,
                         OverlapIntegrand integrand, int panels = 1024) {
  const double c1 = std::max(-b / 2.0 + t1, -b / 2.0);
  const double c2 = std::min(b / 2.0 + t1, b / 2.0);
  if (!(c2 > c1)) return 0.0;

  const double h = (c2 - c1) / panels;
  auto f = [&](double x) {
    const double d = graph(x) + graph(-x + t1) - t2;
    return integrand == OverlapIntegrand::squared ? d * d : std::abs(d);
  };
  double sum = 0.5 * (f(c1) + f(c2));
  for (int i = 1; i < panels; ++i) sum += f(c1 + i * h);
  return sum * h;
}

struct Box {
  double lo1, hi1, lo2, hi2;
  Vec2 clamp(Vec2 t) const {
    return {std::clamp(t.x, lo1, hi1), std::clamp(t.y, lo2, hi2)};
  }
};

// Nelder-Mead on a 2d box, used to polish the grid seed of the overlap
// minimization. Deterministic: fixed simplex, fixed iteration budget.
Vec2 nelder_mead(const std::function<double(Vec2)>& f, Vec2 seed, double scale,
                 const Box& box, int max_iter = 200) {
  struct Node {
    Vec2 x;
    double v;
  };
  std::array<Node, 3> s{Node{box.clamp(seed), 0.0},
                        Node{box.clamp(seed + Vec2{scale, 0.0}), 0.0},
                        Node{box.clamp(seed + Vec2{0.0, scale}), 0.0}};
  for (auto& n : s) n.v = f(n.x);

  for (int it = 0; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(),
              [](const Node& a, const Node& b) { return a.v < b.v; });
    const double size = std::max((s[1].x - s[0].x).norm(), (s[2].x - s[0].x).norm());
    if (size < 1e-12 * (1.0 + scale)) break;

    const Vec2 centroid = (s[0].x + s[1].x) * 0.5;
    auto eval = [&](Vec2 x) { return Node{x, f(x)}; };

    Node reflected = eval(box.clamp(centroid + (centroid - s[2].x)));
    if (reflected.v < s[0].v) {
      Node expanded = eval(box.clamp(centroid + (centroid - s[2].x) * 2.0));
      s[2] = expanded.v < reflected.v ? expanded : reflected;
    } else if (reflected.v < s[1].v) {
      s[2] = reflected;
    } else {
      Node contracted = eval(box.clamp(centroid + (s[2].x - centroid) * 0.5));
      if (contracted.v < s[2].v) {
        s[2] = contracted;
      } else {
        s[1].x = s[0].x + (s[1].x - s[0].x) * 0.5;
        s[2].x = s[0].x + (s[2].x - s[0].x) * 0.5;
        s[1].v = f(s[1].x);
        s[2].v = f(s[2].x);
      }
    }
  }
  std::sort(s.begin(), s.end(),
            [](const Node& a, const Node& b) { return a.v < b.v; });
  return s[0].x;
}

}  // namespace

namespace detail {

bool outline_is_simple(const std::vector<PlanarPoint>& ring) {
  const int n = static_cast<int>(ring.size());
  if (n < 4) return true;

  double max_len = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 d = ring[(i + 1) % n].vec() - ring[i].vec();
    max_len = std::max(max_len, d.norm());
  }
  const double cell = std::max(max_len * 1.5, 1e-30);

  auto key = [cell](double x, double y) {
    const long long cx = static_cast<long long>(std::floor(x / cell));
    const long long cy = static_cast<long long>(std::floor(y / cell));
    return (cx << 32) ^ (cy & 0xffffffffLL);
  };

  std::unordered_map<long long, std::vector<int>> grid;
  grid.reserve(2 * n);
  auto cells_of = [&](int i, auto&& fn) {
    const Vec2 a = ring[i].vec(), b = ring[(i + 1) % n].vec();
    const long long x0 = static_cast<long long>(std::floor(std::min(a.x, b.x) / cell));
    const long long x1 = static_cast<long long>(std::floor(std::max(a.x, b.x) / cell));
    const long long y0 = static_cast<long long>(std::floor(std::min(a.y, b.y) / cell));
    const long long y1 = static_cast<long long>(std::floor(std::max(a.y, b.y) / cell));
    for (long long cx = x0; cx <= x1; ++cx)
      for (long long cy = y0; cy <= y1; ++cy) fn((cx << 32) ^ (cy & 0xffffffffLL));
  };

  for (int i = 0; i < n; ++i) {
    bool crossing = false;
    cells_of(i, [&](long long k) {
      for (int j : grid[k]) {
        if (j == i) continue;
        const bool adjacent = (i - j + n) % n == 1 || (j - i + n) % n == 1;
        if (adjacent) continue;
        if (segments_cross(ring[i].vec(), ring[(i + 1) % n].vec(), ring[j].vec(),
                           ring[(j + 1) % n].vec()))
          crossing = true;
      }
    });
    if (crossing) return false;
    cells_of(i, [&](long long k) { grid[k].push_back(i); });
  }
  return true;
}

double overlap_integral(const PlanarOutline& outline, double t1, double t2,
                        OverlapIntegrand integrand) {
  return integrate_overlap(LimbGraph(outline.limb), outline.b, t1, t2,
                           integrand);
}

}  // namespace detail

LocomotionResult locomotion_ability(const PlanarOutline& outline, double c_slack,
                                    FeasibilityRule rule) {
  LocomotionResult result;
  double r2_max = 0.0, r_min = 1e300;
  for (const auto& pt : outline.points) {
    const double r2 = pt.x * pt.x + pt.y * pt.y;
    r2_max = std::max(r2_max, r2);
    r_min = std::min(r_min, std::sqrt(r2));
  }
  result.a_loco = r2_max;
  result.simple = detail::outline_is_simple(outline.points);

  if (rule == FeasibilityRule::geometric_clearance) {
    // Distance between an outline point and its rotation by 2pi/p reduces to
    // 2 sin(pi/p) |P|; the minimum sits in the tuck between adjacent limbs.
    result.clearance = 2.0 * std::sin(kPi / outline.p) * r_min;
    result.feasible = result.simple && result.clearance > c_slack;
  } else {
    const double beta = 2.0 * kPi / outline.p;
    double min_resid = 1e300;
    for (const auto& pt : outline.limb) {
      const double resid =
          std::abs(pt.y - std::sin(beta) * pt.x - std::cos(beta) * pt.y);
      min_resid = std::min(min_resid, resid);
    }
    result.clearance = min_resid;
    result.feasible = result.clearance > c_slack;
  }
  return result;
}

AmplitudeScan scan_amplitudes(const PlatonicSolid& solid, double edge_length,
                              double c_slack, double resolution,
                              int samples_per_edge, FeasibilityRule rule) {
  if (!(resolution > 0.0 && resolution <= 0.1))
    throw std::invalid_argument("amplitude grid resolution must lie in (0, 0.1]");

  AmplitudeScan scan;
  const int steps = static_cast<int>(std::round(1.0 / resolution));
  const double R = edge_length * solid.circumradius_ratio;
  scan.points.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double A = std::min(i * resolution, 1.0);
    const auto outline =
        planar_outline(solid, sinusoidal_curve(edge_length, A), R, samples_per_edge);
    const auto loco = locomotion_ability(outline, c_slack, rule);
    scan.points.push_back({A, loco.feasible, loco.a_loco, loco.clearance});
    if (loco.feasible) {
      scan.any_feasible = true;
      scan.largest_feasible = std::max(scan.largest_feasible, A);
      scan.max_inv_a_loco = std::max(scan.max_inv_a_loco, 1.0 / loco.a_loco);
    }
  }
  return scan;
}

std::optional<double> locomotion_difficulty(const PlanarOutline& outline,
                                            double c_slack,
                                            const AmplitudeScan& scan) {
  const auto loco = locomotion_ability(outline, c_slack);
  if (!loco.feasible || !scan.any_feasible) return std::nullopt;
  return (1.0 / loco.a_loco) / scan.max_inv_a_loco;
}

std::optional<double> locomotion_difficulty(const PlatonicSolid& solid,
                                            double edge_length, double amplitude,
                                            double c_slack,
                                            double grid_resolution,
                                            int samples_per_edge,
                                            FeasibilityRule rule) {
  const auto scan = scan_amplitudes(solid, edge_length, c_slack,
                                    grid_resolution, samples_per_edge, rule);
  const auto outline = planar_outline(
      solid, sinusoidal_curve(edge_length, amplitude),
      edge_length * solid.circumradius_ratio, samples_per_edge);
  return locomotion_difficulty(outline, c_slack, scan);
}

IntramodularResult intramodular_distortion(const PlanarOutline& outline) {
  const auto& limb = outline.limb;
  double integral = 0.0;
  for (size_t i = 0; i + 1 < limb.size(); ++i)
    integral +=
        (limb[i + 1].x - limb[i].x) * (limb[i].y + limb[i + 1].y) * 0.5;

  // The sector lines |cot(pi/p) x| integrate exactly to cot(pi/p) b^2 / 4.
  const double sector_lines =
      outline.b * outline.b / 4.0 / std::tan(kPi / outline.p);
  const double limb_sector = integral - sector_lines;
  if (!(limb_sector > 0.0))
    throw std::domain_error(
        "limb sector area is not positive (degenerate projection for " +
        to_string(outline.solid) + ", A = " + std::to_string(outline.amplitude) +
        ")");

  IntramodularResult result;
  result.area_planar = outline.p * limb_sector;
  result.area_spherical = 4.0 * kPi * outline.R * outline.R / outline.face_count;
  result.eps_intra = (result.area_planar - result.area_spherical) / result.area_planar;
  return result;
}

IntermodularResult intermodular(const PlanarOutline& outline,
                                OverlapIntegrand integrand) {
  const LimbGraph graph(outline.limb);
  const double b = outline.b;
  const Vec2 t0{0.0, 2.0 * outline.limb_axis_radius};
  const Box box{t0.x - b / 4.0, t0.x + b / 4.0, t0.y - b / 4.0, t0.y + b / 4.0};
  if (box.lo1 >= b || box.hi1 <= -b)
    throw std::domain_error(
        "displacement search box admits no overlap interval");

  auto objective = [&](Vec2 t) {
    return integrate_overlap(graph, b, t.x, t.y, integrand);
  };

  Vec2 best = t0;
  double best_value = objective(best);
  const int grid_n = 21;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const Vec2 t{box.lo1 + (box.hi1 - box.lo1) * i / (grid_n - 1),
                   box.lo2 + (box.hi2 - box.lo2) * j / (grid_n - 1)};
      const double v = objective(t);
      if (v < best_value) {
        best_value = v;
        best = t;
      }
    }
  }

  const Vec2 refined = nelder_mead(objective, best, b / 40.0, box);
  const double refined_value = objective(refined);
  if (refined_value < best_value) {
    best = refined;
    best_value = refined_value;
  }

  IntermodularResult result;
  result.g_e = best_value;
  result.t1 = best.x;
  result.t2 = best.y;
  const double area = intramodular_distortion(outline).area_planar;
  result.eps_inter = best_value / area * (kReferenceEdgeMm / outline.a);
  return result;
}

DistortionReport distortion_report(const PlatonicSolid& solid, double edge_length,
                                   double amplitude, double alpha, double c_slack,
                                   int samples_per_edge, FeasibilityRule rule,
                                   OverlapIntegrand integrand) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
  if (c_slack <= 0.0) c_slack = default_c_slack(edge_length);

  const double R = edge_length * solid.circumradius_ratio;
  const auto outline = planar_outline(
      solid, sinusoidal_curve(edge_length, amplitude), R, samples_per_edge);

  DistortionReport report;
  report.solid = solid.name;
  report.a = edge_length;
  report.R = R;
  report.amplitude = amplitude;
  report.alpha = alpha;
  report.c_slack = c_slack;

  const auto loco = locomotion_ability(outline, c_slack, rule);
  report.a_loco = loco.a_loco;
  report.clearance = loco.clearance;
  report.feasible = loco.feasible;

  const auto intra = intramodular_distortion(outline);
  report.area_planar = intra.area_planar;
  report.area_spherical = intra.area_spherical;
  report.eps_intra = intra.eps_intra;

  const auto inter = intermodular(outline, integrand);
  report.g_e = inter.g_e;
  report.t1 = inter.t1;
  report.t2 = inter.t2;
  report.eps_inter = inter.eps_inter;

  if (loco.feasible) {
    const auto scan =
        scan_amplitudes(solid, edge_length, c_slack, 0.01, samples_per_edge, rule);
    report.d_loco = locomotion_difficulty(outline, c_slack, scan);
    if (report.d_loco)
      report.j = alpha * inter.eps_inter + (1.0 - alpha) * *report.d_loco;
  }
  return report;
}

}  // namespace msoro
