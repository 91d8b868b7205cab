#include "triperiod/oscquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "triperiod/errors.hpp"

namespace triperiod::oscquad {

namespace {

// 15-point Kronrod extension of 7-point Gauss, abscissae in [0,1).
constexpr int kNodes = 8;
constexpr double kX[kNodes] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813,
};
constexpr double kWK[kNodes] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529,
};
// Gauss-7 weights on the even-index abscissae (0, 2, 4, 6).
constexpr double kWG[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
};

// A panel lives in the local coordinate of its segment.
//   kind 0: x = x0 + u            (regular; u in [lo, hi])
//   kind 1: x = s + u^2           (left-singular at s; u >= 0)
//   kind 2: x = s - u^2           (right-singular at s; u >= 0)
struct Segment {
  int kind = 0;
  double x0 = 0.0;     // base point (s for singular kinds)
  int sing_index = -1;
};

struct Panel {
  int seg = 0;
  double lo = 0.0, hi = 0.0;
  int depth = 0;
  cdouble value{};
  double err = 0.0;
};

struct PanelOrder {
  bool operator()(const Panel& a, const Panel& b) const { return a.err < b.err; }
};

class Workspace {
 public:
  Workspace(const Integrand& f, std::vector<Segment> segs, const Options& opt)
      : f_(f), segs_(std::move(segs)), opt_(opt) {}

  QuadResult run(const std::vector<Panel>& seed);
  Panel evaluate(int seg, double lo, double hi, int depth);

 private:
  const Integrand& f_;
  std::vector<Segment> segs_;
  const Options& opt_;
  long long n_evals_ = 0;
};

Panel Workspace::evaluate(int seg, double lo, double hi, int depth) {
  const Segment& s = segs_[seg];
  const double mid = 0.5 * (lo + hi);
  const double hw = 0.5 * (hi - lo);
  cdouble k15{}, g7{};
  auto sample = [&](double u) -> cdouble {
    double x, dist;
    switch (s.kind) {
      case 1:
        x = s.x0 + u * u;
        dist = u * u;
        break;
      case 2:
        x = s.x0 - u * u;
        dist = -(u * u);
        break;
      default:
        x = s.x0 + u;
        dist = 0.0;
    }
    cdouble v = f_(x, s.kind == 0 ? -1 : s.sing_index, dist);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw singularity_error("integrand overflow: undeclared singularity?");
    ++n_evals_;
    return s.kind == 0 ? v : v * (2.0 * u);
  };
  for (int i = 0; i < kNodes; ++i) {
    if (i == 0) {
      cdouble v = sample(mid);
      k15 += kWK[0] * v;
      g7 += kWG[0] * v;
    } else {
      cdouble v = sample(mid + hw * kX[i]) + sample(mid - hw * kX[i]);
      k15 += kWK[i] * v;
      if (i % 2 == 0) g7 += kWG[i / 2] * v;
    }
  }
  k15 *= hw;
  g7 *= hw;
  return Panel{seg, lo, hi, depth, k15, std::abs(k15 - g7)};
}

QuadResult Workspace::run(const std::vector<Panel>& seed) {
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap(seed.begin(), seed.end());
  cdouble total{};
  double total_err = 0.0;
  for (const auto& p : seed) {
    total += p.value;
    total_err += p.err;
  }
  auto tolerance = [&] {
    return std::max(opt_.abs_tol, opt_.rel_tol * std::abs(total));
  };
  std::vector<Panel> done;
  while (total_err > tolerance() && !heap.empty()) {
    Panel worst = heap.top();
    heap.pop();
    if (worst.depth >= opt_.max_depth || n_evals_ + 30 > opt_.max_evals) {
      done.push_back(worst);
      continue;
    }
    total -= worst.value;
    total_err -= worst.err;
    double mid = 0.5 * (worst.lo + worst.hi);
    Panel a = evaluate(worst.seg, worst.lo, mid, worst.depth + 1);
    Panel b = evaluate(worst.seg, mid, worst.hi, worst.depth + 1);
    total += a.value + b.value;
    total_err += a.err + b.err;
    heap.push(a);
    heap.push(b);
  }
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  // deterministic re-summation independent of heap history
  std::sort(done.begin(), done.end(), [](const Panel& a, const Panel& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.lo < b.lo;
  });
  cdouble value{};
  double err = 0.0;
  for (const auto& p : done) {
    value += p.value;
    err += p.err;
  }
  QuadResult r;
  r.value = value;
  r.err_estimate = err;
  r.n_evals = n_evals_;
  r.converged = err <= std::max(opt_.abs_tol, opt_.rel_tol * std::abs(value));
  return r;
}

void validate(std::span<const SingularPoint> singularities) {
  for (const auto& s : singularities)
    if (!(s.exponent_re > -1.0))
      throw std::domain_error("oscquad: singular exponent must have real part > -1");
}

// Initial panels for one segment, capped so that no panel spans more than
// panel_phase_budget radians of the declared frequency (measured in x).
void seed_segment(Workspace& ws, int seg_idx, const Segment& seg, double ulen,
                  const Options& opt, std::vector<Panel>& out) {
  double cap_x = opt.max_frequency > 0.0 ? opt.panel_phase_budget / opt.max_frequency
                                         : std::numeric_limits<double>::infinity();
  const size_t max_panels = size_t(std::max<long long>(8, opt.max_evals / 40));
  std::vector<double> cuts;
  cuts.push_back(0.0);
  if (seg.kind == 0) {
    size_t n = std::isfinite(cap_x) ? size_t(std::max(1.0, std::ceil(ulen / cap_x))) : 1;
    n = std::min(n, max_panels);
    for (size_t i = 1; i < n; ++i) cuts.push_back(ulen * double(i) / double(n));
  } else {
    // x-width of [u0,u1] is u1^2 - u0^2; march from the outer edge inwards
    double u = ulen;
    while (u > 0.0) {
      double xw = u * u;
      if (!(xw > cap_x) || cuts.size() > max_panels) break;
      double u_next = std::sqrt(xw - cap_x);
      if (u_next >= u * (1.0 - 1e-12)) break;
      cuts.push_back(u_next);
      u = u_next;
    }
    std::sort(cuts.begin(), cuts.end());
  }
  cuts.push_back(ulen);
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) out.push_back(ws.evaluate(seg_idx, cuts[i], cuts[i + 1], 0));
}

QuadResult integrate_segments(const Integrand& f, const std::vector<Segment>& segs,
                              const std::vector<double>& ulens, const Options& opt) {
  Workspace ws(f, segs, opt);
  std::vector<Panel> seed;
  for (size_t i = 0; i < segs.size(); ++i)
    seed_segment(ws, int(i), segs[i], ulens[i], opt, seed);
  return ws.run(seed);
}

}  // namespace

Integrand plain(std::function<cdouble(double)> f) {
  return [f = std::move(f)](double x, int, double) { return f(x); };
}

namespace {

struct Loc {
  double x;
  int idx;  // index into the caller's singularity list
};

QuadResult integrate_with_locs(const Integrand& f, double a, double b, std::vector<Loc> locs,
                               const Options& opt) {
  std::sort(locs.begin(), locs.end(), [](const Loc& l, const Loc& r) { return l.x < r.x; });

  std::vector<Segment> segs;
  std::vector<double> ulens;
  auto add_regular = [&](double lo, double hi) {
    if (hi - lo <= 0.0) return;
    segs.push_back({0, lo, -1});
    ulens.push_back(hi - lo);
  };
  auto add_left_singular = [&](double s, double hi, int idx) {  // (s, hi], singular at s
    if (hi - s <= 0.0) return;
    segs.push_back({1, s, idx});
    ulens.push_back(std::sqrt(hi - s));
  };
  auto add_right_singular = [&](double lo, double s, int idx) {  // [lo, s), singular at s
    if (s - lo <= 0.0) return;
    segs.push_back({2, s, idx});
    ulens.push_back(std::sqrt(s - lo));
  };

  if (locs.empty()) {
    add_regular(a, b);
  } else {
    add_right_singular(a, locs.front().x, locs.front().idx);
    for (size_t i = 0; i + 1 < locs.size(); ++i) {
      double mid = 0.5 * (locs[i].x + locs[i + 1].x);
      add_left_singular(locs[i].x, mid, locs[i].idx);
      add_right_singular(mid, locs[i + 1].x, locs[i + 1].idx);
    }
    add_left_singular(locs.back().x, b, locs.back().idx);
  }
  return integrate_segments(f, segs, ulens, opt);
}

}  // namespace

QuadResult integrate_line(const Integrand& f, double a, double b,
                          std::span<const SingularPoint> singularities, const Options& opt) {
  if (!(b > a)) throw std::domain_error("integrate_line: empty interval");
  validate(singularities);
  std::vector<Loc> locs;
  for (size_t i = 0; i < singularities.size(); ++i) {
    double s = singularities[i].location;
    if (s >= a - 1e-15 && s <= b + 1e-15) locs.push_back({std::clamp(s, a, b), int(i)});
  }
  return integrate_with_locs(f, a, b, std::move(locs), opt);
}

QuadResult integrate_circle(const Integrand& f, double period,
                            std::span<const SingularPoint> singularities, const Options& opt) {
  if (!(period > 0.0)) throw std::domain_error("integrate_circle: period must be positive");
  validate(singularities);
  if (singularities.empty()) return integrate_line(f, 0.0, period, singularities, opt);

  // fold singular locations into [s0, s0 + period), starting the seam at the
  // first singularity; the seam point is then singular at both ends
  std::vector<Loc> locs;
  for (size_t i = 0; i < singularities.size(); ++i) {
    double s = singularities[i].location;
    locs.push_back({s - period * std::floor(s / period), int(i)});
  }
  double s0 = locs.front().x;
  for (const auto& l : locs) s0 = std::min(s0, l.x);
  for (auto& l : locs)
    if (l.x < s0 - 1e-15) l.x += period;
  int seam_idx = -1;
  for (const auto& l : locs)
    if (l.x == s0) seam_idx = l.idx;
  locs.push_back({s0 + period, seam_idx});
  return integrate_with_locs(f, s0, s0 + period, std::move(locs), opt);
}

}  // namespace triperiod::oscquad
