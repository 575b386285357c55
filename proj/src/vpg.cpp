#include "thinness/vpg.hpp"

#include <algorithm>
#include <climits>

#include "svg.hpp"
#include "thinness/kernels.hpp"

namespace thinness {

namespace {

struct Seg {
  int x1, x2, y1, y2;  // bounding box; one side has zero extent
};

Seg make_seg(Point a, Point b) {
  return {std::min(a.first, b.first), std::max(a.first, b.first), std::min(a.second, b.second),
          std::max(a.second, b.second)};
}

bool seg_meet(const Seg& a, const Seg& b) { return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2; }

std::vector<Seg> segments(const GridPath& p) {
  std::vector<Seg> out;
  if (p.pts.size() == 1) out.push_back(make_seg(p.pts[0], p.pts[0]));
  for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) out.push_back(make_seg(p.pts[i], p.pts[i + 1]));
  return out;
}

bool horizontal(Point a, Point b) { return a.second == b.second; }

void require_certificate(const Graph& g, const Representation& rep, int k, bool independent, const char* who) {
  validate_representation(rep, g.n());
  if (rep.partition.k != k) throw InputError(std::string(who) + " needs exactly " + std::to_string(k) + " classes");
  ConsistencyReport cr = is_consistent(g, rep, ConsistencyMode::consistent);
  if (!cr.ok) throw InputError(std::string(who) + ": order and partition are not consistent");
  if (independent)
    for (const Edge& e : g.edges())
      if (rep.partition.class_of[static_cast<std::size_t>(e.first)] ==
          rep.partition.class_of[static_cast<std::size_t>(e.second)])
        throw InputError(std::string(who) + ": classes are not independent");
}

GridPath finish(int v, int cls, std::vector<Point> pts) {
  GridPath p;
  p.v = v;
  p.cls = cls;
  p.pts = simplify_polyline(pts);
  return p;
}

// M2 coordinates for a 2-class certificate.
BoxModel m2_of(const Graph& g, const Representation& rep) { return build_m2(build_m1(g, rep)); }

}  // namespace

std::vector<Point> simplify_polyline(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const Point& a = out[out.size() - 2];
      const Point& b = out.back();
      const bool collinear = (a.first == b.first && b.first == p.first) || (a.second == b.second && b.second == p.second);
      if (collinear) {
        // Backtracking along the same line would hide part of the path.
        const bool forward = a.first == b.first ? ((b.second - a.second) > 0) == ((p.second - b.second) > 0)
                                                : ((b.first - a.first) > 0) == ((p.first - b.first) > 0);
        if (forward) {
          out.back() = p;
          continue;
        }
      }
    }
    out.push_back(p);
  }
  return out;
}

void validate_path_model(const GridPathModel& m) {
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    const GridPath& p = m.paths[i];
    const std::string who = "path of vertex " + std::to_string(p.v);
    if (p.v != static_cast<int>(i)) throw InputError("path model: vertex indices must be dense 0..n-1");
    if (p.pts.size() < 2) throw InputError(who + " needs at least 2 points");
    if (p.bends() > 3) throw InputError(who + " has more than 3 bends");
    for (std::size_t s = 0; s + 1 < p.pts.size(); ++s) {
      const Point a = p.pts[s], b = p.pts[s + 1];
      if (a == b) throw InputError(who + " has a zero-length segment");
      if (a.first != b.first && a.second != b.second) throw InputError(who + " has a non axis-parallel segment");
      if (s > 0 && horizontal(p.pts[s - 1], a) == horizontal(a, b))
        throw InputError(who + ": consecutive segments must alternate orientation");
    }
  }
}

std::string shape_tag(const GridPath& p) {
  if (p.pts.size() == 2) return horizontal(p.pts[0], p.pts[1]) ? "h" : "v";
  if (p.pts.size() != 3) return "B" + std::to_string(p.bends());
  const Point c = p.pts[1];
  const Point h = horizontal(p.pts[0], c) ? p.pts[0] : p.pts[2];
  const Point v = horizontal(p.pts[0], c) ? p.pts[2] : p.pts[0];
  const bool up = v.second > c.second, right = h.first > c.first;
  if (up) return right ? "L" : "mirror-L";
  return right ? "Gamma" : "mirror-Gamma";
}

Graph path_intersection_graph(const GridPathModel& m) {
  validate_path_model(m);
  const int n = static_cast<int>(m.paths.size());
  std::vector<std::int32_t> x1, x2, y1, y2;
  std::vector<int> owner;
  for (const GridPath& p : m.paths)
    for (const Seg& s : segments(p)) {
      x1.push_back(s.x1), x2.push_back(s.x2), y1.push_back(s.y1), y2.push_back(s.y2);
      owner.push_back(p.v);
    }
  const int segs = static_cast<int>(owner.size());
  Graph g(n);
  std::vector<std::uint64_t> row(static_cast<std::size_t>((segs + 63) / 64));
  for (int i = 0; i < segs; ++i) {
    kernels::box_row(x1.data(), x2.data(), y1.data(), y2.data(), segs, i, row.data());
    for (int j = i + 1; j < segs; ++j) {
      const int a = owner[static_cast<std::size_t>(i)], b = owner[static_cast<std::size_t>(j)];
      if (a != b && ((row[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1U) && !g.adjacent(a, b)) g.add_edge(a, b);
    }
  }
  return g;
}

GridPathModel build_m3(const Graph& g, const Representation& rep, bool independent) {
  require_certificate(g, rep, 2, independent, "build_m3");
  BoxModel m2 = m2_of(g, rep);
  GridPathModel out;
  for (const Box& b : m2.boxes) {
    std::vector<Point> pts;
    if (!independent)
      pts = {{b.x1, b.y2}, {b.x2, b.y2}, {b.x2, b.y1}};
    else if (b.cls == 1)
      pts = {{b.x1, b.y2}, {b.x2, b.y2}};
    else
      pts = {{b.x2, b.y2}, {b.x2, b.y1}};
    for (Point& p : pts) p = {-p.first, -p.second};
    out.paths.push_back(finish(b.v, b.cls, pts));
  }
  return out;
}

GridPathModel build_m4(const Graph& g, const Representation& rep) {
  require_certificate(g, rep, 2, false, "build_m4");
  BoxModel m2 = m2_of(g, rep);
  GridPathModel out;
  for (const Box& b : m2.boxes) {
    std::vector<Point> pts;
    if (b.cls == 1) {
      // Corner slides right along the top onto y = -x; the left end stays put.
      const int s = -b.y2;
      pts = {{b.x1, b.y2}, {s, b.y2}, {s, b.y1}};
    } else {
      const int t = -b.x2;
      pts = {{b.x1, t}, {b.x2, t}, {b.x2, b.y1}};
    }
    for (Point& p : pts) p = {-p.first, -p.second};
    out.paths.push_back(finish(b.v, b.cls, pts));
  }
  return out;
}

PairCheck check_blocking_l(const GridPathModel& m) {
  validate_path_model(m);
  constexpr int kFar = 1 << 28;
  struct Rays {
    Seg vert, horz;
    std::vector<Seg> segs;
  };
  std::vector<Rays> rays;
  for (const GridPath& p : m.paths) {
    if (p.pts.size() != 3)
      throw PreconditionError("one_bend", std::nullopt,
                              "L-blocking check needs one-bend paths; vertex " + std::to_string(p.v) + " has " +
                                  std::to_string(p.bends()));
    const Point c = p.pts[1];
    const Point h = horizontal(p.pts[0], c) ? p.pts[0] : p.pts[2];
    const Point v = horizontal(p.pts[0], c) ? p.pts[2] : p.pts[0];
    Rays r;
    r.vert = make_seg(c, {c.first, v.second > c.second ? kFar : -kFar});
    r.horz = make_seg(c, {h.first > c.first ? kFar : -kFar, c.second});
    r.segs = segments(p);
    rays.push_back(std::move(r));
  }
  auto hits = [](const Seg& ray, const std::vector<Seg>& segs) {
    return std::any_of(segs.begin(), segs.end(), [&](const Seg& s) { return seg_meet(ray, s); });
  };
  Graph g = path_intersection_graph(m);
  PairCheck out;
  const int n = static_cast<int>(m.paths.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      const Rays &ra = rays[static_cast<std::size_t>(a)], &rb = rays[static_cast<std::size_t>(b)];
      if (hits(ra.vert, rb.segs) || hits(ra.horz, rb.segs) || hits(rb.vert, ra.segs) || hits(rb.horz, ra.segs))
        continue;
      out.ok = false;
      out.pair = std::make_pair(a, b);
      return out;
    }
  return out;
}

GridPathModel build_vpg_3thin(const Graph& g, const Representation& rep, bool independent) {
  require_certificate(g, rep, 3, independent, "build_vpg_3thin");
  const int n = g.n(), big = n;
  const auto pos0 = rep.order.positions();
  std::vector<int> pos(pos0.size());
  for (std::size_t i = 0; i < pos0.size(); ++i) pos[i] = pos0[i] + 1;
  const auto& cls = rep.partition.class_of;
  // lo[c][v]: position of the earliest earlier class-c neighbour of v, or v's own position.
  std::vector<std::vector<int>> lo(3, std::vector<int>(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < 3; ++c) {
      int best = pos[static_cast<std::size_t>(v)];
      for (int u : g.neighbors(v))
        if (cls[static_cast<std::size_t>(u)] == c && pos[static_cast<std::size_t>(u)] < best)
          best = pos[static_cast<std::size_t>(u)];
      lo[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = best;
    }
  GridPathModel out;
  for (int v = 0; v < n; ++v) {
    const int p = pos[static_cast<std::size_t>(v)];
    const int lc = lo[0][static_cast<std::size_t>(v)], le = lo[1][static_cast<std::size_t>(v)],
              lf = lo[2][static_cast<std::size_t>(v)];
    std::vector<Point> pts;
    switch (cls[static_cast<std::size_t>(v)]) {
      case 0:
        pts = {{p, le - big - 1}, {p, 0}, {lc, 0}, {lc, big + 2 - p}, {3 * big + 3 - lf, big + 2 - p}};
        break;
      case 1:
        pts = {{big + 1 + p, -2 * big - 2 + lf},
               {big + 1 + p, -big - 1},
               {big + 1 + le, -big - 1},
               {big + 1 + le, p - big - 1},
               {lc, p - big - 1}};
        break;
      default:
        pts = {{3 * big + 3 - p, big + 2 - lc},
               {3 * big + 3 - p, 1},
               {3 * big + 3 - lf, 1},
               {3 * big + 3 - lf, -2 * big - 2 + p},
               {big + 1 + le, -2 * big - 2 + p}};
        break;
    }
    for (Point& q : pts) q = {2 * q.first, 2 * q.second};
    out.paths.push_back(finish(v, cls[static_cast<std::size_t>(v)] + 1, pts));
  }
  return out;
}

nlohmann::json path_model_to_json(const GridPathModel& m) {
  nlohmann::json j;
  j["paths"] = nlohmann::json::array();
  for (const GridPath& p : m.paths) {
    nlohmann::json e{{"v", p.v}, {"pts", nlohmann::json::array()}};
    for (const Point& q : p.pts) e["pts"].push_back({q.first, q.second});
    if (p.cls) e["class"] = p.cls;
    j["paths"].push_back(e);
  }
  return j;
}

GridPathModel path_model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("paths") || !j["paths"].is_array())
    throw InputError("path model json: needs a 'paths' array");
  GridPathModel m;
  try {
    for (const auto& e : j["paths"]) {
      GridPath p;
      p.v = e.at("v").get<int>();
      p.cls = e.value("class", 0);
      for (const auto& q : e.at("pts")) {
        if (!q.is_array() || q.size() != 2) throw InputError("path model json: points are [x, y] pairs");
        p.pts.emplace_back(q[0].get<int>(), q[1].get<int>());
      }
      m.paths.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("path model json: ") + ex.what());
  }
  std::sort(m.paths.begin(), m.paths.end(), [](const GridPath& a, const GridPath& b) { return a.v < b.v; });
  validate_path_model(m);
  return m;
}

std::string path_model_to_svg(const GridPathModel& m) {
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const GridPath& p : m.paths)
    for (const Point& q : p.pts) {
      xmin = std::min(xmin, q.first), xmax = std::max(xmax, q.first);
      ymin = std::min(ymin, q.second), ymax = std::max(ymax, q.second);
    }
  svg::Canvas c(xmin, xmax, ymin, ymax);
  c.dashed_line(c.xmin(), 0, c.xmax(), 0, "#bbbbbb");
  c.dashed_line(0, c.ymin(), 0, c.ymax(), "#bbbbbb");
  for (const GridPath& p : m.paths) {
    c.polyline(p.pts, svg::class_color(p.cls), "v" + std::to_string(p.v));
    const Point& end = p.pts.front();
    c.text(end.first, end.second, std::to_string(p.v), svg::class_color(p.cls));
  }
  return c.str();
}

}  // namespace thinness
