#include "thinness/boxmodel.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

#include "svg.hpp"
#include "thinness/ceo.hpp"
#include "thinness/kernels.hpp"

namespace thinness {

namespace {

bool meet(const Box& a, const Box& b) { return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2; }

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

void validate_box_model(const BoxModel& m) {
  for (std::size_t i = 0; i < m.boxes.size(); ++i) {
    const Box& b = m.boxes[i];
    if (b.v != static_cast<int>(i)) throw InputError("box model: vertex indices must be dense 0..n-1");
    if (b.x1 >= b.x2 || b.y1 >= b.y2) throw InputError("box model: degenerate box for vertex " + std::to_string(b.v));
    if (b.cls < 0 || b.cls > 2) throw InputError("box model: class tag must be 1 or 2");
  }
}

BoxModel normalized(BoxModel m) {
  std::sort(m.boxes.begin(), m.boxes.end(), [](const Box& a, const Box& b) { return a.v < b.v; });
  validate_box_model(m);
  return m;
}

Graph intersection_graph(const BoxModel& m) {
  validate_box_model(m);
  const int n = static_cast<int>(m.boxes.size());
  std::vector<std::int32_t> x1(n), x2(n), y1(n), y2(n);
  for (int i = 0; i < n; ++i) {
    const Box& b = m.boxes[static_cast<std::size_t>(i)];
    x1[i] = b.x1, x2[i] = b.x2, y1[i] = b.y1, y2[i] = b.y2;
  }
  Graph g(n);
  std::vector<std::uint64_t> row(static_cast<std::size_t>((n + 63) / 64));
  for (int i = 0; i < n; ++i) {
    kernels::box_row(x1.data(), x2.data(), y1.data(), y2.data(), n, i, row.data());
    for (int j = i + 1; j < n; ++j)
      if ((row[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1U) g.add_edge(i, j);
  }
  return g;
}

std::string to_string(DiagonalLabel l) {
  switch (l) {
    case DiagonalLabel::two_diagonal:
      return "two_diagonal";
    case DiagonalLabel::weakly_two_diagonal:
      return "weakly_two_diagonal";
    default:
      return "neither";
  }
}

DiagonalReport check_diagonal(const BoxModel& m) {
  validate_box_model(m);
  DiagonalReport r;
  std::map<std::pair<int, int>, int> corners;
  for (const Box& b : m.boxes) {
    auto [it, fresh] = corners.emplace(std::make_pair(b.x2, b.y2), b.v);
    if (!fresh) {
      r.duplicate = std::make_pair(it->second, b.v);
      r.reason = "boxes " + pair_text(it->second, b.v) + " share an upper-right corner";
      return r;
    }
  }
  std::vector<int> offsets;
  for (const Box& b : m.boxes) offsets.push_back(b.y2 - b.x2);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  if (offsets.size() != 2) {
    r.reason = "corners lie on " + std::to_string(offsets.size()) + " diagonals, need exactly 2";
    return r;
  }
  r.d1 = offsets[0];
  r.d2 = offsets[1];
  r.upper.assign(m.boxes.size(), 0);
  int max_x_up = INT_MIN, min_x_low = INT_MAX, max_y_low = INT_MIN, min_y_up = INT_MAX;
  for (const Box& b : m.boxes) {
    if (b.y2 - b.x2 == r.d2) {
      r.upper[static_cast<std::size_t>(b.v)] = 1;
      max_x_up = std::max(max_x_up, b.x2);
      min_y_up = std::min(min_y_up, b.y2);
    } else {
      min_x_low = std::min(min_x_low, b.x2);
      max_y_low = std::max(max_y_low, b.y2);
    }
  }
  // Some translation puts the lower corners in the 4th quadrant and the upper ones in the 2nd.
  if (max_x_up < min_x_low && max_y_low < min_y_up) {
    r.label = DiagonalLabel::two_diagonal;
  } else {
    r.label = DiagonalLabel::weakly_two_diagonal;
    r.reason = "no translation separates the diagonals into the 2nd and 4th quadrants";
  }
  return r;
}

PairCheck check_blocking(const BoxModel& m) {
  DiagonalReport d = check_diagonal(m);
  if (d.label != DiagonalLabel::two_diagonal)
    throw PreconditionError("two_diagonal", d.duplicate, "blocking check needs a 2-diagonal model: " + d.reason);
  PairCheck out;
  for (const Box& up : m.boxes) {
    if (!d.upper[static_cast<std::size_t>(up.v)]) continue;
    for (const Box& low : m.boxes) {
      if (d.upper[static_cast<std::size_t>(low.v)] || meet(up, low)) continue;
      const bool vertical = up.x1 <= low.x2 && low.x1 <= up.x2;
      const bool horizontal = low.y1 <= up.y2 && up.y1 <= low.y2;
      if (!vertical && !horizontal) {
        out.ok = false;
        out.pair = std::make_pair(up.v, low.v);
        return out;
      }
    }
  }
  return out;
}

PairCheck check_bi_semi_proper(const BoxModel& m) {
  DiagonalReport d = check_diagonal(m);
  if (d.label == DiagonalLabel::neither)
    throw PreconditionError("weakly_two_diagonal", d.duplicate,
                            "bi-semi-proper check needs a weakly 2-diagonal model: " + d.reason);
  PairCheck out;
  for (const Box& a : m.boxes)
    for (const Box& b : m.boxes) {
      if (d.upper[static_cast<std::size_t>(a.v)] != d.upper[static_cast<std::size_t>(b.v)] || a.x2 >= b.x2) continue;
      if (a.x1 > b.x1 || a.y1 > b.y1) {
        out.ok = false;
        out.pair = std::make_pair(a.v, b.v);
        return out;
      }
    }
  return out;
}

BoxModel build_m1(const Graph& g, const Representation& rep) {
  const int n = g.n();
  validate_representation(rep, n);
  if (rep.partition.k != 2) throw InputError("build_m1 needs a partition into exactly 2 classes");
  ConsistencyReport cr = is_consistent(g, rep, ConsistencyMode::consistent);
  if (!cr.ok) {
    const auto& t = cr.witness->triple;
    throw InputError("build_m1: order and partition are not consistent, triple (" + std::to_string(t[0]) + ", " +
                     std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
  }
  const auto pos = rep.order.positions();
  std::vector<int> v, w;  // classes 0 and 1 in order
  for (int x : rep.order.seq) (rep.partition.class_of[static_cast<std::size_t>(x)] == 0 ? v : w).push_back(x);
  const int n1 = static_cast<int>(v.size()), n2 = static_cast<int>(w.size());

  // Smallest 1-based index of an earlier same-class neighbour, or the own index.
  auto first_nbr = [&](const std::vector<int>& cls, int i) {
    for (int j = 0; j < i; ++j)
      if (g.adjacent(cls[static_cast<std::size_t>(j)], cls[static_cast<std::size_t>(i)])) return j + 1;
    return i + 1;
  };
  // Largest 1-based index of an earlier vertex of the other class that is not adjacent, or 0.
  auto last_miss = [&](const std::vector<int>& other, int x) {
    int best = 0;
    for (int j = 0; j < static_cast<int>(other.size()); ++j) {
      int y = other[static_cast<std::size_t>(j)];
      if (pos[static_cast<std::size_t>(y)] < pos[static_cast<std::size_t>(x)] && !g.adjacent(x, y)) best = j + 1;
    }
    return best;
  };

  BoxModel m;
  m.boxes.resize(static_cast<std::size_t>(n));
  m.d1 = -2 * n2;
  m.d2 = 2 * n1;
  for (int i = 0; i < n1; ++i) {
    const int x = v[static_cast<std::size_t>(i)], idx = i + 1;
    Box& b = m.boxes[static_cast<std::size_t>(x)];
    b.v = x;
    b.cls = 1;
    b.x2 = 2 * (idx + n2);
    b.y2 = 2 * idx;
    b.x1 = 2 * last_miss(w, x) + 1;
    b.y1 = 2 * first_nbr(v, i) - 1;
  }
  for (int i = 0; i < n2; ++i) {
    const int x = w[static_cast<std::size_t>(i)], idx = i + 1;
    Box& b = m.boxes[static_cast<std::size_t>(x)];
    b.v = x;
    b.cls = 2;
    b.x2 = 2 * idx;
    b.y2 = 2 * (idx + n1);
    b.x1 = 2 * first_nbr(w, i) - 1;
    b.y1 = 2 * last_miss(v, x) + 1;
  }
  return m;
}

BoxModel build_m2(const BoxModel& m1) {
  DiagonalReport d = check_diagonal(m1);
  if (d.label == DiagonalLabel::neither) throw InputError("build_m2 needs a model with two diagonals: " + d.reason);
  int tx = INT_MAX, ty = INT_MAX;
  for (const Box& b : m1.boxes) {
    if (d.upper[static_cast<std::size_t>(b.v)])
      ty = std::min(ty, b.y2);
    else
      tx = std::min(tx, b.x2);
  }
  BoxModel m = m1;
  m.d1 = d.d1 + tx - ty;
  m.d2 = d.d2 + tx - ty;
  for (Box& b : m.boxes) {
    b.x1 -= tx;
    b.x2 = std::min(b.x2 - tx, 0);
    b.y1 -= ty;
    b.y2 = std::min(b.y2 - ty, 0);
    if (b.x1 >= b.x2 || b.y1 >= b.y2)
      throw InputError("build_m2: box of vertex " + std::to_string(b.v) + " vanishes when clipped");
  }
  return m;
}

Representation recover_representation(const BoxModel& m, ConsistencyMode mode) {
  DiagonalReport d = check_diagonal(m);
  if (mode == ConsistencyMode::consistent) {
    if (d.label != DiagonalLabel::two_diagonal)
      throw PreconditionError("two_diagonal", d.duplicate, "model is not 2-diagonal: " + d.reason);
    PairCheck b = check_blocking(m);
    if (!b.ok)
      throw PreconditionError("blocking", b.pair,
                              "model is not blocking: boxes " + pair_text(b.pair->first, b.pair->second));
  } else {
    if (d.label == DiagonalLabel::neither)
      throw PreconditionError("weakly_two_diagonal", d.duplicate, "model is not weakly 2-diagonal: " + d.reason);
    PairCheck b = check_bi_semi_proper(m);
    if (!b.ok)
      throw PreconditionError("bi_semi_proper", b.pair,
                              "model is not bi-semi-proper: boxes " + pair_text(b.pair->first, b.pair->second));
  }
  const int n = static_cast<int>(m.boxes.size());
  Graph g = intersection_graph(m);
  Partition p;
  p.class_of.resize(static_cast<std::size_t>(n));
  ClassOrder co;
  co.class_orders.resize(2);
  for (int v = 0; v < n; ++v) {
    const int c = d.upper[static_cast<std::size_t>(v)] ? 1 : 0;
    p.class_of[static_cast<std::size_t>(v)] = c;
    co.class_orders[static_cast<std::size_t>(c)].push_back(v);
  }
  p.k = 2;
  for (auto& seq : co.class_orders)
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
      return m.boxes[static_cast<std::size_t>(a)].x2 < m.boxes[static_cast<std::size_t>(b)].x2;
    });
  CeoResult res = solve_ceo(g, p, co, mode);
  if (res.status != CeoResult::Status::feasible)
    throw std::logic_error("recover_representation: CEO infeasible although the model predicates hold");
  return Representation{res.order, p};
}

nlohmann::json box_model_to_json(const BoxModel& m) {
  nlohmann::json j;
  j["d1"] = m.d1;
  j["d2"] = m.d2;
  j["boxes"] = nlohmann::json::array();
  for (const Box& b : m.boxes) {
    nlohmann::json e{{"v", b.v}, {"x1", b.x1}, {"x2", b.x2}, {"y1", b.y1}, {"y2", b.y2}};
    if (b.cls) e["class"] = b.cls;
    j["boxes"].push_back(e);
  }
  return j;
}

BoxModel box_model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("boxes") || !j["boxes"].is_array())
    throw InputError("box model json: needs a 'boxes' array");
  BoxModel m;
  try {
    m.d1 = j.value("d1", 0);
    m.d2 = j.value("d2", 0);
    for (const auto& e : j["boxes"]) {
      Box b;
      b.v = e.at("v").get<int>();
      b.x1 = e.at("x1").get<int>();
      b.x2 = e.at("x2").get<int>();
      b.y1 = e.at("y1").get<int>();
      b.y2 = e.at("y2").get<int>();
      b.cls = e.value("class", 0);
      m.boxes.push_back(b);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("box model json: ") + ex.what());
  }
  return normalized(std::move(m));
}

std::string box_model_to_svg(const BoxModel& m) {
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const Box& b : m.boxes) {
    xmin = std::min(xmin, b.x1), xmax = std::max(xmax, b.x2);
    ymin = std::min(ymin, b.y1), ymax = std::max(ymax, b.y2);
  }
  svg::Canvas c(xmin, xmax, ymin, ymax);
  c.dashed_line(c.xmin(), 0, c.xmax(), 0, "#bbbbbb");
  c.dashed_line(0, c.ymin(), 0, c.ymax(), "#bbbbbb");
  if (m.d1 != m.d2) {
    c.diagonal(m.d1, "#888888");
    c.diagonal(m.d2, "#888888");
  }
  for (const Box& b : m.boxes) {
    c.rect(b.x1, b.x2, b.y1, b.y2, svg::class_color(b.cls), "v" + std::to_string(b.v));
    c.text(b.x2, b.y2, std::to_string(b.v), svg::class_color(b.cls));
  }
  return c.str();
}

}  // namespace thinness
