#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "thinness/bounds.hpp"
#include "thinness/ceo.hpp"
#include "thinness/patterns.hpp"
#include "thinness/sweep.hpp"

namespace thinness::cli {
namespace {

Budget make_budget(double seconds, std::uint64_t nodes) {
  Budget b;
  if (seconds > 0) b.seconds = seconds;
  if (nodes > 0) b.nodes = nodes;
  return b;
}

std::string pair_text(const PairCheck& c) {
  if (c.ok) return "true";
  return c.pair ? "false (" + std::to_string(c.pair->first) + "," + std::to_string(c.pair->second) + ")" : "false";
}

nlohmann::json pair_json(const PairCheck& c) {
  nlohmann::json j{{"ok", c.ok}};
  if (c.pair) j["witness"] = {c.pair->first, c.pair->second};
  return j;
}

std::string violation_text(const Violation& v) {
  return std::string(v.reverse ? "reverse" : "forward") + " triple (" + join({v.triple.begin(), v.triple.end()}) + ")";
}

nlohmann::json violation_json(const Violation& v) {
  return {{"triple", v.triple}, {"reverse", v.reverse}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  GraphSource src;
  std::string kind = "thin";
  double seconds = 0;
  std::uint64_t nodes = 0;
};

int run_analyze(const AnalyzeOpts& o, bool json) {
  auto [g, fx] = o.src.load();
  std::vector<ThinnessKind> kinds;
  if (o.kind == "all")
    kinds = {ThinnessKind::thin(), ThinnessKind::pthin(), ThinnessKind::indthin(), ThinnessKind::indpthin()};
  else
    kinds = {ThinnessKind::parse(o.kind)};
  Report r(json);
  r.put("n", g.n());
  r.put("m", static_cast<int>(g.edge_count()));
  bool budget_hit = false;
  for (const ThinnessKind& kind : kinds) {
    ThinnessResult res = exact_thinness(g, kind, make_budget(o.seconds, o.nodes));
    const std::string k = kind.name();
    if (res.exact) {
      r.put(k, res.value);
    } else {
      budget_hit = true;
      r.data()[k] = {{"upper_bound", res.value}, {"lower_bound", res.lower_bound}, {"budget_exceeded", true}};
      r.line(k + "<=" + std::to_string(res.value) + " (budget exceeded, lower bound " +
             std::to_string(res.lower_bound) + ")");
    }
    r.put(k + "_certificate", certificate_to_json(res.certificate, kind));
  }
  r.emit(std::cout);
  return budget_hit ? kBudget : kOk;
}

// ---------------------------------------------------------------- order-check

struct OrderCheckOpts {
  GraphSource src;
  std::string cert;
  std::string order, classes;
  std::string kind;
  bool independent = false;
};

int run_order_check(const OrderCheckOpts& o, bool json) {
  auto [g, fx] = o.src.load();
  Representation rep;
  ThinnessKind kind = ThinnessKind::thin();
  bool have_classes = true;
  if (!o.cert.empty()) {
    rep = certificate_from_json(read_json_file(o.cert), &kind);
  } else if (!o.order.empty()) {
    rep.order.seq = parse_int_list(o.order);
    if (o.classes.empty()) {
      have_classes = false;
    } else {
      rep.partition = compact_partition(parse_int_list(o.classes));
    }
  } else if (fx && fx->certificate) {
    rep = *fx->certificate;
    kind = fx->certificate_kind;
  } else {
    throw InputError("order-check needs --cert, --order or a fixture with a certificate");
  }
  if (!o.kind.empty()) kind = ThinnessKind::parse(o.kind);
  if (o.independent) kind.independent = true;
  validate_order(rep.order, g.n());

  Report r(json);
  r.put("kind", kind.name());
  if (!have_classes) {
    Partition p = min_classes_for_order(g, rep.order, kind.mode(), kind.independent);
    r.put("order", rep.order.seq, join(rep.order.seq));
    r.put("min_classes", p.k);
    r.put("classes", p.class_of, join(p.class_of));
    r.emit(std::cout);
    return kOk;
  }
  validate_partition(rep.partition, g.n());
  CertificateCheck c = check_certificate(g, rep, kind);
  r.flag("valid", c.ok);
  r.put("k", rep.partition.k);
  if (!c.ok) {
    r.put("reason", c.reason);
    if (c.witness) r.put("witness", violation_json(*c.witness), violation_text(*c.witness));
  }
  r.emit(std::cout);
  return c.ok ? kOk : kInvalid;
}

// ---------------------------------------------------------------- extend

struct ExtendOpts {
  std::string input;
  std::string mode;
};

int run_extend(const ExtendOpts& o, bool json) {
  CeoInstance inst = ceo_instance_from_json(read_json_file(o.input));
  if (!o.mode.empty()) inst.mode = parse_mode(o.mode);
  CeoResult res = solve_ceo(inst.graph, inst.partition, inst.porder, inst.mode);
  Report r(json);
  r.put("mode", to_string(inst.mode));
  switch (res.status) {
    case CeoResult::Status::feasible:
      r.put("status", "feasible");
      r.put("order", res.order.seq, join(res.order.seq));
      break;
    case CeoResult::Status::infeasible:
      r.put("status", "infeasible");
      r.put("cycle", res.cycle, join(res.cycle, "->"));
      break;
    case CeoResult::Status::precondition_violated:
      r.put("status", "precondition_violated");
      r.put("class", res.violating_class);
      if (res.violation) r.put("witness", violation_json(*res.violation), violation_text(*res.violation));
      r.emit(std::cout);
      return kInvalid;
  }
  r.emit(std::cout);
  return kOk;
}

// ---------------------------------------------------------------- model

struct ModelOpts {
  GraphSource src;
  std::string cert;
  std::string build;
  std::string input;
  std::string output;
  std::string svg;
  bool independent = false;
  bool check = false;
  double seconds = 60;
};

void check_box_model(Report& r, const BoxModel& m, const Graph* g) {
  r.put("type", "box");
  r.put("n", static_cast<int>(m.boxes.size()));
  const Graph ig = intersection_graph(m);
  if (g) r.flag("reproduces_graph", ig.n() == g->n() && ig.same_edges(*g));
  DiagonalReport d = check_diagonal(m);
  r.put("diagonal", to_string(d.label));
  if (d.label != DiagonalLabel::neither) {
    r.put("d1", d.d1);
    r.put("d2", d.d2);
  } else {
    r.put("diagonal_reason", d.reason);
  }
  const bool two = d.label == DiagonalLabel::two_diagonal;
  PairCheck blocking, semi;
  if (two) {
    blocking = check_blocking(m);
    r.put("blocking", pair_json(blocking), pair_text(blocking));
  } else {
    r.put("blocking", nullptr, "n/a");
  }
  if (d.label != DiagonalLabel::neither) {
    semi = check_bi_semi_proper(m);
    r.put("bi_semi_proper", pair_json(semi), pair_text(semi));
  } else {
    r.put("bi_semi_proper", nullptr, "n/a");
  }
  if (two && blocking.ok) {
    const ConsistencyMode mode = semi.ok ? ConsistencyMode::strong : ConsistencyMode::consistent;
    Representation rep = recover_representation(m, mode);
    const ThinnessKind kind = semi.ok ? ThinnessKind::pthin() : ThinnessKind::thin();
    r.put("recovered", certificate_to_json(rep, kind));
    r.flag("recovered_verifies", verify_certificate(ig, rep, kind));
  }
}

void check_path_model(Report& r, const GridPathModel& m, const Graph* g) {
  r.put("type", "paths");
  r.put("n", static_cast<int>(m.paths.size()));
  if (g) {
    const Graph ig = path_intersection_graph(m);
    r.flag("reproduces_graph", ig.n() == g->n() && ig.same_edges(*g));
  }
  int max_bends = 0;
  bool corners_on_diagonal = true;
  std::map<std::string, int> shapes;
  for (const GridPath& p : m.paths) {
    max_bends = std::max(max_bends, p.bends());
    ++shapes[shape_tag(p)];
    if (p.bends() == 1 && p.pts[1].first + p.pts[1].second != 0) corners_on_diagonal = false;
  }
  r.put("max_bends", max_bends);
  std::string shape_line;
  for (const auto& [tag, count] : shapes) shape_line += (shape_line.empty() ? "" : " ") + tag + ":" + std::to_string(count);
  r.put("shapes", nlohmann::json(shapes), shape_line);
  if (max_bends <= 1) {
    r.flag("corners_on_antidiagonal", corners_on_diagonal);
    PairCheck b = check_blocking_l(m);
    r.put("l_blocking", pair_json(b), pair_text(b));
  }
}

int run_model(const ModelOpts& o, bool json) {
  std::optional<Graph> g;
  std::optional<Fixture> fx;
  if (o.src.given()) std::tie(g, fx) = o.src.load();

  std::optional<BoxModel> boxes;
  std::optional<GridPathModel> paths;
  if (!o.input.empty()) {
    if (!o.build.empty()) throw InputError("--input and --build are exclusive");
    nlohmann::json j = read_json_file(o.input);
    if (j.is_object() && j.contains("paths")) {
      paths = path_model_from_json(j);
      validate_path_model(*paths);
    } else {
      boxes = normalized(box_model_from_json(j));
    }
  } else if (!o.build.empty()) {
    if (!g) throw InputError("--build needs a graph");
    const bool three = o.build == "vpg3";
    if (!three && o.build != "m1" && o.build != "m2" && o.build != "m3" && o.build != "m4")
      throw InputError("unknown model '" + o.build + "' (m1, m2, m3, m4, vpg3)");
    const int want = three ? 3 : 2;
    const ThinnessKind kind{false, o.independent};
    Representation rep;
    if (!o.cert.empty()) {
      rep = certificate_from_json(read_json_file(o.cert));
    } else if (fx && fx->certificate) {
      rep = *fx->certificate;
    } else {
      ThinnessResult t = exact_thinness(*g, kind, make_budget(o.seconds, 0));
      if (!t.exact) throw ExitError(kBudget, "no certificate given and the " + kind.name() + " search ran out of budget");
      rep = t.certificate;
    }
    CertificateCheck c = check_certificate(*g, rep, kind);
    if (!c.ok)
      throw ExitError(kInvalid, "certificate does not verify as " + kind.name() + ": " + c.reason +
                                    (c.witness ? ", " + violation_text(*c.witness) : ""));
    if (rep.partition.k != want)
      throw ExitError(kInvalid, "certificate has " + std::to_string(rep.partition.k) + " classes; " + o.build +
                                    " needs exactly " + std::to_string(want));
    if (o.build == "m1") boxes = build_m1(*g, rep);
    if (o.build == "m2") boxes = build_m2(build_m1(*g, rep));
    if (o.build == "m3") paths = build_m3(*g, rep, o.independent);
    if (o.build == "m4") paths = build_m4(*g, rep);
    if (three) paths = build_vpg_3thin(*g, rep, o.independent);
  } else if (fx && fx->boxes) {
    boxes = normalized(*fx->boxes);
  } else if (fx && fx->paths) {
    paths = *fx->paths;
  } else {
    throw InputError("model needs --build, --input, or a fixture that carries a model");
  }

  const nlohmann::json model_json = boxes ? box_model_to_json(*boxes) : path_model_to_json(*paths);
  if (!o.svg.empty()) write_text_file(o.svg, boxes ? box_model_to_svg(*boxes) : path_model_to_svg(*paths));
  if (!o.output.empty()) write_text_file(o.output, model_json.dump(2) + "\n");
  if (o.check) {
    Report r(json);
    const Graph* gp = g ? &*g : nullptr;
    if (boxes)
      check_box_model(r, *boxes, gp);
    else
      check_path_model(r, *paths, gp);
    if (json) r.data()["model"] = model_json;
    r.emit(std::cout);
  } else if (o.output.empty() && o.svg.empty()) {
    std::cout << model_json.dump(json ? 2 : -1) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- pattern

struct PatternOpts {
  GraphSource src;
  std::string family;
  std::string dsl;
  std::string order, colour, side_a, side_b;
  bool classify = false;
  bool list = false;
  double seconds = 0;
  std::uint64_t nodes = 0;
};

PatternFamily load_family(const PatternOpts& o) {
  if (!o.family.empty() && !o.dsl.empty()) throw InputError("--family and --dsl are exclusive");
  if (!o.dsl.empty()) {
    PatternFamily f;
    f.patterns = parse_pattern_dsl(o.dsl == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(o.dsl));
    if (f.patterns.empty()) throw InputError("the DSL text defines no pattern");
    for (const Pattern& p : f.patterns) {
      if (p.flavor != f.patterns.front().flavor) throw InputError("a family must use a single pattern flavour");
      f.name += (f.name.empty() ? "" : ",") + (p.name.empty() ? std::string("anonymous") : p.name);
    }
    return f;
  }
  return parse_family(o.family);
}

void put_membership(Report& r, const std::string& key, const MembershipResult& m, PatternFlavor flavor) {
  nlohmann::json j{{"status", to_string(m.status)}, {"nodes", m.nodes}};
  std::string text = to_string(m.status);
  if (m.status == MembershipResult::Status::member) {
    if (flavor == PatternFlavor::bipartite) {
      j["side_a"] = m.sides.a;
      j["side_b"] = m.sides.b;
      text += " sides " + join(m.sides.a) + " | " + join(m.sides.b);
    } else {
      j["order"] = m.order.seq;
      text += " order " + join(m.order.seq);
      if (flavor == PatternFlavor::bicolored) {
        j["colour"] = m.colour;
        text += " colour " + join(m.colour);
      }
    }
  }
  r.put(key, j, text);
}

int run_pattern(const PatternOpts& o, bool json) {
  if (o.list) {
    std::vector<Pattern> pats = o.family.empty() && o.dsl.empty() ? builtin_patterns() : load_family(o).patterns;
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Pattern& p : pats) arr.push_back({{"name", p.name}, {"flavor", to_string(p.flavor)}, {"dsl", to_dsl(p)}});
      std::cout << arr.dump(2) << '\n';
    } else {
      for (const Pattern& p : pats) std::cout << to_dsl(p) << '\n';
    }
    return kOk;
  }
  auto [g, fx] = o.src.load();
  const Budget budget = make_budget(o.seconds, o.nodes);
  Report r(json);
  if (o.classify) {
    bool hit = false;
    for (const ClassReport& c : classify(g, budget)) {
      put_membership(r, c.cls, c.result, parse_family(c.family).flavor());
      r.data()[c.cls]["family"] = c.family;
      hit = hit || c.result.status == MembershipResult::Status::budget_exceeded;
    }
    r.emit(std::cout);
    return hit ? kBudget : kOk;
  }
  if (o.family.empty() && o.dsl.empty()) throw InputError("pattern needs --family, --dsl, --classify or --list");
  PatternFamily fam = load_family(o);
  r.put("family", fam.name);
  const bool ordered = !o.order.empty() || !o.side_a.empty() || !o.side_b.empty();
  if (ordered) {
    bool any = false;
    nlohmann::json hits = nlohmann::json::object();
    for (const Pattern& p : fam.patterns) {
      std::optional<std::vector<int>> t;
      if (p.flavor == PatternFlavor::bipartite) {
        t = occurs(g, SideOrders{parse_int_list(o.side_a), parse_int_list(o.side_b)}, p);
      } else {
        VertexOrder ord{parse_int_list(o.order)};
        if (p.flavor == PatternFlavor::plain) {
          t = occurs(g, ord, p);
        } else {
          if (o.colour.empty()) throw InputError("bicolored patterns need --colour");
          t = occurs(g, ord, parse_int_list(o.colour), p);
        }
      }
      hits[p.name] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
      r.line(p.name + "=" + (t ? "occurs at " + join(*t) : std::string("absent")));
      any = any || t.has_value();
    }
    r.data()["occurrences"] = hits;
    r.flag("avoids", !any);
    r.emit(std::cout);
    return kOk;
  }
  MembershipResult m = ord_membership(g, fam, budget);
  put_membership(r, "membership", m, fam.flavor());
  r.emit(std::cout);
  return m.status == MembershipResult::Status::budget_exceeded ? kBudget : kOk;
}

// ---------------------------------------------------------------- bounds

constexpr int kBandwidthMax = 12;
constexpr int kPathwidthMax = 16;
constexpr int kPeakMax = 20;

int run_bounds(const GraphSource& src, bool json) {
  auto [g, fx] = src.load();
  Report r(json);
  const int n = g.n();
  r.put("n", n);
  const int delta = g.max_degree();
  r.put("max_degree", delta);
  if (n <= kBandwidthMax) {
    BandwidthResult bw = bandwidth(g);
    r.put("bandwidth", bw.value);
    r.put("labeling", labeling_to_json(bw.labeling), join(bw.labeling.f));
    PathDecomposition pd = proper_decomposition_from_labeling(g, bw.labeling);
    Representation rep = partition_from_decomposition(g, pd);
    r.put("indpthin_upper", rep.partition.k);
    r.put("indpthin_certificate", certificate_to_json(rep, ThinnessKind::indpthin()));
  } else {
    r.put("bandwidth", nullptr, "n/a (n > " + std::to_string(kBandwidthMax) + ")");
  }
  if (n <= kPathwidthMax) {
    PathwidthResult pw = pathwidth(g);
    r.put("pathwidth", pw.value);
    r.put("decomposition", decomposition_to_json(pw.decomposition));
    Representation rep = partition_from_decomposition(g, pw.decomposition);
    r.put("indthin_upper", rep.partition.k);
    r.put("indthin_certificate", certificate_to_json(rep, ThinnessKind::indthin()));
  } else {
    r.put("pathwidth", nullptr, "n/a (n > " + std::to_string(kPathwidthMax) + ")");
  }
  if (n <= kPeakMax) {
    const int peak = iso_peak(g);
    r.put("iso_peak", peak);
    if (delta > 0) r.put("thin_lower", (peak + delta - 1) / delta);
  } else {
    r.put("iso_peak", nullptr, "n/a (n > " + std::to_string(kPeakMax) + ")");
  }
  if (n > 0 && is_connected(g)) {
    const int d = diameter(g);
    r.put("diameter", d);
    r.put("pthin_upper_from_diameter", n - d);
  } else {
    r.put("diameter", nullptr, "n/a (disconnected)");
  }
  r.emit(std::cout);
  return kOk;
}

// ---------------------------------------------------------------- gallery

struct GalleryOpts {
  std::string name;
  std::string cert_out;
  std::string model_out;
};

int run_gallery(const GalleryOpts& o, bool json) {
  if (o.name.empty()) {
    if (json) {
      std::cout << nlohmann::json(fixture_names()).dump(2) << '\n';
    } else {
      for (const auto& s : fixture_names()) std::cout << s << '\n';
    }
    return kOk;
  }
  Fixture f = make_fixture(o.name);
  nlohmann::json cert = f.certificate ? certificate_to_json(*f.certificate, f.certificate_kind) : nlohmann::json(nullptr);
  if (!o.cert_out.empty()) {
    if (!f.certificate) throw InputError("fixture " + f.name + " carries no certificate");
    write_text_file(o.cert_out, cert.dump(2) + "\n");
  }
  if (!o.model_out.empty()) {
    if (f.boxes)
      write_text_file(o.model_out, box_model_to_json(*f.boxes).dump(2) + "\n");
    else if (f.paths)
      write_text_file(o.model_out, path_model_to_json(*f.paths).dump(2) + "\n");
    else
      throw InputError("fixture " + f.name + " carries no model");
  }
  if (json) {
    nlohmann::json facts = nlohmann::json::array();
    for (const KnownFact& k : f.facts) facts.push_back({{"property", k.property}, {"value", k.value}, {"tag", k.tag}});
    nlohmann::json j{{"name", f.name}, {"description", f.description}, {"graph", graph_to_json(f.graph)}, {"facts", facts}};
    j["certificate"] = cert;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "# " << f.name << ": " << f.description << '\n';
  for (const KnownFact& k : f.facts) std::cout << "# " << k.property << " = " << k.value << " [" << k.tag << "]\n";
  if (f.certificate) std::cout << "# certificate " << cert.dump() << '\n';
  write_graph_text(std::cout, f.graph);
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepOpts {
  std::string theorem;
  SweepOptions opt;
  double seconds = 0;
  bool timing = false;
};

int run_sweep_cmd(const SweepOpts& o, bool json) {
  std::vector<std::string> names = o.theorem == "all" ? sweep_theorems() : std::vector<std::string>{o.theorem};
  SweepOptions opt = o.opt;
  opt.budget = make_budget(o.seconds, 0);
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& name : names) {
    SweepReport rep = run_sweep(name, opt);
    ok = ok && rep.ok();
    if (json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const SweepRow& row : rep.rows) rows.push_back({{"n", row.n}, {"checked", row.checked}, {"failed", row.failed}});
      nlohmann::json j{{"theorem", rep.theorem}, {"rows", rows},          {"checked", rep.checked},
                       {"failed", rep.failed},   {"pass", rep.ok()},      {"mismatches", rep.mismatches}};
      if (o.timing) j["seconds"] = rep.seconds;
      all.push_back(j);
      continue;
    }
    std::cout << "theorem " << rep.theorem << '\n';
    std::cout << "  n  checked  failed\n";
    for (const SweepRow& row : rep.rows)
      std::cout << (row.n < 10 ? "  " : " ") << row.n << "  " << row.checked << "  " << row.failed << '\n';
    std::cout << "  total " << rep.checked << " checked, " << rep.failed << " failed: " << (rep.ok() ? "PASS" : "FAIL");
    if (o.timing) std::cout << " (" << rep.seconds << " s)";
    std::cout << '\n';
    for (const auto& m : rep.mismatches) std::cout << "  mismatch: " << m << '\n';
  }
  if (json) std::cout << (names.size() == 1 ? all[0] : all).dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Thinness toolkit: exact thinness, order checks, models, patterns and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_graph = [](CLI::App* sub, GraphSource& src) {
    sub->add_option("graph", src.path, "Graph file (text or JSON, '-' for stdin)");
    sub->add_option("--fixture", src.fixture, "Named fixture instead of a file, e.g. fig1a or grid:3");
  };

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "Exact thinness with a certificate");
  add_graph(analyze, ao.src);
  analyze->add_option("--kind", ao.kind, "thin, pthin, indthin, indpthin or all")
      ->check(CLI::IsMember({"thin", "pthin", "indthin", "indpthin", "all"}));
  analyze->add_option("--budget", ao.seconds, "Time budget in seconds per kind (0 = none)");
  analyze->add_option("--nodes", ao.nodes, "Search node budget per kind (0 = none)");

  OrderCheckOpts oc;
  auto* order_check = app.add_subcommand("order-check", "Verify a certificate or find the fewest classes for an order");
  add_graph(order_check, oc.src);
  order_check->add_option("--cert", oc.cert, "Certificate JSON");
  order_check->add_option("--order", oc.order, "Vertex order, comma separated");
  order_check->add_option("--classes", oc.classes, "Class of each vertex, comma separated");
  order_check->add_option("--kind", oc.kind, "Override the certificate kind")
      ->check(CLI::IsMember({"thin", "pthin", "indthin", "indpthin"}));
  order_check->add_flag("--independent", oc.independent, "Require independent classes");

  ExtendOpts eo;
  auto* extend = app.add_subcommand("extend", "Extend per-class orders to a consistent total order");
  extend->add_option("instance", eo.input, "Instance JSON with graph, classes and class_orders")->required();
  extend->add_option("--mode", eo.mode, "consistent or strong")->check(CLI::IsMember({"consistent", "strong"}));

  ModelOpts mo;
  auto* model = app.add_subcommand("model", "Build, check and draw box and path models");
  add_graph(model, mo.src);
  model->add_option("--cert", mo.cert, "Certificate JSON");
  model->add_option("--build", mo.build, "m1, m2, m3, m4 or vpg3");
  model->add_option("--input", mo.input, "Existing model JSON to check");
  model->add_option("--output", mo.output, "Write the model JSON here");
  model->add_option("--svg", mo.svg, "Write an SVG drawing here");
  model->add_flag("--independent", mo.independent, "Certificate classes are independent");
  model->add_flag("--check", mo.check, "Report the model predicates");
  model->add_option("--budget", mo.seconds, "Seconds for computing a missing certificate");

  PatternOpts po;
  auto* pattern = app.add_subcommand("pattern", "Ordered pattern membership and occurrence");
  add_graph(pattern, po.src);
  pattern->add_option("--family", po.family, "Builtin family such as P6789, R12 or P5,P6,P9");
  pattern->add_option("--dsl", po.dsl, "File with patterns in the text DSL");
  pattern->add_option("--order", po.order, "Check occurrence in this vertex order instead of searching");
  pattern->add_option("--colour", po.colour, "Colour per vertex for bicolored patterns (1 = white)");
  pattern->add_option("--side-a", po.side_a, "Order of the unprimed side for bipartite patterns");
  pattern->add_option("--side-b", po.side_b, "Order of the primed side for bipartite patterns");
  pattern->add_flag("--classify", po.classify, "Test every characterised class");
  pattern->add_flag("--list", po.list, "Print patterns in the DSL");
  pattern->add_option("--budget", po.seconds, "Time budget in seconds (0 = none)");
  pattern->add_option("--nodes", po.nodes, "Search node budget (0 = none)");

  GraphSource bo;
  auto* bounds = app.add_subcommand("bounds", "Bandwidth, pathwidth, peak and diameter bounds");
  add_graph(bounds, bo);

  GalleryOpts go;
  auto* gallery = app.add_subcommand("gallery", "List fixtures or print one with its facts");
  gallery->add_option("name", go.name, "Fixture name");
  gallery->add_option("--cert-out", go.cert_out, "Write the fixture certificate JSON here");
  gallery->add_option("--model-out", go.model_out, "Write the fixture model JSON here");

  SweepOpts so;
  auto* sweep = app.add_subcommand("sweep", "Cross-check theorems over enumerated or sampled graphs");
  sweep->add_option("--theorem", so.theorem, "Theorem name or 'all'")->required();
  sweep->add_option("--n", so.opt.n, "Largest vertex count");
  sweep->add_option("--samples", so.opt.samples, "Random instances for sampled theorems");
  sweep->add_option("--orders", so.opt.orders, "Random orders per graph for perfection");
  sweep->add_option("--seed", so.opt.seed, "Random seed");
  sweep->add_option("--budget", so.seconds, "Seconds per solver call (0 = none)");
  sweep->add_flag("--timing", so.timing, "Include wall time in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }

  const bool json = format == "json";
  try {
    if (*analyze) return run_analyze(ao, json);
    if (*order_check) return run_order_check(oc, json);
    if (*extend) return run_extend(eo, json);
    if (*model) return run_model(mo, json);
    if (*pattern) return run_pattern(po, json);
    if (*bounds) return run_bounds(bo, json);
    if (*gallery) return run_gallery(go, json);
    if (*sweep) return run_sweep_cmd(so, json);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace thinness::cli

int main(int argc, char** argv) { return thinness::cli::run(argc, argv); }
