#include "thinness/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

namespace thinness {

namespace {

Edge norm(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Pattern plain(const std::string& name, int size, std::vector<Edge> e, std::vector<Edge> ne) {
  Pattern p;
  p.name = name;
  p.size = size;
  for (auto& [a, b] : e) p.edges.push_back(norm(a - 1, b - 1));
  for (auto& [a, b] : ne) p.nonedges.push_back(norm(a - 1, b - 1));
  return p;
}

Pattern bicol(const std::string& name, std::vector<int> white, std::vector<Edge> e, std::vector<Edge> ne) {
  Pattern p = plain(name, 3, std::move(e), std::move(ne));
  p.flavor = PatternFlavor::bicolored;
  p.white.assign(3, 0);
  for (int w : white) p.white[static_cast<std::size_t>(w - 1)] = 1;
  return p;
}

// Pairs are (unprimed, primed), both 1-based.
Pattern bip(const std::string& name, int a, int b, std::vector<Edge> e, std::vector<Edge> ne) {
  Pattern p;
  p.name = name;
  p.flavor = PatternFlavor::bipartite;
  p.size = a + b;
  p.side_a = a;
  for (auto& [x, y] : e) p.edges.push_back({x - 1, a + y - 1});
  for (auto& [x, y] : ne) p.nonedges.push_back({x - 1, a + y - 1});
  return p;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// Backtracking matcher. Pattern vertex i draws from seqs[group(i)] at strictly increasing
// indices within its group. When force >= 0, the last pattern vertex of that group must
// take the last entry of the group's sequence.
class Matcher {
 public:
  Matcher(const Graph& g, const Pattern& p, const std::vector<int>* seq0, const std::vector<int>* seq1,
          const std::vector<int>* colour)
      : g_(g), p_(p), colour_(colour), assign_(static_cast<std::size_t>(p.size)), index_(static_cast<std::size_t>(p.size)) {
    seqs_[0] = seq0;
    seqs_[1] = seq1;
    back_.resize(static_cast<std::size_t>(p.size));
    for (const auto& [a, b] : p.edges) back_[static_cast<std::size_t>(b)].push_back({a, true});
    for (const auto& [a, b] : p.nonedges) back_[static_cast<std::size_t>(b)].push_back({a, false});
    last_in_group_[0] = last_in_group_[1] = -1;
    for (int i = 0; i < p.size; ++i) last_in_group_[group(i)] = i;
  }

  bool has_group(int grp) const { return last_in_group_[grp] >= 0; }

  std::optional<std::vector<int>> find(int force) {
    force_ = force;
    if (force >= 0 && (!has_group(force) || seqs_[force]->empty())) return std::nullopt;
    if (rec(0)) return assign_;
    return std::nullopt;
  }

 private:
  int group(int i) const { return p_.flavor == PatternFlavor::bipartite && i >= p_.side_a ? 1 : 0; }

  bool rec(int i) {
    if (i == p_.size) return true;
    const int grp = group(i);
    const std::vector<int>& seq = *seqs_[grp];
    int start = 0;
    for (int j = i - 1; j >= 0; --j)
      if (group(j) == grp) {
        start = index_[static_cast<std::size_t>(j)] + 1;
        break;
      }
    int end = static_cast<int>(seq.size());
    if (force_ == grp) {
      if (i == last_in_group_[grp])
        start = std::max(start, end - 1);
      else
        end -= 1;
    }
    for (int idx = start; idx < end; ++idx) {
      const int v = seq[static_cast<std::size_t>(idx)];
      if (colour_ && !p_.white.empty() && ((*colour_)[static_cast<std::size_t>(v)] == 1) != (p_.white[static_cast<std::size_t>(i)] != 0))
        continue;
      bool ok = true;
      for (const auto& [j, edge] : back_[static_cast<std::size_t>(i)])
        if (g_.adjacent(assign_[static_cast<std::size_t>(j)], v) != edge) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assign_[static_cast<std::size_t>(i)] = v;
      index_[static_cast<std::size_t>(i)] = idx;
      if (rec(i + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Pattern& p_;
  const std::vector<int>* seqs_[2];
  const std::vector<int>* colour_;
  std::vector<std::vector<std::pair<int, bool>>> back_;
  std::vector<int> assign_, index_;
  int last_in_group_[2];
  int force_ = -1;
};

class Clock {
 public:
  explicit Clock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  bool tick() {
    ++nodes;
    if (nodes > budget_.nodes) return false;
    if ((nodes & 1023U) == 0 && elapsed() > budget_.seconds) return false;
    return true;
  }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  std::uint64_t nodes = 0;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

enum class Search { found, exhausted, out_of_budget };

// Plain and bicolored placement search over total orders.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, const PatternFamily& f, const std::vector<int>* colour, Clock& clock)
      : g_(g), f_(f), colour_(colour), clock_(clock), used_(static_cast<std::size_t>(g.n()), 0) {}

  Search run() { return rec(); }
  const std::vector<int>& seq() const { return seq_; }

 private:
  Search rec() {
    if (static_cast<int>(seq_.size()) == g_.n()) return Search::found;
    for (int x = 0; x < g_.n(); ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      if (!clock_.tick()) return Search::out_of_budget;
      seq_.push_back(x);
      bool bad = false;
      for (const Pattern& p : f_.patterns)
        if (Matcher(g_, p, &seq_, nullptr, colour_).find(0)) {
          bad = true;
          break;
        }
      if (!bad) {
        used_[static_cast<std::size_t>(x)] = 1;
        Search s = rec();
        used_[static_cast<std::size_t>(x)] = 0;
        if (s != Search::exhausted) return s;
      }
      seq_.pop_back();
    }
    return Search::exhausted;
  }

  const Graph& g_;
  const PatternFamily& f_;
  const std::vector<int>* colour_;
  Clock& clock_;
  std::vector<char> used_;
  std::vector<int> seq_;
};

// Bipartite placement search: the two side orders grow alternately.
class SideSearch {
 public:
  SideSearch(const Graph& g, const PatternFamily& f, std::vector<int> a, std::vector<int> b, Clock& clock)
      : g_(g), f_(f), clock_(clock) {
    side_[0] = std::move(a);
    side_[1] = std::move(b);
    used_[0].assign(side_[0].size(), 0);
    used_[1].assign(side_[1].size(), 0);
  }

  Search run() { return rec(); }
  const std::vector<int>& seq(int s) const { return seq_[s]; }

 private:
  Search rec() {
    const bool a_left = seq_[0].size() < side_[0].size(), b_left = seq_[1].size() < side_[1].size();
    if (!a_left && !b_left) return Search::found;
    const int s = a_left && (!b_left || seq_[0].size() <= seq_[1].size()) ? 0 : 1;
    for (std::size_t i = 0; i < side_[s].size(); ++i) {
      if (used_[s][i]) continue;
      if (!clock_.tick()) return Search::out_of_budget;
      seq_[s].push_back(side_[s][i]);
      bool bad = false;
      for (const Pattern& p : f_.patterns)
        if (Matcher(g_, p, &seq_[0], &seq_[1], nullptr).find(s)) {
          bad = true;
          break;
        }
      if (!bad) {
        used_[s][i] = 1;
        Search r = rec();
        used_[s][i] = 0;
        if (r != Search::exhausted) return r;
      }
      seq_[s].pop_back();
    }
    return Search::exhausted;
  }

  const Graph& g_;
  const PatternFamily& f_;
  Clock& clock_;
  std::vector<int> side_[2], seq_[2];
  std::vector<char> used_[2];
};

// All proper 2-colourings: one bit per component flips its colours.
std::vector<std::vector<int>> all_bipartitions(const Graph& g) {
  std::vector<int> base = bipartition(g);
  if (base.empty() && g.n() > 0) return {};
  auto comps = connected_components(g);
  std::vector<std::vector<int>> out;
  const std::size_t c = comps.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<int> col = base;
    for (std::size_t i = 0; i < c; ++i)
      if ((mask >> i) & 1U)
        for (int v : comps[i]) col[static_cast<std::size_t>(v)] ^= 1;
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

std::string to_string(PatternFlavor f) {
  switch (f) {
    case PatternFlavor::plain:
      return "plain";
    case PatternFlavor::bicolored:
      return "bicolored";
    default:
      return "bipartite";
  }
}

std::string to_string(MembershipResult::Status s) {
  switch (s) {
    case MembershipResult::Status::member:
      return "member";
    case MembershipResult::Status::non_member:
      return "non_member";
    default:
      return "budget_exceeded";
  }
}

bool Pattern::operator==(const Pattern& o) const {
  auto sorted = [](std::vector<Edge> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return flavor == o.flavor && size == o.size && side_a == o.side_a && white == o.white &&
         sorted(edges) == sorted(o.edges) && sorted(nonedges) == sorted(o.nonedges);
}

void validate_pattern(const Pattern& p) {
  const std::string who = "pattern " + (p.name.empty() ? std::string("<unnamed>") : p.name);
  if (p.size <= 0) throw InputError(who + ": size must be positive");
  if (p.flavor == PatternFlavor::bicolored && static_cast<int>(p.white.size()) != p.size)
    throw InputError(who + ": white flags must cover every vertex");
  if (p.flavor == PatternFlavor::bipartite && (p.side_a <= 0 || p.side_a >= p.size))
    throw InputError(who + ": both sides need at least one vertex");
  std::vector<Edge> all;
  for (const auto* list : {&p.edges, &p.nonedges})
    for (const auto& [a, b] : *list) {
      if (a < 0 || b < 0 || a >= p.size || b >= p.size || a == b) throw InputError(who + ": pair out of range");
      if (p.flavor == PatternFlavor::bipartite && ((a < p.side_a) == (b < p.side_a)))
        throw InputError(who + ": bipartite pairs must join the two sides");
      all.push_back(norm(a, b));
    }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InputError(who + ": a pair is listed twice or as both edge and non-edge");
}

const std::vector<Pattern>& builtin_patterns() {
  static const std::vector<Pattern> catalog = [] {
    std::vector<Pattern> c;
    c.push_back(plain("P1", 3, {{1, 3}}, {{2, 3}}));
    c.push_back(plain("P2", 3, {{1, 3}}, {{1, 2}}));
    c.push_back(plain("P3", 3, {{1, 3}}, {{1, 2}, {2, 3}}));
    c.push_back(plain("P4", 3, {{1, 2}, {1, 3}, {2, 3}}, {}));
    c.push_back(plain("P5", 3, {{1, 2}, {2, 3}}, {}));
    c.push_back(plain("P6", 4, {{1, 3}, {2, 4}}, {{2, 3}}));
    c.push_back(plain("P7", 5, {{1, 3}, {3, 5}}, {{2, 3}, {3, 4}}));
    c.push_back(plain("P8", 6, {{1, 3}, {4, 6}}, {{2, 3}, {4, 5}}));
    c.push_back(plain("P9", 6, {{1, 4}, {3, 4}, {3, 6}}, {{2, 4}, {3, 5}}));
    c.push_back(bicol("Q1", {3}, {{1, 3}}, {{2, 3}}));
    c.push_back(bicol("Q2", {1, 2}, {{1, 3}}, {{2, 3}}));
    c.push_back(bicol("Q3", {1}, {{1, 3}}, {{1, 2}}));
    c.push_back(bicol("Q4", {2, 3}, {{1, 3}}, {{1, 2}}));
    c.push_back(bip("R1", 2, 2, {{1, 2}, {2, 1}}, {{1, 1}}));
    c.push_back(bip("R2", 2, 2, {{1, 2}, {2, 1}}, {{2, 2}}));
    c.push_back(bip("R3", 3, 3, {{1, 3}, {3, 1}, {3, 3}}, {{2, 3}, {3, 2}}));
    c.push_back(bip("R4", 3, 1, {{1, 1}, {3, 1}}, {{2, 1}}));
    c.push_back(bip("R4'", 1, 3, {{1, 1}, {1, 3}}, {{1, 2}}));
    for (const Pattern& p : c) validate_pattern(p);
    return c;
  }();
  return catalog;
}

const Pattern& builtin_pattern(const std::string& name) {
  for (const Pattern& p : builtin_patterns())
    if (p.name == name) return p;
  throw InputError("unknown pattern '" + name + "'");
}

PatternFamily parse_family(const std::string& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    // U+2032 PRIME
    if (spec.compare(i, 3, "\xE2\x80\xB2") == 0) {
      s += '\'';
      i += 2;
    } else {
      s += spec[i] == ',' || spec[i] == '+' ? ' ' : spec[i];
    }
  }
  PatternFamily fam;
  fam.name = trim(spec);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if ((letter != 'P' && letter != 'Q' && letter != 'R') || tok.size() < 2)
      throw InputError("bad pattern family token '" + tok + "'");
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw InputError("bad pattern family token '" + tok + "'");
      std::string name = std::string(1, letter) + tok[i];
      if (i + 1 < tok.size() && tok[i + 1] == '\'') {
        name += '\'';
        ++i;
      }
      fam.patterns.push_back(builtin_pattern(name));
    }
  }
  if (fam.patterns.empty()) throw InputError("empty pattern family");
  for (const Pattern& p : fam.patterns)
    if (p.flavor != fam.patterns.front().flavor) throw InputError("pattern family mixes flavors");
  return fam;
}

std::vector<Pattern> parse_pattern_dsl(const std::string& text) {
  std::vector<Pattern> out;
  std::string cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    cleaned += line + ';';
  }
  std::istringstream stmts(cleaned);
  std::string stmt;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("pattern dsl statement " + std::to_string(lineno) + ": " + msg); };
  auto current = [&]() -> Pattern& {
    if (out.empty()) fail("expected 'pattern' first");
    return out.back();
  };
  // Vertex token: "3" or, in bipartite patterns, "3'".
  auto vertex = [&](const std::string& tok, int* primed) {
    Pattern& p = current();
    std::string t = tok;
    *primed = 0;
    if (!t.empty() && t.back() == '\'') {
      *primed = 1;
      t.pop_back();
    }
    int x = 0;
    try {
      std::size_t used = 0;
      x = std::stoi(t, &used);
      if (used != t.size()) fail("bad vertex '" + tok + "'");
    } catch (const std::logic_error&) {
      fail("bad vertex '" + tok + "'");
    }
    if (p.flavor != PatternFlavor::bipartite) {
      if (*primed) fail("primed vertex in a non-bipartite pattern");
      if (x < 1 || x > p.size) fail("vertex out of range");
      return x - 1;
    }
    const int limit = *primed ? p.size - p.side_a : p.side_a;
    if (x < 1 || x > limit) fail("vertex out of range");
    return *primed ? p.side_a + x - 1 : x - 1;
  };
  while (std::getline(stmts, stmt, ';')) {
    ++lineno;
    std::istringstream in(stmt);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "pattern") {
      Pattern p;
      if (tok.size() < 3) fail("pattern needs a flavor and a size");
      try {
        if (tok[1] == "plain" || tok[1] == "bicolored") {
          if (tok.size() != 3) fail("expected 'pattern " + tok[1] + " <size>'");
          p.flavor = tok[1] == "plain" ? PatternFlavor::plain : PatternFlavor::bicolored;
          p.size = std::stoi(tok[2]);
          if (p.flavor == PatternFlavor::bicolored) p.white.assign(static_cast<std::size_t>(std::max(p.size, 0)), 0);
        } else if (tok[1] == "bipartite") {
          if (tok.size() != 4) fail("expected 'pattern bipartite <a> <b>'");
          p.flavor = PatternFlavor::bipartite;
          p.side_a = std::stoi(tok[2]);
          p.size = p.side_a + std::stoi(tok[3]);
        } else {
          fail("unknown flavor '" + tok[1] + "'");
        }
      } catch (const std::logic_error&) {
        fail("bad size");
      }
      if (p.size <= 0 || p.size > 16) fail("size must be between 1 and 16");
      out.push_back(std::move(p));
    } else if (kw == "name") {
      if (tok.size() != 2) fail("expected 'name <id>'");
      current().name = tok[1];
    } else if (kw == "white") {
      Pattern& p = current();
      if (p.flavor != PatternFlavor::bicolored) fail("'white' needs a bicolored pattern");
      int primed = 0;
      for (std::size_t i = 1; i < tok.size(); ++i) p.white[static_cast<std::size_t>(vertex(tok[i], &primed))] = 1;
    } else if (kw == "edge" || kw == "nonedge") {
      if (tok.size() != 3) fail("expected '" + kw + " <u> <v>'");
      Pattern& p = current();
      int pa = 0, pb = 0;
      const int a = vertex(tok[1], &pa), b = vertex(tok[2], &pb);
      if (p.flavor == PatternFlavor::bipartite && pa == pb) fail("bipartite pairs need one primed vertex");
      (kw == "edge" ? p.edges : p.nonedges).push_back(norm(a, b));
    } else {
      fail("unknown statement '" + kw + "'");
    }
  }
  for (const Pattern& p : out) validate_pattern(p);
  return out;
}

std::string to_dsl(const Pattern& p) {
  std::ostringstream o;
  o << "pattern " << to_string(p.flavor) << ' ';
  if (p.flavor == PatternFlavor::bipartite)
    o << p.side_a << ' ' << p.size - p.side_a;
  else
    o << p.size;
  if (!p.name.empty()) o << "; name " << p.name;
  auto vtx = [&](int x) {
    if (p.flavor == PatternFlavor::bipartite && x >= p.side_a) return std::to_string(x - p.side_a + 1) + "'";
    return std::to_string(x + 1);
  };
  if (p.flavor == PatternFlavor::bicolored) {
    o << "; white";
    for (int i = 0; i < p.size; ++i)
      if (p.white[static_cast<std::size_t>(i)]) o << ' ' << i + 1;
  }
  for (const auto& [a, b] : p.edges) o << "; edge " << vtx(a) << ' ' << vtx(b);
  for (const auto& [a, b] : p.nonedges) o << "; nonedge " << vtx(a) << ' ' << vtx(b);
  return o.str();
}

std::optional<std::vector<int>> occurs(const Graph& g, const VertexOrder& order, const Pattern& p) {
  if (p.flavor != PatternFlavor::plain) throw InputError("occurs: pattern " + p.name + " is not a plain pattern");
  validate_order(order, g.n());
  return Matcher(g, p, &order.seq, nullptr, nullptr).find(-1);
}

std::optional<std::vector<int>> occurs(const Graph& g, const VertexOrder& order, const std::vector<int>& colour,
                                       const Pattern& p) {
  if (p.flavor != PatternFlavor::bicolored) throw InputError("occurs: pattern " + p.name + " is not bicolored");
  validate_order(order, g.n());
  if (static_cast<int>(colour.size()) != g.n()) throw InputError("occurs: colouring size does not match the graph");
  return Matcher(g, p, &order.seq, nullptr, &colour).find(-1);
}

std::optional<std::vector<int>> occurs(const Graph& g, const SideOrders& sides, const Pattern& p) {
  if (p.flavor != PatternFlavor::bipartite) throw InputError("occurs: pattern " + p.name + " is not bipartite");
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (const auto* side : {&sides.a, &sides.b})
    for (int v : *side) {
      if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) throw InputError("occurs: side orders must partition the vertices");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  if (sides.a.size() + sides.b.size() != static_cast<std::size_t>(g.n()))
    throw InputError("occurs: side orders must partition the vertices");
  return Matcher(g, p, &sides.a, &sides.b, nullptr).find(-1);
}

MembershipResult ord_membership(const Graph& g, const PatternFamily& family, const Budget& budget) {
  if (family.patterns.empty()) throw InputError("ord_membership: empty family");
  for (const Pattern& p : family.patterns)
    if (p.flavor != family.flavor()) throw InputError("ord_membership: family mixes flavors");
  Clock clock(budget);
  MembershipResult res;
  auto finish = [&](MembershipResult::Status st) {
    res.status = st;
    res.nodes = clock.nodes;
    res.seconds = clock.elapsed();
    return res;
  };
  if (family.flavor() == PatternFlavor::plain) {
    OrderSearch s(g, family, nullptr, clock);
    Search r = s.run();
    if (r == Search::found) res.order.seq = s.seq();
    return finish(r == Search::found ? MembershipResult::Status::member
                  : r == Search::exhausted ? MembershipResult::Status::non_member
                                           : MembershipResult::Status::budget_exceeded);
  }
  for (const std::vector<int>& col : all_bipartitions(g)) {
    Search r;
    if (family.flavor() == PatternFlavor::bicolored) {
      OrderSearch s(g, family, &col, clock);
      r = s.run();
      if (r == Search::found) {
        res.order.seq = s.seq();
        res.colour = col;
      }
    } else {
      std::vector<int> a, b;
      for (int v = 0; v < g.n(); ++v) (col[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
      SideSearch s(g, family, a, b, clock);
      r = s.run();
      if (r == Search::found) res.sides = {s.seq(0), s.seq(1)};
    }
    if (r == Search::found) return finish(MembershipResult::Status::member);
    if (r == Search::out_of_budget) return finish(MembershipResult::Status::budget_exceeded);
  }
  return finish(MembershipResult::Status::non_member);
}

std::vector<ClassReport> classify(const Graph& g, const Budget& budget) {
  static const std::pair<const char*, const char*> classes[] = {
      {"interval", "P1"},
      {"proper_interval", "P12"},
      {"two_thin", "P6789"},
      {"independent_two_thin", "R23"},
      {"proper_independent_two_thin", "P34"},
      {"monotone_l", "P6"},
      {"ord_p569", "P569"},
  };
  std::vector<ClassReport> out;
  for (const auto& [cls, fam] : classes) out.push_back({cls, fam, ord_membership(g, parse_family(fam), budget)});
  return out;
}

}  // namespace thinness
