#include "burnside/report_json.hpp"

#include <sstream>

namespace burnside {

namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

std::string constants_line(const BoundConstants& c) {
  std::ostringstream os;
  os << "c=" << c.c << " c1=" << c.c1 << " c2=" << c.c2 << " c3=" << c.c3 << " c4=" << c.c4
     << " SPORADIC_MAX=" << c.sporadic_max.to_string();
  return os.str();
}

ojson constants_json(const BoundConstants& c) {
  ojson j;
  j["c"] = c.c;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["c3"] = c.c3;
  j["c4"] = c.c4;
  j["sporadic_max"] = to_json(c.sporadic_max);
  return j;
}

}  // namespace

ojson to_json(const TowerNumber& t) {
  ojson j;
  j["value"] = t.to_string();
  j["height"] = t.height();
  j["index"] = t.index_string(40);
  j["inexact"] = t.inexact();
  if (auto r = t.to_real(); r && *r < Real("1e30")) j["decimal"] = r->str(30);
  return j;
}

ojson to_json(const BoundReport& r) {
  ojson j;
  j["d"] = r.d;
  j["length"] = r.l;
  j["lambda_used"] = r.lambda_used;
  j["x"] = r.x.str(30);
  j["constants"] = constants_json(r.constants);
  ojson stages;
  stages["alt_bound"] = to_json(r.semisimple.alt);
  ojson lie = ojson::array();
  for (const auto& lb : r.semisimple.lie) {
    ojson e;
    e["family"] = std::string(family_symbol(lb.family));
    e["closed"] = to_json(lb.closed);
    e["grid"] = to_json(lb.grid);
    ojson pts = ojson::array();
    for (const auto& [k, q] : lb.grid_points) pts.push_back({k, q});
    e["grid_points"] = pts;
    lie.push_back(e);
  }
  stages["lie_bounds"] = lie;
  stages["sporadic_factor"] = to_json(r.semisimple.sporadic_factor);
  stages["semisimple_bound"] = to_json(r.semisimple.product);
  stages["semisimple_normalized"] = to_json(r.semisimple.normalized);
  stages["semisimple_within_normalized"] = r.semisimple.product_within_normalized;
  stages["anabelian_recursive"] = to_json(r.anabelian.recursive);
  stages["anabelian_intermediate"] = to_json(r.anabelian.intermediate);
  stages["anabelian_closed"] = to_json(r.anabelian.closed);
  stages["main_bound"] = to_json(r.main_bound);
  j["stages"] = stages;
  ojson notes = ojson::array();
  notes.push_back("nonsolvable length <= law length is taken as an input fact, not derived here");
  for (const auto& n : r.notes) notes.push_back(n);
  j["notes"] = notes;
  return j;
}

ojson to_json(const LawCheck& c) {
  ojson j;
  j["verdict"] = to_string(c.verdict);
  j["exhaustive"] = c.exhaustive;
  j["tuples_checked"] = c.tuples_checked;
  if (!c.exhaustive) j["seed"] = c.seed;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

ojson to_json(const AnalysisReport& r) {
  ojson j;
  j["word"] = r.word.to_string();
  j["length"] = r.length;
  j["d"] = r.d;
  j["case"] = to_string(r.word_case);
  j["n"] = r.n;
  ojson v;
  v["kind"] = to_string(r.verdict);
  if (r.burnside) {
    v["a"] = r.burnside->a;
    v["p"] = r.burnside->p;
    v["b"] = r.burnside->b;
  }
  if (!r.verdict_groups.empty()) {
    ojson g = ojson::array();
    for (const auto& id : r.verdict_groups) g.push_back(id.to_string());
    v["groups"] = g;
  }
  j["verdict"] = v;
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) {
    ojson e;
    e["group"] = w.group.to_string();
    e["order"] = w.order;
    e["exponent"] = w.exponent;
    e["check_rank"] = w.check_rank;
    e["law_check"] = to_json(w.check);
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  if (!r.sub_reports.empty()) {
    ojson subs = ojson::array();
    for (const auto& s : r.sub_reports) subs.push_back(to_json(s));
    j["sub_reports"] = subs;
  }
  j["bound"] = r.bound ? to_json(*r.bound) : ojson(nullptr);
  j["notes"] = r.notes;
  return j;
}

ojson to_json(const ShortestLaw& s) {
  ojson j;
  j["law"] = s.law ? ojson(s.law->to_string()) : ojson(nullptr);
  j["law_length"] = s.law ? ojson(word_length(*s.law)) : ojson(nullptr);
  j["complete_length"] = s.complete_length;
  j["words_tested"] = s.words_tested;
  j["certificate"] = s.law ? "law found; no shorter canonical word is a law"
                           : "none_up_to(" + std::to_string(s.complete_length) + ")";
  return j;
}

ojson to_json(const GeneratedPower& p) {
  ojson j;
  j["generating_tuples"] = p.generating_tuples;
  j["automorphisms"] = p.automorphisms;
  j["max_power"] = p.max_power;
  j["crude_bound"] = p.crude_bound;
  return j;
}

ojson to_json(const SeriesVerification& v) {
  ojson j;
  j["lambda_upper_bound"] = v.lambda_upper_bound;
  ojson fs = ojson::array();
  for (const auto& f : v.factors) {
    ojson e;
    e["from"] = f.from;
    e["to"] = f.to;
    e["factor_order"] = f.factor_order;
    e["solvable"] = f.solvable;
    e["semisimple"] = f.semisimple;
    e["method"] = f.method;
    fs.push_back(e);
  }
  j["factors"] = fs;
  return j;
}

ojson to_json(const CompositionReport& r) {
  ojson j;
  j["group_order"] = r.group_order;
  ojson fs = ojson::array();
  for (const auto& f : r.factors) fs.push_back(f.to_string());
  j["factors"] = fs;
  ojson sizes = ojson::array();
  for (const auto& s : r.series) sizes.push_back(s.elements.size());
  j["series_orders"] = sizes;
  j["anabelian"] = r.is_anabelian();
  return j;
}

ojson to_json(const LambdaReport& r) {
  ojson j;
  j["lambda"] = r.lambda;
  j["certified"] = r.certified;
  j["upper_bound"] = r.upper_bound;
  ojson steps = ojson::array();
  for (const auto& s : r.series) {
    ojson e;
    e["order"] = s.subgroup.elements.size();
    e["factor"] = s.tag == SeriesTag::Solvable ? "solvable" : "semisimple";
    steps.push_back(e);
  }
  j["series"] = steps;
  j["notes"] = r.notes;
  return j;
}

ojson make_envelope(const std::string& command, const Config& config, ojson result) {
  ojson j;
  j["tool"] = "burnside";
  j["version"] = version();
  j["command"] = command;
  j["config"] = config.to_json();
  j["result"] = std::move(result);
  return j;
}

std::string render_text(const BoundReport& r) {
  std::ostringstream os;
  os << "bound for d=" << r.d << ", law length l=" << r.l << ", nonsolvable length k=" << r.lambda_used << "\n";
  os << "  constants: " << constants_line(r.constants) << "\n";
  os << "  x = c d l ln l = " << r.x.str(12) << "\n";
  os << "  [alternating factors] " << r.semisimple.alt.to_display() << "\n";
  for (const auto& lb : r.semisimple.lie) {
    os << "  [Lie type " << family_symbol(lb.family) << "] closed " << lb.closed.to_display() << ", grid "
       << lb.grid.to_display() << " (" << lb.grid_points.size() << " grid points)\n";
  }
  os << "  [sporadic factor] " << r.semisimple.sporadic_factor.to_display() << "\n";
  os << "  [semisimple product] " << r.semisimple.product.to_display() << "\n";
  os << "  [semisimple normalized E_2(x)] " << r.semisimple.normalized.to_display()
     << (r.semisimple.product_within_normalized ? "" : " (below the product for these constants)") << "\n";
  os << "  [anabelian recursion] " << r.anabelian.recursive.to_display() << "\n";
  os << "  [anabelian intermediate E_2k(x + ln ln 2x^2)] " << r.anabelian.intermediate.to_display() << "\n";
  os << "  [anabelian closed E_2k(2x)] " << r.anabelian.closed.to_display() << "\n";
  os << "  main bound: " << r.main_bound.to_display() << "\n";
  os << "  note: nonsolvable length <= law length is an input fact, not derived here\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const AnalysisReport& r, int indent) {
  std::ostringstream os;
  const std::string p = pad(indent);
  os << p << "word " << r.word.to_string() << " (length " << r.length << ", d=" << r.d << ")\n";
  os << p << "  case: " << to_string(r.word_case);
  if (r.word_case != WordCase::Derived) os << ", n=" << r.n;
  os << "\n" << p << "  verdict: " << to_string(r.verdict);
  if (r.burnside) {
    os << " {a=" << r.burnside->a;
    if (r.burnside->b > 0) os << ", p=" << r.burnside->p << ", b=" << r.burnside->b;
    os << "}";
  }
  if (!r.verdict_groups.empty()) {
    os << " {";
    for (std::size_t i = 0; i < r.verdict_groups.size(); ++i) {
      os << (i ? ", " : "") << r.verdict_groups[i].to_string();
    }
    os << "}";
  }
  os << "\n";
  for (const auto& w : r.witnesses) {
    os << p << "  witness " << w.group.to_string() << ": order " << w.order << ", exponent " << w.exponent
       << ", law " << to_string(w.check.verdict) << " on " << w.check.tuples_checked << " tuples of rank "
       << w.check_rank << "\n";
  }
  for (const auto& n : r.notes) os << p << "  note: " << n << "\n";
  for (const auto& s : r.sub_reports) os << render_text(s, indent + 4);
  if (indent == 0 && r.bound) {
    os << "  size bound for finite anabelian quotients: " << r.bound->main_bound.to_display() << "\n";
  }
  return os.str();
}

}  // namespace burnside
