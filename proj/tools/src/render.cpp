#include "kummer_app/render.hpp"

#include <cstdio>
#include <iomanip>

#include <nlohmann/json.hpp>

namespace kummer::app {

using ojson = nlohmann::ordered_json;

namespace {

std::string list_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string plural(int k, const std::string& word) { return std::to_string(k) + " " + word + (k == 1 ? "" : "s"); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ojson profiles_json(const std::vector<hurwitz::MarkProfile>& profiles) {
  ojson p = ojson::object();
  for (const auto& mp : profiles) p[mp.mark.to_string()] = mp.profile;
  return p;
}

std::string profiles_text(const std::vector<hurwitz::MarkProfile>& profiles) {
  std::string s;
  for (const auto& mp : profiles) s += " " + mp.mark.to_string() + ":" + list_string(mp.profile);
  return s;
}

ojson nullable(const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::vector<std::string> tuple_strings(const hurwitz::HurwitzCover& g) {
  std::vector<std::string> out;
  for (const auto& p : g.tuple) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> mark_strings(const hurwitz::HurwitzCover& g) {
  std::vector<std::string> out;
  for (const auto& m : g.marks) out.push_back(m.to_string());
  return out;
}

void report_jsonl(std::ostream& out, const hodge::CYReport& rep) {
  const auto& b = rep.data;
  ojson head;
  head["record"] = "report";
  head["data"] = b.to_string();
  head["n"] = b.n;
  head["x"] = b.x;
  head["y"] = b.y;
  head["z"] = b.z;
  head["r"] = b.r;
  head["valid"] = true;
  head["cy"] = rep.cy;
  head["smooth"] = rep.smooth_by_criterion;
  head["smoothness_note"] = smoothness_note(rep);
  head["explicit_tuple"] = rep.explicit_tuple;
  head["outcomes"] = rep.outcomes.size();
  head["ambiguous"] = rep.ambiguous;
  head["search_truncated"] = rep.search_truncated;
  head["unsupported"] = rep.unsupported.empty() ? ojson(nullptr) : ojson(rep.unsupported);
  out << head.dump() << '\n';

  for (const auto& z : rep.inventory.zero) {
    ojson f;
    f["record"] = "fiber";
    f["over"] = "0";
    f["ramification"] = z.x;
    f["components"] = z.components;
    out << f.dump() << '\n';
  }
  for (const auto& y : rep.inventory.infinity) {
    ojson f;
    f["record"] = "fiber";
    f["over"] = "inf";
    f["ramification"] = y.y;
    f["components"] = y.components;
    f["multiplicities"] = y.multiplicities.empty() ? ojson(nullptr) : ojson(y.multiplicities);
    out << f.dump() << '\n';
  }
  for (const auto& q : rep.inventory.quarter) {
    ojson f;
    f["record"] = "fiber";
    f["over"] = "1/256";
    f["ramification"] = q.z;
    f["terminal_points"] = q.terminal_points;
    f["singularity"] = q.z > 1 ? ojson("cA" + std::to_string(q.z - 1)) : ojson(nullptr);
    out << f.dump() << '\n';
  }

  for (std::size_t i = 0; i < rep.outcomes.size(); ++i) {
    const auto& o = rep.outcomes[i];
    ojson r;
    r["record"] = "outcome";
    r["index"] = i + 1;
    r["s"] = o.s;
    r["p_g"] = o.p_g;
    r["genera"] = o.genera;
    r["tuple_count"] = o.tuple_count;
    r["marks"] = mark_strings(o.tuple);
    r["tuple"] = tuple_strings(o.tuple);
    r["h11"] = nullable(o.h11);
    r["h21"] = nullable(o.h21);
    r["euler"] = nullable(o.euler);
    out << r.dump() << '\n';
    for (std::size_t c = 0; c < o.components.size(); ++c) {
      const auto& comp = o.components[c];
      ojson k;
      k["record"] = "component";
      k["outcome"] = i + 1;
      k["index"] = c + 1;
      k["degree"] = comp.degree;
      k["genus"] = comp.genus;
      k["profiles"] = profiles_json(comp.profiles);
      out << k.dump() << '\n';
    }
  }
}

void report_text(std::ostream& out, const hodge::CYReport& rep) {
  const auto& b = rep.data;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << '\n';
  };
  row("branch data", b.to_string());
  row("calabi-yau", yes_no(rep.cy));
  row("smoothness", smoothness_note(rep));
  for (const auto& z : rep.inventory.zero) {
    row("fibre over 0", "x=" + std::to_string(z.x) + ": " + plural(z.components, "component"));
  }
  for (const auto& y : rep.inventory.infinity) {
    std::string s = "y=" + std::to_string(y.y) + ": " + plural(y.components, "component");
    if (!y.multiplicities.empty()) s += ", multiplicities " + list_string(y.multiplicities);
    row("fibre over inf", s);
  }
  int terminal = rep.inventory.terminal_singularities();
  std::string q = plural(terminal, "terminal point");
  for (const auto& p : rep.inventory.quarter) {
    if (p.z > 1) q += ", 2 x cA" + std::to_string(p.z - 1);
  }
  row("over 1/256", q);
  if (rep.explicit_tuple) {
    row("tuple", "given");
  } else {
    std::string s = std::to_string(rep.outcomes.size()) + " outcome(s)";
    if (rep.search_truncated) s += ", search truncated";
    row("tuple search", s);
  }
  if (rep.outcomes.empty()) row("C_g", "no realizing tuple found");
  for (std::size_t i = 0; i < rep.outcomes.size(); ++i) {
    const auto& o = rep.outcomes[i];
    row("outcome " + std::to_string(i + 1),
        "s=" + std::to_string(o.s) + " p_g=" + std::to_string(o.p_g) + " genera=" + list_string(o.genera) +
            " tuples=" + std::to_string(o.tuple_count));
    std::string t;
    for (std::size_t k = 0; k < o.tuple.tuple.size(); ++k) {
      t += (k ? " " : "") + o.tuple.marks[k].to_string() + ":" + o.tuple.tuple[k].to_string();
    }
    row("  tuple", t);
    for (std::size_t c = 0; c < o.components.size(); ++c) {
      const auto& comp = o.components[c];
      row("  component " + std::to_string(c + 1), "degree " + std::to_string(comp.degree) + " genus " +
                                                     std::to_string(comp.genus) + profiles_text(comp.profiles));
    }
    row("  hodge", "h11=" + opt_text(o.h11) + " h21=" + opt_text(o.h21) + " e=" + opt_text(o.euler));
  }
  row("ambiguous", yes_no(rep.ambiguous));
  if (!rep.unsupported.empty()) row("unsupported", rep.unsupported);
}

}  // namespace

std::string smoothness_note(const hodge::CYReport& rep) {
  if (rep.smooth_by_criterion) return "g unramified over 1/256, smooth";
  return "g ramified over 1/256, not decided by the unramified criterion";
}

void render_report(std::ostream& out, const hodge::CYReport& rep, OutputFormat fmt) {
  if (fmt == OutputFormat::jsonl) {
    report_jsonl(out, rep);
  } else {
    report_text(out, rep);
  }
}

void render_catalog(std::ostream& out, const std::vector<hodge::CYReport>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::jsonl) {
    for (const auto& rep : rows) {
      const auto& b = rep.data;
      ojson r;
      r["record"] = "catalog";
      r["data"] = b.to_string();
      r["n"] = b.n;
      r["x"] = b.x;
      r["y"] = b.y;
      r["z"] = b.z;
      r["r"] = b.r;
      r["smooth"] = rep.smooth_by_criterion;
      ojson zero = ojson::array(), inf = ojson::array();
      for (const auto& z : rep.inventory.zero) zero.push_back(z.components);
      for (const auto& y : rep.inventory.infinity) inf.push_back(y.components);
      r["components_over_0"] = zero;
      r["components_over_inf"] = inf;
      r["terminal_points"] = rep.inventory.terminal_singularities();
      ojson outs = ojson::array();
      for (const auto& o : rep.outcomes) {
        ojson e;
        e["s"] = o.s;
        e["p_g"] = o.p_g;
        e["h11"] = nullable(o.h11);
        e["h21"] = nullable(o.h21);
        e["euler"] = nullable(o.euler);
        outs.push_back(e);
      }
      r["outcomes"] = outs;
      r["ambiguous"] = rep.ambiguous;
      r["search_truncated"] = rep.search_truncated;
      r["unsupported"] = rep.unsupported.empty() ? ojson(nullptr) : ojson(rep.unsupported);
      out << r.dump() << '\n';
    }
    return;
  }
  out << std::left << std::setw(44) << "branch data" << std::setw(7) << "smooth" << std::setw(9) << "terminal"
      << "outcomes (s, p_g, h11, h21, e)\n";
  for (const auto& rep : rows) {
    std::string outs;
    for (const auto& o : rep.outcomes) {
      outs += "(" + std::to_string(o.s) + "," + std::to_string(o.p_g) + "," + opt_text(o.h11) + "," +
              opt_text(o.h21) + "," + opt_text(o.euler) + ") ";
    }
    if (rep.outcomes.empty()) outs = "none ";
    if (rep.search_truncated) outs += "[truncated]";
    if (!rep.unsupported.empty()) outs += "[unsupported]";
    out << std::setw(44) << rep.data.to_string() << std::setw(7) << yes_no(rep.smooth_by_criterion) << std::setw(9)
        << rep.inventory.terminal_singularities() << outs << '\n';
  }
  out << rows.size() << " rows\n";
}

void render_fibers(std::ostream& out, const std::vector<FiberRow>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::jsonl) {
    for (const auto& r : rows) {
      ojson j;
      j["record"] = "fiber";
      j["model"] = r.model;
      j["place"] = r.fiber.place.to_string("v");
      j["degree"] = r.fiber.place.degree();
      j["type"] = r.fiber.name();
      j["v_c4"] = r.fiber.v_c4;
      j["v_c6"] = r.fiber.v_c6;
      j["v_delta"] = r.fiber.v_delta;
      j["j_order"] = r.j_order;
      j["euler"] = r.euler;
      out << j.dump() << '\n';
    }
    return;
  }
  out << std::left << std::setw(7) << "model" << std::setw(12) << "place" << std::setw(6) << "type" << std::setw(6)
      << "v(c4)" << std::setw(6) << "v(c6)" << std::setw(6) << "v(D)" << std::setw(6) << "ord j"
      << "e\n";
  for (const auto& r : rows) {
    out << std::setw(7) << r.model << std::setw(12) << r.fiber.place.to_string("v") << std::setw(6) << r.fiber.name()
        << std::setw(6) << r.fiber.v_c4 << std::setw(6) << r.fiber.v_c6 << std::setw(6) << r.fiber.v_delta
        << std::setw(6) << r.j_order << r.euler << '\n';
  }
}

void render_monodromy(std::ostream& out, const monodromy::PunctureTable& table, const monodromy::TrackOptions& opt,
                      OutputFormat fmt) {
  using monodromy::Puncture;
  struct Row {
    Puncture p;
    const monodromy::TrackResult* r;
  };
  std::vector<Row> rows{{Puncture::zero, &table.zero}, {Puncture::quarter, &table.quarter},
                        {Puncture::infinity, &table.infinity}};
  std::vector<Permutation> gens{table.zero.perm, table.quarter.perm, table.infinity.perm};
  std::size_t order = group_order(gens, 6);
  bool transitive = is_transitive(gens, 6);
  if (fmt == OutputFormat::jsonl) {
    for (const auto& row : rows) {
      ojson j;
      j["record"] = "puncture";
      j["puncture"] = monodromy::to_string(row.p);
      j["permutation"] = row.r->perm.to_string();
      j["reference_labels"] = monodromy::to_reference_labels(row.r->perm).to_string();
      j["cycle_type"] = row.r->perm.cycle_type();
      j["sqrt_flipped"] = row.r->sqrt_flipped;
      j["accepted_steps"] = row.r->accepted_steps;
      j["rejected_steps"] = row.r->rejected_steps;
      j["min_separation"] = sci(row.r->min_separation);
      j["closure_error"] = sci(row.r->closure_error);
      out << j.dump() << '\n';
    }
    ojson s;
    s["record"] = "summary";
    s["precision_bits"] = opt.precision_bits;
    s["initial_steps"] = opt.initial_steps;
    s["product_is_identity"] = table.product_is_identity;
    s["group_order"] = order;
    s["transitive"] = transitive;
    out << s.dump() << '\n';
    return;
  }
  out << "base point -257/256, " << opt.precision_bits << " bits, " << opt.initial_steps << " initial steps per piece\n";
  out << std::left << std::setw(8) << "around" << std::setw(16) << "permutation" << std::setw(16) << "relabeled"
      << std::setw(12) << "cycle type" << std::setw(10) << "steps" << std::setw(12) << "min sep"
      << "closure\n";
  for (const auto& row : rows) {
    out << std::setw(8) << monodromy::to_string(row.p) << std::setw(16) << row.r->perm.to_string() << std::setw(16)
        << monodromy::to_reference_labels(row.r->perm).to_string() << std::setw(12)
        << partition_to_string(row.r->perm.cycle_type()) << std::setw(10)
        << (std::to_string(row.r->accepted_steps) + "/" + std::to_string(row.r->rejected_steps)) << std::setw(12)
        << sci(row.r->min_separation) << sci(row.r->closure_error) << '\n';
  }
  out << "ordered product " << (table.product_is_identity ? "is" : "is NOT") << " the identity\n";
  out << "generated group of order " << order << (transitive ? ", transitive" : ", not transitive") << '\n';
}

}  // namespace kummer::app
