#include "bei/render.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bei {

using nlohmann::ordered_json;

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw Error("unknown output format '" + s + "' (expected text, json, or csv)");
}

namespace {

std::string extremal_str(const std::vector<ExtremalEntry>& ex) {
  std::string out;
  for (const ExtremalEntry& e : ex) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")=" + std::to_string(e.value);
  }
  return out.empty() ? "none" : out;
}

std::string diagram(const BettiTable& t) {
  int imax = 0, dmax = 0;
  for (const auto& [pos, v] : t.entries) {
    imax = std::max(imax, pos.first);
    dmax = std::max(dmax, pos.second - pos.first);
  }
  if (t.bounded) imax = std::min(imax, t.i_max);

  // cell text: "." for a certified zero, "?" outside the certified region
  auto cell = [&](int i, int d) -> std::string {
    const int j = i + d;
    if (t.bounded && (i > t.i_max || j > t.j_max)) return "?";
    const auto it = t.entries.find({i, j});
    return it == t.entries.end() ? "." : std::to_string(it->second);
  };

  std::vector<std::string> labels = {"", "total:"};
  for (int d = 0; d <= dmax; ++d) labels.push_back(std::to_string(d) + ":");
  std::size_t lw = 0;
  for (const auto& s : labels) lw = std::max(lw, s.size());

  std::vector<std::vector<std::string>> cols;
  for (int i = 0; i <= imax; ++i) {
    std::vector<std::string> col = {std::to_string(i)};
    long long total = 0;
    bool unknown = false;
    std::vector<std::string> body;
    for (int d = 0; d <= dmax; ++d) {
      std::string c = cell(i, d);
      if (c == "?")
        unknown = true;
      else if (c != ".")
        total += std::stoll(c);
      body.push_back(std::move(c));
    }
    col.push_back(unknown ? "?" : std::to_string(total));
    col.insert(col.end(), body.begin(), body.end());
    cols.push_back(std::move(col));
  }

  std::vector<std::size_t> w(cols.size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& s : cols[c]) w[c] = std::max(w[c], s.size());

  std::ostringstream os;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    os << std::string(lw - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << "  " << std::string(w[c] - cols[c][r].size(), ' ') << cols[c][r];
    os << "\n";
  }
  return os.str();
}

ordered_json betti_json_object(const BettiTable& t) {
  ordered_json o;
  o["subject"] = t.subject;
  o["bounded"] = t.bounded;
  if (t.bounded) o["region"] = {{"i_max", t.i_max}, {"j_max", t.j_max}};
  ordered_json entries = ordered_json::array();
  for (const auto& [pos, v] : t.entries)
    entries.push_back({{"i", pos.first}, {"j", pos.second}, {"value", v}});
  o["entries"] = std::move(entries);
  if (t.bounded) {
    o["projdim"] = nullptr;
    o["reg"] = nullptr;
    o["extremal"] = nullptr;
  } else {
    o["projdim"] = proj_dim(t);
    o["reg"] = regularity(t);
    ordered_json ex = ordered_json::array();
    for (const ExtremalEntry& e : extremal_betti(t))
      ex.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value}});
    o["extremal"] = std::move(ex);
  }
  return o;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_rows(const BettiTable& t, std::ostringstream& os) {
  for (const auto& [pos, v] : t.entries)
    os << csv_quote(t.subject) << "," << pos.first << "," << pos.second << "," << v << "\n";
}

std::string verdict_str(ConjectureReport::Verdict v) {
  switch (v) {
    case ConjectureReport::Verdict::equal: return "equal";
    case ConjectureReport::Verdict::unequal: return "unequal";
    default: return "undecided";
  }
}

ordered_json extremal_json(const std::vector<ExtremalEntry>& ex) {
  ordered_json a = ordered_json::array();
  for (const ExtremalEntry& e : ex) a.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value}});
  return a;
}

bool has_table(const BettiTable& t) { return !t.entries.empty() || !t.subject.empty(); }

}  // namespace

std::string render_betti_text(const BettiTable& t) {
  std::ostringstream os;
  os << "subject: " << t.subject << "\n";
  if (t.entries.empty()) {
    os << "(no entries)\n";
  } else {
    os << diagram(t);
  }
  if (t.bounded) {
    os << "certified region: i <= " << t.i_max << ", j <= " << t.j_max << "\n";
  } else {
    os << "projdim: " << proj_dim(t) << "\n";
    os << "reg: " << regularity(t) << "\n";
    os << "extremal: " << extremal_str(extremal_betti(t)) << "\n";
  }
  return os.str();
}

std::string render_betti_json(const BettiTable& t) { return betti_json_object(t).dump(2) + "\n"; }

std::string render_betti_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "subject,i,j,value\n";
  csv_rows(t, os);
  return os.str();
}

std::string render_betti(const BettiTable& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return render_betti_text(t);
    case OutputFormat::json: return render_betti_json(t);
    default: return render_betti_csv(t);
  }
}

BettiTable parse_betti_json(const std::string& text) {
  const ordered_json o = ordered_json::parse(text);
  BettiTable t;
  t.subject = o.at("subject").get<std::string>();
  t.bounded = o.at("bounded").get<bool>();
  if (t.bounded) {
    t.i_max = o.at("region").at("i_max").get<int>();
    t.j_max = o.at("region").at("j_max").get<int>();
  }
  for (const auto& e : o.at("entries"))
    t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<long long>());
  return t;
}

std::string render_betti_pair(const BettiTable& initial, const BettiTable& binomial, OutputFormat f) {
  switch (f) {
    case OutputFormat::text:
      return render_betti_text(initial) + "\n" + render_betti_text(binomial);
    case OutputFormat::json: {
      ordered_json o;
      o["initial"] = betti_json_object(initial);
      o["binomial"] = betti_json_object(binomial);
      return o.dump(2) + "\n";
    }
    default: {
      std::ostringstream os;
      os << "subject,i,j,value\n";
      csv_rows(initial, os);
      csv_rows(binomial, os);
      return os.str();
    }
  }
}

std::string render_conjecture(const ConjectureReport& rep, OutputFormat f) {
  if (f == OutputFormat::csv)
    throw Error("csv output is not available for conjecture reports (use text or json)");
  if (f == OutputFormat::json) {
    ordered_json o;
    o["graph"] = rep.graph;
    o["verdict"] = verdict_str(rep.verdict);
    if (!rep.decided()) o["undecided_reason"] = rep.undecided_reason;
    o["semicontinuity_ok"] = rep.decided() ? ordered_json(rep.semicontinuity_ok) : ordered_json(nullptr);
    o["initial"] = has_table(rep.initial_table) ? betti_json_object(rep.initial_table) : ordered_json(nullptr);
    o["binomial"] = has_table(rep.binomial_table) ? betti_json_object(rep.binomial_table) : ordered_json(nullptr);
    if (rep.adjudication.applicable) {
      const AdjudicationRecord& a = rep.adjudication;
      ordered_json adj;
      adj["corner"] = {{"i", a.corner_i}, {"j", a.corner_j}};
      adj["closed_form_value"] = a.closed_form_value;
      adj["published_value"] = a.published_value;
      adj["oracle_value"] =
          a.sides_with == "undecided" ? ordered_json(nullptr) : ordered_json(a.oracle_value);
      adj["sides_with"] = a.sides_with;
      o["adjudication"] = std::move(adj);
    } else {
      o["adjudication"] = nullptr;
    }
    return o.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "conjecture report\n";
  os << "graph: " << rep.graph << "\n";
  os << "verdict: " << verdict_str(rep.verdict) << "\n";
  if (!rep.decided()) os << "reason: " << rep.undecided_reason << "\n";
  if (rep.decided()) {
    os << "semicontinuity beta(S/J) <= beta(S/ini): " << (rep.semicontinuity_ok ? "holds" : "VIOLATED") << "\n";
    os << "initial extremal: " << extremal_str(rep.initial_extremal) << "\n";
    os << "binomial extremal: " << extremal_str(rep.binomial_extremal) << "\n";
  }
  if (rep.adjudication.applicable) {
    const AdjudicationRecord& a = rep.adjudication;
    os << "adjudication of the (" << a.corner_i << "," << a.corner_j << ") corner:\n";
    os << "  closed-form evaluation: " << a.closed_form_value << "\n";
    os << "  published value: " << a.published_value << "\n";
    if (a.sides_with != "undecided") {
      os << "  oracle value: " << a.oracle_value << "\n";
      os << "  oracle sides with: " << a.sides_with << "\n";
    }
  }
  if (has_table(rep.initial_table)) os << "\n" << render_betti_text(rep.initial_table);
  if (has_table(rep.binomial_table)) os << "\n" << render_betti_text(rep.binomial_table);
  return os.str();
}

std::string render_verify(const VerifyReport& rep, OutputFormat f) {
  if (f == OutputFormat::csv)
    throw Error("csv output is not available for verification reports (use text or json)");
  if (f == OutputFormat::json) {
    ordered_json o;
    o["pass"] = rep.pass;
    o["basis_size"] = rep.basis_size;
    o["spair_count"] = rep.spair_count;
    o["spairs_reduced_to_zero"] = rep.spairs_reduced_to_zero;
    o["reduced"] = rep.reduced_ok;
    o["ideal_match"] = rep.ideal_match_ok;
    if (!rep.pass) o["first_failure"] = rep.first_failure;
    return o.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "groebner verification\n";
  os << "basis size: " << rep.basis_size << "\n";
  os << "s-pairs: " << rep.spair_count << "\n";
  if (rep.spairs_ok)
    os << "s-pairs reduced to zero: all " << rep.spairs_reduced_to_zero << "\n";
  else
    os << "s-pairs reduced to zero: " << rep.spairs_reduced_to_zero << " of " << rep.spair_count << "\n";
  os << "reduced basis: " << (rep.reduced_ok ? "yes" : "no") << "\n";
  os << "generates the edge ideal: " << (rep.ideal_match_ok ? "yes" : "no") << "\n";
  os << "result: " << (rep.pass ? "pass" : "fail") << "\n";
  if (!rep.pass) os << "first failure: " << rep.first_failure << "\n";
  return os.str();
}

std::string render_corner(const CornerCertificate& cert, OutputFormat f) {
  if (f == OutputFormat::csv)
    throw Error("csv output is not available for corner certificates (use text or json)");
  const int n = cert.n;
  if (f == OutputFormat::json) {
    ordered_json o;
    o["family"] = "cycle";
    o["n"] = n;
    o["corner"] = {{"i", n}, {"j", 2 * n - 2}, {"value", cert.corner_value}};
    o["base"] = {{"colon", cert.base_colon.str()},
                 {"quadrics", cert.base_colon_quadrics},
                 {"variables", cert.base_colon_variables},
                 {"projdim", cert.base_projdim},
                 {"corner_entry", cert.base_corner_entry}};
    ordered_json steps = ordered_json::array();
    for (const CornerStep& s : cert.steps) {
      ordered_json st;
      st["k"] = s.k;
      st["v"] = s.v.str();
      st["i"] = s.i;
      st["j"] = s.j;
      st["colon"] = s.colon_ideal.str();
      st["quadrics"] = s.quadric_count;
      st["variables"] = s.variable_count;
      st["shifted_top_degree"] = s.shifted_top_degree;
      st["running_total"] = s.running_total;
      steps.push_back(std::move(st));
    }
    o["steps"] = std::move(steps);
    return o.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "mapping-cone corner certificate, cycle n=" << n << "\n";
  os << "base J:(x1*y" << n << ") = " << cert.base_colon.str() << " (" << cert.base_colon_quadrics
     << " quadrics + " << cert.base_colon_variables << " variables)\n";
  os << "base projdim " << cert.base_projdim << ", entry at (" << n << "," << 2 * n - 2
     << "): " << cert.base_corner_entry << "\n";
  for (const CornerStep& s : cert.steps) {
    os << "step " << s.k << ": v=" << s.v.str() << " (i=" << s.i << ", j=" << s.j
       << "), colon = " << s.colon_ideal.str() << ", " << s.quadric_count << " quadrics + "
       << s.variable_count << " variables, shifted top degree " << s.shifted_top_degree
       << ", running total " << s.running_total << "\n";
  }
  os << "corner: (" << n << "," << 2 * n - 2 << ") = " << cert.corner_value << "\n";
  return os.str();
}

}  // namespace bei
