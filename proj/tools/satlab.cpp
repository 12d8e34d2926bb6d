#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/canonical.hpp"
#include "satlab/cliques.hpp"
#include "satlab/coloring.hpp"
#include "satlab/constructions.hpp"
#include "satlab/errors.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph_io.hpp"
#include "satlab/limits.hpp"
#include "satlab/matching.hpp"
#include "satlab/satnums.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/set_systems.hpp"

namespace {

using nlohmann::json;

constexpr long long kUnset = std::numeric_limits<long long>::min();

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw satlab::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw satlab::ParseError("malformed JSON in " + what);
  return j;
}

satlab::Graph load_graph(const std::string& path) {
  return satlab::graph_from_json(parse_json(read_all(path), path));
}

void emit(const std::string& out, const std::string& text) {
  std::string t = text;
  if (t.empty() || t.back() != '\n') t += '\n';
  if (out.empty() || out == "-") {
    std::cout << t;
    return;
  }
  std::ofstream f(out);
  if (!f) throw satlab::ParseError("cannot write " + out);
  f << t;
}

void emit_json(const std::string& out, const json& j) { emit(out, j.dump(2)); }

json big_to_json(const satlab::BigInt& v) {
  static const satlab::BigInt lo = std::numeric_limits<long long>::min();
  static const satlab::BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  json arr = json::array();
  for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

json set_to_json(const std::vector<int>& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

json report_to_json(const satlab::SearchReport& rep, const satlab::Limits& lim) {
  json j;
  j["optimum"] = rep.optimum ? json(*rep.optimum) : json(nullptr);
  json ws = json::array();
  for (const auto& g : rep.witnesses) ws.push_back(satlab::graph_to_json(g));
  j["witnesses"] = std::move(ws);
  j["explored"] = rep.explored;
  j["max_n"] = rep.max_n;
  j["exhaustive"] = rep.exhaustive;
  if (rep.c_prime_lower) j["c_prime_lower"] = *rep.c_prime_lower;
  (void)lim;
  return j;
}

// Families addressable from the command line and from spec JSON. A
// tight-cover build also fills `record` with its certificate fields.
satlab::Graph build_family(const std::string& fam,
                           const std::map<std::string, long long>& p,
                           const satlab::Limits& lim, json* record) {
  auto need = [&](const char* k) -> long long {
    auto it = p.find(k);
    if (it == p.end())
      throw satlab::ParameterError("family " + fam + " needs parameter " + k);
    return it->second;
  };
  auto maybe = [&](const char* k, long long dflt) {
    auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
  };
  if (fam == "gt") return satlab::build_gt((int)need("t"), lim);
  if (fam == "gt-prime") {
    satlab::Graph g = satlab::build_gt_prime((int)need("t"), lim);
    long long keep = maybe("keep", -1);
    return keep < 0 ? g : satlab::remove_matched_pairs(g, (int)keep);
  }
  if (fam == "gt-double-prime")
    return satlab::build_gt_double_prime((int)need("t"), lim);
  if (fam == "ht") return satlab::build_ht((int)need("t"), lim);
  if (fam == "p") return satlab::build_p();
  if (fam == "q") return satlab::build_q();
  if (fam == "c5") return satlab::build_c5();
  if (fam == "k22") return satlab::build_k22();
  if (fam == "complete") return satlab::build_complete((int)need("n"));
  if (fam == "ehm")
    return satlab::build_ehm((int)need("n"), (int)need("r"), lim);
  if (fam == "tight-cover") {
    auto res = satlab::build_tight_cover((int)need("r"), need("n"), need("e"), lim);
    if (record) {
      (*record)["matching_certificate"] = edges_to_json(res.matching_certificate);
      (*record)["branch"] = std::string(1, res.branch);
      (*record)["t"] = res.t;
      (*record)["conical_added"] = res.conical_added;
    }
    return res.graph;
  }
  throw satlab::ParameterError("unknown family '" + fam + "'");
}

satlab::FlavorSpec make_flavor(const std::string& name, long long a,
                               long long b, long long c, long long d) {
  return {satlab::flavor_from_name(name), a, b, c, d};
}

int run_table(int max_r, const std::string& out) {
  std::ostringstream os;
  bool all_ok = true;
  os << std::left << std::setw(3) << "r" << std::setw(3) << "t"
     << std::setw(8) << "c(r,t)" << std::setw(26) << "collection"
     << std::setw(9) << "c'(r,t)" << std::setw(22) << "C'(r,t)"
     << "check\n";
  auto describe = [](const std::vector<satlab::Graph>& gs) {
    std::string s;
    for (const auto& g : gs) {
      if (!s.empty()) s += ", ";
      auto st = g.stats();
      s += "n=" + std::to_string(st.n) + " e=" + std::to_string(st.e);
    }
    return s.empty() ? std::string("none") : s;
  };
  for (int r = 3; r <= max_r; ++r)
    for (int t = r - 2; t <= r; ++t) {
      auto kv = satlab::known_values(r, t);
      if (!kv) continue;
      bool ok = !kv->collection.empty();
      for (const auto& g : kv->collection) {
        auto st = g.stats();
        ok = ok && satlab::is_saturated(g, r) && st.min_degree &&
             *st.min_degree == t && satlab::deficiency(g, t) == kv->c;
      }
      if (kv->c_prime_collection)
        for (const auto& g : *kv->c_prime_collection) {
          auto st = g.stats();
          ok = ok && satlab::is_saturated(g, r) && st.min_degree &&
               *st.min_degree >= t && kv->c_prime &&
               satlab::deficiency(g, t) == *kv->c_prime;
        }
      os << std::left << std::setw(3) << r << std::setw(3) << t
         << std::setw(8) << kv->c << std::setw(26) << describe(kv->collection)
         << std::setw(9) << (kv->c_prime ? std::to_string(*kv->c_prime) : "-")
         << std::setw(22)
         << (kv->c_prime_collection ? describe(*kv->c_prime_collection) : "-")
         << (ok ? "ok" : "FAIL") << "\n";
      all_ok = all_ok && ok;
    }
  emit(out, os.str());
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for clique-saturated graphs and set-pair systems"};
  app.require_subcommand(1);
  satlab::Limits lim = satlab::Limits::from_env();
  int rc = 0;

  // construct
  auto* cons = app.add_subcommand("construct", "build a named graph family");
  std::string c_family, c_input, c_format = "json", c_out;
  long long c_t = kUnset, c_r = kUnset, c_n = kUnset, c_e = kUnset,
            c_keep = kUnset;
  cons->add_option("--family", c_family,
                   "gt, gt-prime, gt-double-prime, ht, p, q, c5, k22, "
                   "complete, ehm, tight-cover");
  cons->add_option("--input", c_input,
                   "JSON {\"family\":..., \"params\":{...}} instead of flags");
  cons->add_option("--t", c_t, "family parameter t");
  cons->add_option("--r", c_r, "clique order r");
  cons->add_option("--n", c_n, "vertex count parameter");
  cons->add_option("--e", c_e, "edge count parameter");
  cons->add_option("--keep", c_keep, "matched pairs to keep (gt-prime)");
  cons->add_option("--format", c_format, "json, dot or g6")
      ->check(CLI::IsMember({"json", "dot", "g6"}));
  cons->add_option("--out", c_out, "output path (default stdout)");
  cons->callback([&] {
    std::string fam = c_family;
    std::map<std::string, long long> params;
    if (!c_input.empty()) {
      if (!fam.empty())
        throw satlab::ParameterError("give --family or --input, not both");
      json j = parse_json(read_all(c_input), c_input);
      if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw satlab::ParseError("construction JSON needs a \"family\" string");
      fam = j["family"].get<std::string>();
      if (j.contains("params")) {
        if (!j["params"].is_object())
          throw satlab::ParseError("\"params\" must be an object");
        for (auto& [k, v] : j["params"].items()) {
          if (!v.is_number_integer())
            throw satlab::ParseError("parameter " + k + " must be an integer");
          params[k] = v.get<long long>();
        }
      }
    } else if (fam.empty()) {
      throw satlab::ParameterError("construct needs --family or --input");
    }
    if (c_t != kUnset) params["t"] = c_t;
    if (c_r != kUnset) params["r"] = c_r;
    if (c_n != kUnset) params["n"] = c_n;
    if (c_e != kUnset) params["e"] = c_e;
    if (c_keep != kUnset) params["keep"] = c_keep;
    json record;
    satlab::Graph g = build_family(fam, params, lim, &record);
    if (c_format == "dot") {
      emit(c_out, satlab::graph_to_dot(g));
    } else if (c_format == "g6") {
      emit(c_out, satlab::to_graph6(g));
    } else if (record.is_object()) {
      record["graph"] = satlab::graph_to_json(g);
      emit_json(c_out, record);
    } else {
      emit_json(c_out, satlab::graph_to_json(g));
    }
  });

  // verify
  auto* ver = app.add_subcommand("verify", "check a graph for saturation");
  std::string v_input, v_out;
  long long v_r = 3;
  ver->add_option("--input", v_input, "graph JSON path or -")->required();
  ver->add_option("--r", v_r, "clique order r (default 3)");
  ver->add_option("--out", v_out, "output path (default stdout)");
  ver->callback([&] {
    satlab::Graph g = load_graph(v_input);
    auto st = g.stats();
    bool sat = satlab::is_saturated(g, (int)v_r);
    json j;
    j["saturated"] = sat;
    j["min_degree"] = st.min_degree ? json(*st.min_degree) : json(nullptr);
    emit_json(v_out, j);
    if (!sat) {
      std::cerr << "graph is not K_" << v_r << "-saturated\n";
      rc = 1;
    }
  });

  // compute
  auto* comp = app.add_subcommand("compute", "evaluate one quantity");
  comp->require_subcommand(1);
  std::string k_input, k_out;
  long long k_t = 0, k_r = 3, k_n = kUnset, k_s = 0;
  auto add_common = [&](CLI::App* sub, bool wants_graph, bool wants_t) {
    if (wants_graph)
      sub->add_option("--input", k_input, "graph JSON path or -")->required();
    if (wants_t) sub->add_option("--t", k_t, "degree threshold t")->required();
    sub->add_option("--out", k_out, "output path (default stdout)");
    return sub;
  };
  add_common(comp->add_subcommand("deficiency", "t|G| - e(G)"), true, true)
      ->callback([&] {
        emit_json(k_out,
                  {{"deficiency", satlab::deficiency(load_graph(k_input), (int)k_t)}});
      });
  {
    auto* sub = comp->add_subcommand("sat", "minimum saturated size formula");
    sub->add_option("--n", k_n, "vertex count")->required();
    sub->add_option("--r", k_r, "clique order r")->required();
    sub->add_option("--out", k_out, "output path");
    sub->callback([&] {
      emit_json(k_out, {{"sat", satlab::sat_formula(k_n, (int)k_r)}});
    });
  }
  add_common(comp->add_subcommand("c-lower-bounds",
                                  "deficiency lower bounds from both families"),
             false, true)
      ->callback([&] {
        auto lb = satlab::c_lower_bounds((int)k_t, lim);
        json j;
        j["via_gt"] = lb.via_gt;
        j["via_ht"] = lb.via_ht ? json(*lb.via_ht) : json(nullptr);
        emit_json(k_out, j);
      });
  {
    auto* sub = comp->add_subcommand("shift-check",
                                     "conical-lift deficiency inequality");
    sub->add_option("--r", k_r, "clique order r")->required();
    sub->add_option("--t", k_t, "minimum degree t")->required();
    sub->add_option("--s", k_s, "lift size s")->required();
    sub->add_option("--out", k_out, "output path");
    sub->callback([&] {
      auto sc = satlab::lemma_shift_check((int)k_r, (int)k_t, (int)k_s);
      emit_json(k_out, {{"lhs_lower", sc.lhs_lower},
                        {"rhs", sc.rhs},
                        {"holds", sc.holds}});
      if (!sc.holds) {
        std::cerr << "shift inequality violated\n";
        rc = 1;
      }
    });
  }
  add_common(comp->add_subcommand("f-value", "low-degree adjacency count"),
             true, true)
      ->callback([&] {
        emit_json(k_out, {{"f", satlab::f_value(load_graph(k_input), (int)k_t)}});
      });
  add_common(comp->add_subcommand("cover", "degree-threshold vertex cover"),
             true, true)
      ->callback([&] {
        auto cov = satlab::cover_from_threshold(load_graph(k_input), (int)k_t);
        emit_json(k_out, {{"cover", set_to_json(cov.to_vector())},
                          {"size", cov.count()}});
      });
  add_common(comp->add_subcommand("clique", "exact clique number"), true, false)
      ->callback([&] {
        emit_json(k_out,
                  {{"clique_number", satlab::clique_number(load_graph(k_input), lim)}});
      });
  add_common(comp->add_subcommand("chromatic", "exact chromatic number"), true,
             false)
      ->callback([&] {
        emit_json(k_out, {{"chromatic_number",
                           satlab::chromatic_number(load_graph(k_input), lim)}});
      });
  add_common(comp->add_subcommand("core", "clique-deficiency core subset"),
             true, false)
      ->callback([&] {
        auto core = satlab::find_core_subset(load_graph(k_input), lim);
        emit_json(k_out, {{"core", set_to_json(core.to_vector())},
                          {"size", core.count()}});
      });
  add_common(comp->add_subcommand("matching", "greedy maximal matching"), true,
             false)
      ->callback([&] {
        auto m = satlab::maximal_matching(load_graph(k_input));
        emit_json(k_out,
                  {{"matching", edges_to_json(m)}, {"size", (long long)m.size()}});
      });

  // search-c
  auto* sc = app.add_subcommand("search-c",
                                "best deficiency over saturated graphs");
  long long s_r = 3, s_t = 3, s_maxn = 8, s_k = 0, s_jobs = 0;
  bool s_minimal = false, s_track = false;
  std::string s_json, s_out;
  auto add_search_common = [&](CLI::App* sub) {
    sub->add_option("--r", s_r, "clique order r")->required();
    sub->add_option("--t", s_t, "minimum degree t")->required();
    sub->add_option("--max-n", s_maxn, "order ceiling")->required();
    sub->add_option("--jobs", s_jobs, "parallel workers (0 = hardware)");
    sub->add_option("--json", s_json, "also write the report JSON here");
    sub->add_option("--out", s_out, "output path (default stdout)");
  };
  add_search_common(sc);
  sc->add_flag("--minimal-only", s_minimal, "drop blow-up witnesses");
  sc->add_flag("--track-c-prime", s_track,
               "also report the best deficiency at min degree >= t");
  sc->callback([&] {
    satlab::SearchOptions so;
    so.minimal_only = s_minimal;
    so.track_c_prime = s_track;
    so.jobs = (int)s_jobs;
    so.limits = lim;
    auto rep = satlab::search_c((int)s_r, (int)s_t, (int)s_maxn, so);
    json j = report_to_json(rep, lim);
    if (!s_json.empty()) emit_json(s_json, j);
    emit_json(s_out, j);
  });

  // search-collection
  auto* sx = app.add_subcommand("search-collection",
                                "minimal extremal graphs at a fixed excess");
  add_search_common(sx);
  sx->add_option("--k", s_k, "edge excess e - t|G|")->required();
  sx->callback([&] {
    satlab::SearchOptions so;
    so.jobs = (int)s_jobs;
    so.limits = lim;
    auto rep = satlab::search_extremal_collection((int)s_r, (int)s_t, s_k,
                                                  (int)s_maxn, so);
    json j = report_to_json(rep, lim);
    if (!s_json.empty()) emit_json(s_json, j);
    emit_json(s_out, j);
  });

  // known
  auto* kn = app.add_subcommand("known", "tabulated extremal values");
  long long n_r = 3, n_t = 3;
  std::string n_out;
  kn->add_option("--r", n_r, "clique order r")->required();
  kn->add_option("--t", n_t, "minimum degree t")->required();
  kn->add_option("--out", n_out, "output path (default stdout)");
  kn->callback([&] {
    auto kv = satlab::known_values((int)n_r, (int)n_t);
    if (!kv) {
      emit_json(n_out, {{"known", false}});
      return;
    }
    json j;
    j["known"] = true;
    j["c"] = kv->c;
    json coll = json::array();
    for (const auto& g : kv->collection) coll.push_back(satlab::graph_to_json(g));
    j["collection"] = std::move(coll);
    if (kv->c_prime) j["c_prime"] = *kv->c_prime;
    if (kv->c_prime_collection) {
      json cc = json::array();
      for (const auto& g : *kv->c_prime_collection)
        cc.push_back(satlab::graph_to_json(g));
      j["c_prime_collection"] = std::move(cc);
    }
    emit_json(n_out, j);
  });

  // sys
  auto* sys = app.add_subcommand("sys", "set-pair system operations");
  sys->require_subcommand(1);
  std::string y_flavor = "skew", y_family, y_input, y_out;
  long long y_a = 0, y_b = 0, y_c = 0, y_d = 0, y_jobs = 0;
  long long y_ground = kUnset, y_length = kUnset;
  auto add_flavor_opts = [&](CLI::App* sub) {
    sub->add_option("--flavor", y_flavor,
                    "skew, threshold, modified, degenerate, variable, "
                    "generalised")
        ->required();
    sub->add_option("--a", y_a, "parameter a");
    sub->add_option("--b", y_b, "parameter b");
    sub->add_option("--c", y_c, "parameter c");
    sub->add_option("--d", y_d, "parameter d");
    sub->add_option("--out", y_out, "output path (default stdout)");
  };

  auto* yv = sys->add_subcommand("verify", "check a system against a flavor");
  add_flavor_opts(yv);
  yv->add_option("--input", y_input, "system JSON path or -")->required();
  yv->callback([&] {
    satlab::FlavorSpec fs = make_flavor(y_flavor, y_a, y_b, y_c, y_d);
    json j = parse_json(read_all(y_input), y_input);
    satlab::VerifyResult vr;
    if (fs.kind == satlab::Flavor::degenerate)
      vr = satlab::verify(satlab::degenerate_from_json(j), fs);
    else if (fs.kind == satlab::Flavor::variable ||
             fs.kind == satlab::Flavor::generalised)
      vr = satlab::verify(satlab::annotated_from_json(j), fs);
    else
      vr = satlab::verify(satlab::system_from_json(j), fs);
    json out;
    out["ok"] = vr.ok;
    if (!vr.ok) out["diagnostic"] = vr.diagnostic;
    emit_json(y_out, out);
    if (!vr.ok) {
      std::cerr << vr.diagnostic << "\n";
      rc = 1;
    }
  });

  auto* yb = sys->add_subcommand("build", "emit a named extremal family");
  yb->add_option("--family", y_family, "skew, threshold, part3, variable")
      ->required();
  yb->add_option("--a", y_a, "parameter a");
  yb->add_option("--b", y_b, "parameter b");
  yb->add_option("--c", y_c, "parameter c");
  yb->add_option("--out", y_out, "output path (default stdout)");
  yb->callback([&] {
    if (y_family == "skew")
      emit_json(y_out, satlab::system_to_json(
                           satlab::extremal_skew((int)y_a, (int)y_b, lim)));
    else if (y_family == "threshold")
      emit_json(y_out, satlab::system_to_json(satlab::extremal_threshold(
                           (int)y_a, (int)y_b, (int)y_c, lim)));
    else if (y_family == "part3")
      emit_json(y_out, satlab::system_to_json(
                           satlab::extremal_part3((int)y_b, (int)y_c, lim)));
    else if (y_family == "variable")
      emit_json(y_out, satlab::system_to_json(satlab::variable_example(
                           (int)y_a, (int)y_b, (int)y_c, lim)));
    else
      throw satlab::ParameterError("unknown system family '" + y_family + "'");
  });

  auto* yo = sys->add_subcommand("bounds", "proved size bounds at a point");
  add_flavor_opts(yo);
  yo->callback([&] {
    auto rep = satlab::bounds(make_flavor(y_flavor, y_a, y_b, y_c, y_d));
    json j;
    j["flavor"] = satlab::flavor_name(rep.flavor.kind);
    j["a"] = rep.flavor.a;
    j["b"] = rep.flavor.b;
    j["c"] = rep.flavor.c;
    j["d"] = rep.flavor.d;
    j["regime"] = rep.regime;
    if (rep.skew_bound) j["skew_bound"] = big_to_json(*rep.skew_bound);
    if (rep.threshold_bound)
      j["threshold_bound"] = big_to_json(*rep.threshold_bound);
    if (rep.exact) j["exact"] = big_to_json(*rep.exact);
    if (rep.explicit_upper) j["explicit_upper"] = big_to_json(*rep.explicit_upper);
    if (rep.degenerate_bound)
      j["degenerate_bound"] = big_to_json(*rep.degenerate_bound);
    if (rep.skew_comparison)
      j["skew_comparison"] = big_to_json(*rep.skew_comparison);
    emit_json(y_out, j);
  });

  auto* yr = sys->add_subcommand("brute", "longest system on a small ground");
  add_flavor_opts(yr);
  yr->add_option("--ground", y_ground, "ground set size ceiling");
  yr->add_option("--length", y_length, "sequence length ceiling");
  yr->add_option("--jobs", y_jobs, "parallel workers (0 = hardware)");
  yr->callback([&] {
    satlab::BruteOptions bo;
    bo.jobs = (int)y_jobs;
    bo.limits = lim;
    int ground = y_ground == kUnset ? lim.ground : (int)y_ground;
    int length = y_length == kUnset ? lim.length : (int)y_length;
    auto rep = satlab::brute_max(make_flavor(y_flavor, y_a, y_b, y_c, y_d),
                                 ground, length, bo);
    json j;
    j["optimum"] = rep.optimum;
    j["explored"] = rep.explored;
    j["ground_limit"] = rep.ground_limit;
    j["length_limit"] = rep.length_limit;
    j["exhaustive"] = rep.exhaustive;
    if (rep.witness) j["witness"] = satlab::system_to_json(*rep.witness);
    else if (rep.annotated_witness)
      j["witness"] = satlab::system_to_json(*rep.annotated_witness);
    else if (rep.degenerate_witness)
      j["witness"] = satlab::system_to_json(*rep.degenerate_witness);
    emit_json(y_out, j);
  });

  // table
  auto* tab = app.add_subcommand("table", "known values with live re-checks");
  long long t_maxr = 6;
  std::string t_out;
  tab->add_option("--max-r", t_maxr, "largest clique order row (default 6)");
  tab->add_option("--out", t_out, "output path (default stdout)");
  tab->callback([&] { rc = run_table((int)t_maxr, t_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const satlab::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const satlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const satlab::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const satlab::UnknownValue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const satlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
