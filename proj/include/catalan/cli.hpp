#pragma once

// Command-line front end. run_cli does all the work and returns the text for
// stdout and stderr together with the exit code, so it can be driven in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalan/fan.hpp"
#include "catalan/json_io.hpp"
#include "catalan/polytope.hpp"
#include "catalan/sequences.hpp"
#include "catalan/triangulation.hpp"
#include "catalan/verify.hpp"

namespace catalan {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_malformed = 3 };

struct CliResult {
  std::string out;
  std::string err;
  int code = exit_ok;
};

namespace cli_detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Output {
  bool json = false;
  std::string text;
  int code = exit_ok;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

inline Permutation parse_permutation(const std::string& s) {
  try {
    return Permutation::parse(s);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

inline std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string relation_str(const PrimitiveRelation& r) {
  std::string s = "v" + std::to_string(r.k) + " + w" + std::to_string(r.k) + " = ";
  if (r.is_zero()) return s + "0";
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    const auto& t = r.rhs[i];
    s += (i ? " + " : "") + (t.coeff == 1 ? std::string() : std::to_string(t.coeff)) +
         (t.side == Side::v ? "v" : "w") + std::to_string(t.pair);
  }
  return s;
}

inline std::size_t interval_cap() {
  if (const char* env = std::getenv("CATALAN_MAX_INTERVAL")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError("CATALAN_MAX_INTERVAL must be a positive integer");
    }
  }
  return default_max_interval;
}

// ---------- we / coat-hanger ----------

inline Output cmd_we(int max, bool json) {
  if (max < 1) throw UsageError("--max must be >= 1");
  if (json) return {true, sequence_to_json(we_numbers(max)).dump(), exit_ok, {}};
  return {false, we_table(max), exit_ok, {}};
}

inline Output cmd_coat_hanger(int max, bool cross_check, bool json) {
  if (max < 1) throw UsageError("--max must be >= 1");
  const auto full = coat_hanger(max);
  BigSequence f{1, {full.values.begin() + 1, full.values.end()}};
  Output o{json, {}, exit_ok, {}};
  Json doc = sequence_to_json(f);
  std::string table = sequence_table(f, 1, "m", "f_m");
  if (cross_check) {
    const int upto = std::min(max, 9);
    bool agree = true;
    Json counts = Json::array();
    for (int m = 1; m <= upto; ++m) {
      const auto c = enumerate_unordered_forests(m).size();
      counts.push_back(std::to_string(c));
      agree = agree && BigInt(c) == f.at(m);
    }
    doc["cross_check"] = {{"max", upto}, {"enumerated", counts}, {"agree", agree}};
    table += "cross-check m <= " + std::to_string(upto) + ": " + (agree ? "agree" : "DISAGREE") + "\n";
    if (!agree) o.code = exit_failure;
  }
  o.text = json ? doc.dump() : table;
  return o;
}

// ---------- classify ----------

inline Output cmd_classify(int n, bool json) {
  if (n < 1 || n > 9) throw UsageError("--n must be in 1..9");
  const auto classes = classify(n);
  const auto expected = we_numbers(n + 1).at(n + 1);
  Output o{json, {}, exit_ok, {}};
  if (BigInt(classes.size()) != expected) o.code = exit_failure;
  if (json) {
    Json list = Json::array();
    for (const auto& c : classes)
      list.push_back({{"code", c.code},
                      {"members", c.members},
                      {"representative", triangulation_to_json(c.representative)},
                      {"fan", fan_to_json(build_fan(c.representative).rays)}});
    o.text = Json{{"n", n}, {"class_count", classes.size()}, {"expected", expected.str()}, {"classes", list}}.dump();
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::string diag;
      for (const auto& [a, b] : classes[i].representative.diagonals())
        diag += (diag.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
      rows.push_back({std::to_string(i + 1), std::to_string(classes[i].members), classes[i].code, diag});
    }
    o.text = render_table({"class", "members", "code", "representative"}, rows) +
             "classes: " + std::to_string(classes.size()) + " (b_" + std::to_string(n + 1) + " = " + expected.str() +
             ")\n";
  }
  return o;
}

// ---------- fan ----------

inline Json fano_json(const FanoReport& r) { return {{"fano", r.fano}, {"degrees", r.degrees}}; }

inline std::string fan_table(const PairedFan& f, const std::vector<PrimitiveRelation>& rels) {
  std::vector<std::vector<std::string>> rows;
  for (int k = 1; k <= f.n(); ++k)
    rows.push_back({std::to_string(k), vec_str(f.v(k).coords), vec_str(f.w(k).coords),
                    relation_str(rels[k - 1]), std::to_string(rels[k - 1].degree())});
  return render_table({"k", "v_k", "w_k", "relation", "degree"}, rows);
}

inline Output cmd_fan(const std::string& perm, const std::string& tri_file, const std::string& fan_file, bool json) {
  const int given = !perm.empty() + !tri_file.empty() + !fan_file.empty();
  if (given != 1) throw UsageError("give exactly one of --perm, --triangulation, --input-fan");
  Output o{json, {}, exit_ok, {}};
  if (!fan_file.empty()) {
    const auto doc = fan_from_json(parse_json_file(fan_file));
    const auto smooth = is_smooth(doc.fan);
    if (!smooth) throw MalformedInput("input fan is not smooth");
    const auto rels = primitive_relations(doc.fan);
    const bool consistent = doc.relations.empty() || doc.relations == rels;
    if (!consistent) o.code = exit_failure;
    if (json) {
      o.text = Json{{"fan", fan_to_json(doc.fan, rels)},
                    {"fano", fano_json(is_fano(doc.fan))},
                    {"smooth", smooth},
                    {"relations_match_input", consistent}}
                   .dump();
    } else {
      o.text = fan_table(doc.fan, rels) + "smooth: yes\nfano: " + (is_fano(doc.fan).fano ? "yes" : "no") +
               "\nrelations match input: " + (consistent ? "yes" : "no") + "\n";
    }
    return o;
  }
  Triangulation t = !perm.empty() ? triangulation_of_tree(psi(parse_permutation(perm)))
                                  : triangulation_from_json(parse_json_file(tri_file));
  const auto fan = build_fan(t);
  const auto rels = primitive_relations(fan.rays);
  const auto fano = is_fano(fan.rays);
  const auto smooth = is_smooth(fan.rays);
  if (json) {
    o.text = Json{{"fan", fan_to_json(fan.rays, rels)},
                  {"fano", fano_json(fano)},
                  {"smooth", smooth},
                  {"triangulation", triangulation_to_json(t)},
                  {"code", fan_code(fan)}}
                 .dump();
  } else {
    o.text = fan_table(fan.rays, rels) + "smooth: " + (smooth ? "yes" : "no") + "\nfano: " + (fano.fano ? "yes" : "no") +
             "\ncode: " + fan_code(fan) + "\n";
  }
  return o;
}

// ---------- bip ----------

inline Output cmd_bip(const std::string& vs, const std::string& ws, bool normal_fan, bool check_cube, bool decompose,
                      bool json) {
  const auto v = parse_permutation(vs), w = parse_permutation(ws);
  if (v.size() != w.size()) throw MalformedInput("v and w have different sizes");
  if (!bruhat_leq(v, w)) throw MalformedInput(v.str() + " is not below " + w.str() + " in Bruhat order");
  BruhatPolytope p;
  try {
    p = build_bip(v, w, interval_cap());
  } catch (const CapExceeded& e) {
    throw MalformedInput(std::string(e.what()) + " (raise CATALAN_MAX_INTERVAL to override)");
  }
  if (p.affine_dim > max_hull_dimension)
    throw MalformedInput("polytope has dimension " + std::to_string(p.affine_dim) + ", above the supported " +
                         std::to_string(max_hull_dimension));
  const auto facets = convex_hull_facets(p);
  const auto g = vertices_and_edges(p, facets);
  Output o{json, {}, exit_ok, {}};

  Json doc{{"v", permutation_to_json(v)}, {"w", permutation_to_json(w)}, {"affine_dim", p.affine_dim},
           {"toric", is_toric(p)}, {"interval_size", p.points.size()}};
  Json verts = Json::array();
  for (auto i : g.vertices) verts.push_back(p.points[i]);
  doc["vertices"] = verts;
  Json fj = Json::array();
  for (const auto& f : facets) fj.push_back(facet_to_json(f));
  doc["facets"] = fj;
  doc["edge_count"] = g.edges.size();

  std::ostringstream tab;
  tab << "Q_{" << v.str() << "," << w.str() << "}: " << p.points.size() << " points, dim " << p.affine_dim
      << (is_toric(p) ? ", toric" : ", not toric") << ", " << g.vertices.size() << " vertices, " << g.edges.size()
      << " edges\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < facets.size(); ++i)
      rows.push_back({std::to_string(i), vec_str(facets[i].normal.coords), to_string(facets[i].offset),
                      std::to_string(facets[i].points.size())});
    tab << render_table({"facet", "normal", "offset", "vertices"}, rows);
  }

  std::optional<CombinatorialCubeCertificate> cert;
  if (check_cube || normal_fan) cert = is_combinatorial_cube(p, facets, g);
  if (check_cube) {
    doc["certificate"] = certificate_to_json(*cert);
    tab << "cube: " << (cert->valid() ? "yes" : "no") << " (vertices " << cert->vertex_count << ", simple "
        << (cert->simple ? "yes" : "no") << ", hypercube graph " << (cert->graph_iso_to_hypercube ? "yes" : "no")
        << ", opposite pairs " << cert->opposite_pairs.size() << ")\n";
  }
  if (normal_fan) {
    if (cert->valid() && p.affine_dim > 0) {
      const auto pf = paired_normal_fan(p, facets, g, *cert);
      std::vector<PrimitiveRelation> rels;
      Json fan_block;
      try {
        rels = primitive_relations(pf);
        fan_block = fan_to_json(pf, rels);
        fan_block["fano"] = fano_json(is_fano(pf));
        tab << fan_table(pf, rels) << "fano: " << (is_fano(pf).fano ? "yes" : "no") << "\n";
      } catch (const std::logic_error&) {
        fan_block = simplicial_fan_to_json(normal_fan_of(p, facets, g));
        tab << "normal fan is not smooth\n";
      }
      fan_block["smooth"] = is_smooth(pf);
      doc["normal_fan"] = fan_block;
    } else {
      const auto nf = normal_fan_of(p, facets, g);
      doc["normal_fan"] = simplicial_fan_to_json(nf);
      tab << "normal fan: " << nf.rays.size() << " rays, " << nf.maximal_cones.size() << " maximal cones\n";
    }
  }
  if (decompose) {
    ProductDecomposition d;
    try {
      d = product_decomposition(v, w);
    } catch (const NotProper& e) {
      throw MalformedInput(std::string("cannot decompose: ") + e.what());
    }
    const auto val = validate_product(p, facets, d);
    Json fs = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : d.factors) {
      const auto size = interval(f.v, f.w).elements.size();
      fs.push_back({{"window", {f.lo, f.hi}}, {"v", permutation_to_json(f.v)}, {"w", permutation_to_json(f.w)},
                    {"interval_size", size}});
      rows.push_back({"[" + std::to_string(f.lo) + "," + std::to_string(f.hi) + "]", f.v.str(), f.w.str(),
                      std::to_string(size)});
    }
    doc["factors"] = fs;
    doc["product_check"] = {{"interval_size", val.interval_size},
                            {"factor_vertex_product", val.factor_vertex_product},
                            {"counts_match", val.counts_match},
                            {"normals_match", val.normals_match}};
    tab << render_table({"window", "v_i", "w_i", "points"}, rows) << "product check: "
        << (val.ok() ? "ok" : "FAILED") << " (" << val.factor_vertex_product << " = " << val.interval_size << ")\n";
    if (!val.ok()) o.code = exit_failure;
  }
  o.text = json ? doc.dump() : tab.str();
  return o;
}

// ---------- verify ----------

inline Output cmd_verify(const std::string& suite, const SuiteOptions& opt, bool json) {
  std::vector<VerificationReport> reports;
  try {
    if (suite == "all") {
      if (opt.only_case) throw UsageError("--case needs a single suite");
      for (const auto& s : suites()) {
        auto o = opt;
        if (o.max_n && s.bound_max_n > 0) o.max_n = std::min(*o.max_n, s.bound_max_n);
        reports.push_back(run_suite(s, o));
      }
    } else {
      reports.push_back(run_suite(suite, opt));
    }
  } catch (const SuiteUsageError& e) {
    throw UsageError(e.what());
  }
  Output o{json, {}, exit_ok, {}};
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (!passed) o.code = exit_failure;
  for (const auto& r : reports) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << r.seconds;
    o.err += "verify " + r.suite + ": " + t.str() + " s\n";
  }
  if (json) {
    if (reports.size() == 1) {
      o.text = report_to_json(reports[0]).dump();
    } else {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(report_to_json(r));
      o.text = Json{{"suites", list}, {"passed", passed}}.dump();
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports)
      rows.push_back({r.suite, std::to_string(r.cases), std::to_string(r.failures.size()), r.passed() ? "pass" : "FAIL"});
    o.text = render_table({"suite", "cases", "failures", "status"}, rows);
    for (const auto& r : reports)
      for (const auto& f : r.failures) o.text += r.suite + " --case '" + f.case_id + "': " + f.detail + "\n";
  }
  return o;
}

// ---------- experimental probes ----------

/// Pairs v <= w in S_{n+1} whose polytope is an n-cube with a Catalan-type normal fan, split by
/// whether (v,w) has one of the two special forms. Asserts nothing.
inline Output cmd_probe_forms(int n, bool json) {
  if (n < 1 || n > 4) throw UsageError("probe catalan-forms supports --n 1..4");
  const int m = n + 1;
  std::set<std::pair<Permutation, Permutation>> special;
  for (const auto& u : all_permutations(n)) {
    special.insert({u_head(u), u_head(u) * s_range(1, n, m)});
    special.insert({u_tail(u), u_tail(u) * s_range(n, 1, m)});
  }
  const auto perms = all_permutations(m);
  std::size_t catalan = 0, of_form = 0;
  Json others = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : perms)
    for (const auto& w : perms) {
      if (length(w) - length(v) != n || !bruhat_leq(v, w)) continue;
      std::optional<std::string> code;
      try {
        code = catalan_code_of(v, w);
      } catch (const std::logic_error&) {
        continue;  // normal fan not smooth
      }
      if (!code) continue;
      ++catalan;
      if (special.count({v, w})) {
        ++of_form;
      } else {
        others.push_back({{"v", v.str()}, {"w", w.str()}, {"code", *code}});
        rows.push_back({v.str(), w.str(), *code});
      }
    }
  Output o{json, {}, exit_ok, {}};
  if (json) {
    o.text = Json{{"experimental", true}, {"n", n}, {"catalan_type_pairs", catalan}, {"of_special_form", of_form},
                  {"other_pairs", others}}
                 .dump();
  } else {
    o.text = "experimental: n = " + std::to_string(n) + ", Catalan-type pairs " + std::to_string(catalan) +
             ", of the two special forms " + std::to_string(of_form) + "\n";
    if (!rows.empty()) o.text += render_table({"v", "w", "code"}, rows);
  }
  return o;
}

/// Pairs in S_m whose polytope is a combinatorial cube with smooth Fano normal fan, and whether
/// v^{-1}w has a proper minimal expression (so Q_{v,w} is a product of Catalan-type factors). Asserts nothing.
inline Output cmd_probe_fano(int m, bool json) {
  if (m < 2 || m > 5) throw UsageError("probe fano-products supports --m 2..5");
  const auto perms = all_permutations(m);
  std::size_t fano_cubes = 0, products = 0;
  Json others = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : perms)
    for (const auto& w : perms) {
      const int gap = length(w) - length(v);
      if (gap < 1 || !bruhat_leq(v, w)) continue;
      const auto p = build_bip(v, w);
      if (!is_toric(p)) continue;
      const auto facets = convex_hull_facets(p);
      const auto g = vertices_and_edges(p, facets);
      const auto cert = is_combinatorial_cube(p, facets, g);
      if (!cert.valid()) continue;
      const auto pf = paired_normal_fan(p, facets, g, cert);
      bool fano = false;
      try {
        fano = is_smooth(pf) && is_fano(pf).fano;
      } catch (const std::logic_error&) {
        fano = false;
      }
      if (!fano) continue;
      ++fano_cubes;
      bool product = true;
      try {
        product_decomposition(v, w);
      } catch (const NotProper&) {
        product = false;
      }
      if (product) {
        ++products;
      } else {
        others.push_back({{"v", v.str()}, {"w", w.str()}});
        rows.push_back({v.str(), w.str()});
      }
    }
  Output o{json, {}, exit_ok, {}};
  if (json) {
    o.text = Json{{"experimental", true}, {"m", m}, {"smooth_fano_cubes", fano_cubes}, {"proper_products", products},
                  {"other_pairs", others}}
                 .dump();
  } else {
    o.text = "experimental: S_" + std::to_string(m) + ", smooth Fano cube pairs " + std::to_string(fano_cubes) +
             ", proper products " + std::to_string(products) + "\n";
    if (!rows.empty()) o.text += render_table({"v", "w"}, rows);
  }
  return o;
}

}  // namespace cli_detail

inline CliResult run_cli(const std::vector<std::string>& args) {
  using namespace cli_detail;
  CLI::App app{"Catalan-type fans, binary trees and Bruhat interval polytopes", "catalan"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table", output;
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output", output, "write the result to FILE");

  int we_max = 0;
  auto* we = app.add_subcommand("we", "Wedderburn-Etherington numbers b_1..b_M");
  we->add_option("--max", we_max, "M")->required();

  int ch_max = 0;
  bool cross = false;
  auto* ch = app.add_subcommand("coat-hanger", "coat-hanger numbers f_1..f_M");
  ch->add_option("--max", ch_max, "M")->required();
  ch->add_flag("--cross-check", cross, "compare with direct forest enumeration for m <= 9");

  int cl_n = 0;
  auto* cl = app.add_subcommand("classify", "isomorphism classes of fans of (n+2)-gon triangulations");
  cl->add_option("--n", cl_n, "N")->required();

  std::string perm, tri_file, fan_file;
  auto* fan = app.add_subcommand("fan", "fan of a triangulation, with relations and Fano report");
  fan->add_option("--perm", perm, "permutation u; uses the triangulation of psi(u)");
  fan->add_option("--triangulation", tri_file, "triangulation JSON file");
  fan->add_option("--input-fan", fan_file, "fan JSON file to check");

  std::string bv, bw;
  bool nf = false, cube = false, dec = false;
  auto* bip = app.add_subcommand("bip", "Bruhat interval polytope Q_{v,w}");
  bip->add_option("--v", bv, "lower permutation")->required();
  bip->add_option("--w", bw, "upper permutation")->required();
  bip->add_flag("--normal-fan", nf);
  bip->add_flag("--check-cube", cube);
  bip->add_flag("--decompose", dec);

  std::string suite = "all", only_case, data_dir;
  int max_n = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "all|tables|duality|relations|smooth|iso|normalfan|atoms|product");
  ver->add_option("--max-n", max_n, "largest n");
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  ver->add_option("--seed", seed, "seed for sampled checks");
  ver->add_option("--case", only_case, "re-run one case identifier");
  ver->add_option("--data-dir", data_dir, "directory with golden tables");

  int probe_n = 0;
  auto* probe = app.add_subcommand("probe", "experimental searches; assert nothing");
  probe->require_subcommand(1);
  probe->fallthrough();
  auto* forms = probe->add_subcommand("catalan-forms", "Catalan-type BIPs not of the two special forms");
  forms->add_option("--n", probe_n, "N")->required();
  auto* fano = probe->add_subcommand("fano-products", "smooth Fano cube BIPs that are not proper products");
  fano->add_option("--m", probe_n, "M")->required();

  CliResult res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = code == 0 ? exit_ok : exit_usage;
    return res;
  }

  const bool json = format == "json";
  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (*we) {
      o = cmd_we(we_max, json);
    } else if (*ch) {
      o = cmd_coat_hanger(ch_max, cross, json);
    } else if (*cl) {
      o = cmd_classify(cl_n, json);
    } else if (*fan) {
      o = cmd_fan(perm, tri_file, fan_file, json);
    } else if (*bip) {
      o = cmd_bip(bv, bw, nf, cube, dec, json);
    } else if (*ver) {
      SuiteOptions opt;
      if (max_n != 0) opt.max_n = max_n;
      opt.jobs = jobs;
      opt.seed = seed;
      if (!only_case.empty()) opt.only_case = only_case;
      if (!data_dir.empty()) opt.data_dir = data_dir;
      o = cmd_verify(suite, opt, json);
    } else if (*forms) {
      o = cmd_probe_forms(probe_n, json);
    } else if (*fano) {
      o = cmd_probe_fano(probe_n, json);
    }
  } catch (const UsageError& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", exit_usage};
  } catch (const MalformedInput& e) {
    return {"", std::string("malformed input: ") + e.what() + "\n", exit_malformed};
  } catch (const MalformedTriangulation& e) {
    return {"", std::string("malformed input: ") + e.what() + "\n", exit_malformed};
  }

  res.out = o.text;
  if (o.json) res.out += "\n";
  res.err = o.err;
  res.code = o.code;
  if (!*ver) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3)
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.err += "wall time: " + t.str() + " s\n";
  }
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) return {"", "cannot write " + output + "\n", exit_usage};
    f << res.out;
    res.out.clear();
  }
  return res;
}

}  // namespace catalan
