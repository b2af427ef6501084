#pragma once

// Exhaustive verification suites. A suite is a list of case identifiers plus a
// check that returns a failure description or nothing. Case identifiers are
// plain strings so a failing case can be re-run alone.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "catalan/binary_tree.hpp"
#include "catalan/fan.hpp"
#include "catalan/json_io.hpp"
#include "catalan/permutation.hpp"
#include "catalan/polytope.hpp"
#include "catalan/sequences.hpp"
#include "catalan/triangulation.hpp"

#ifndef CATALAN_DATA_DIR
#define CATALAN_DATA_DIR "data"
#endif

namespace catalan {

// ---------- aligned tables ----------

/// Right-aligned columns separated by two spaces.
inline std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      out += std::string(width[c] - std::min(width[c], cells[c].size()), ' ') + cells[c];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

inline std::string sequence_table(const BigSequence& s, int from, const std::string& index, const std::string& value) {
  std::vector<std::vector<std::string>> rows;
  for (int i = from; i <= s.last_index(); ++i) rows.push_back({std::to_string(i), s.at(i).str()});
  return render_table({index, value}, rows);
}

inline std::string we_table(int max) { return sequence_table(we_numbers(max), 1, "n", "b_n"); }
inline std::string coat_hanger_table(int max) { return sequence_table(coat_hanger(max), 1, "m", "f_m"); }

// ---------- reports ----------

struct CaseFailure {
  std::string case_id;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  std::optional<int> max_n;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::string> only_case;
  std::string data_dir = CATALAN_DATA_DIR;
  std::size_t probe_samples = 10000;
};

using CaseCheck = std::function<std::optional<std::string>(const std::string&, const SuiteOptions&)>;

struct Suite {
  std::string name;
  int default_max_n = 0;
  int bound_max_n = 0;  // 0: max-n not applicable
  std::function<std::vector<std::string>(int max_n)> cases;
  CaseCheck check;
};

class SuiteUsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------- case identifiers ----------

inline std::string triangulation_id(const Triangulation& t) { return triangulation_to_json(t).dump(); }

inline Triangulation triangulation_of_id(const std::string& id) {
  try {
    return triangulation_from_json(Json::parse(id));
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("case is not a triangulation: ") + e.what());
  }
}

inline std::vector<std::string> triangulation_cases(int max_n) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : enumerate_triangulations(n)) out.push_back(triangulation_id(t));
  return out;
}

inline std::vector<std::string> permutation_cases(int max_n) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& u : all_permutations(n)) out.push_back(u.str());
  return out;
}

inline Triangulation triangulation_of_permutation(const Permutation& u) { return triangulation_of_tree(psi(u)); }

// ---------- individual checks ----------

inline std::optional<std::string> check_duality(const Triangulation& t) {
  const auto pq = vectors_pq(t);
  const auto vw = vectors_vw(t);
  for (int i = 0; i < t.n(); ++i)
    for (int j = 0; j < t.n(); ++j) {
      const std::int64_t delta = i == j ? 1 : 0;
      if (pairing(vw.v[i], pq.p[j]) != delta)
        return "<v_" + std::to_string(i + 1) + ", p_" + std::to_string(j + 1) + "> = " +
               std::to_string(pairing(vw.v[i], pq.p[j]));
      if (pairing(vw.w[i], pq.q[j]) != delta)
        return "<w_" + std::to_string(i + 1) + ", q_" + std::to_string(j + 1) + "> = " +
               std::to_string(pairing(vw.w[i], pq.q[j]));
    }
  return std::nullopt;
}

inline std::optional<std::string> check_relations(const Triangulation& t) {
  const auto fan = build_fan(t);
  const auto rels = primitive_relations(fan.rays);
  const auto ps = phi_sigma(t);
  int zeros = 0;
  for (const auto& r : rels) {
    const auto idx = static_cast<std::size_t>(r.k - 1);
    if (r.is_zero()) {
      ++zeros;
      if (r.k != ps.k0) return "zero relation at k=" + std::to_string(r.k) + " but k0=" + std::to_string(ps.k0);
      if (r.degree() != 2) return "degree of the zero relation is not 2";
      continue;
    }
    if (!r.is_single_ray()) return "relation k=" + std::to_string(r.k) + " is not a single ray";
    const Side expected = ps.sigma[idx] == Sign::plus ? Side::v : Side::w;
    if (r.rhs[0].pair != ps.phi[idx] || r.rhs[0].side != expected)
      return "relation k=" + std::to_string(r.k) + " disagrees with phi/sigma";
    if (r.degree() != 1) return "degree of relation k=" + std::to_string(r.k) + " is not 1";
  }
  if (zeros != 1) return std::to_string(zeros) + " zero relations";
  if (!(tree_from_phi_sigma(ps) == tree_of_triangulation(t))) return "tree rebuilt from phi/sigma differs";
  if (!is_fano(fan.rays).fano) return "is_fano reports false";
  return std::nullopt;
}

inline std::optional<std::string> check_smooth(const Triangulation& t, std::size_t samples, std::uint64_t seed) {
  const auto fan = build_fan(t).rays.simplicial();
  if (fan.maximal_cones.size() != (std::size_t{1} << t.n())) return "wrong number of maximal cones";
  if (!is_smooth(fan)) return "a maximal cone is not unimodular";
  const auto probe = completeness_probe(fan, samples, seed);
  if (!probe.ok) {
    std::string w;
    for (auto x : *probe.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    return probe.detail + " (" + w + ")";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_atoms(const Permutation& u) {
  const auto t = triangulation_of_permutation(u);
  auto atoms = atoms_head(u);
  for (auto& [i, j] : atoms) {
    --i;
    --j;
  }
  auto left = left_tree(t);
  auto right = right_tree(t);
  auto coatoms = coatoms_head(u);
  std::sort(atoms.begin(), atoms.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (atoms.size() != static_cast<std::size_t>(u.size())) return "atom count differs from n";
  if (atoms != left) return "shifted atoms differ from the left tree";
  if (coatoms != right) return "coatoms differ from the right tree";
  return std::nullopt;
}

inline std::set<IntVector> coords_set(const std::vector<LatticeVectorM>& v) {
  std::set<IntVector> out;
  for (const auto& x : v) out.insert(x.coords);
  return out;
}

/// Q_{û, û s(1,n)} realises the fan of ψ(u); for n <= 4 also Q_{ǔ, ǔ s(n,1)} realises the fan of ψ(w0 u w0).
inline std::optional<std::string> check_normal_fan(const Permutation& u) {
  const int n = u.size(), m = n + 1;
  const auto v = u_head(u);
  const auto w = v * s_range(1, n, m);
  const auto p = build_bip(v, w);
  if (!is_toric(p)) return "Q is not toric";
  if (p.points.size() != (std::size_t{1} << n)) return "interval has " + std::to_string(p.points.size()) + " elements";
  const auto facets = convex_hull_facets(p);
  const auto g = vertices_and_edges(p, facets);
  if (g.vertices.size() != p.points.size()) return "not every interval element is a vertex";
  const auto cert = is_combinatorial_cube(p, facets, g);
  if (!cert.valid()) return "cube certificate fails";
  const auto t = triangulation_of_permutation(u);
  const auto nf = normal_fan_of(p, facets, g);
  const auto expected = build_fan(t).rays.simplicial();
  if (ray_set(nf) != ray_set(expected)) return "facet normals differ from the v/w rays";
  if (cone_set(nf) != cone_set(expected)) return "vertex cones differ from the fan cones";

  // edge directions at the two extreme vertices
  const auto pq = vectors_pq(t);
  const auto low = std::find(p.elements.begin(), p.elements.end(), v) - p.elements.begin();
  const auto high = std::find(p.elements.begin(), p.elements.end(), w) - p.elements.begin();
  const auto at_low = edge_directions(p, g, static_cast<std::size_t>(low));
  const auto at_high = edge_directions(p, g, static_cast<std::size_t>(high));
  if (std::set<IntVector>(at_low.begin(), at_low.end()) != coords_set(pq.p) || at_low.size() != pq.p.size())
    return "edge directions at the bottom vertex are not the p-vectors";
  if (std::set<IntVector>(at_high.begin(), at_high.end()) != coords_set(pq.q) || at_high.size() != pq.q.size())
    return "edge directions at the top vertex are not the q-vectors";

  // atom û t_{*,j} is not below coatom w t_{j-1,*}
  std::map<int, int> atom_by_j, coatom_by_i;
  for (auto [i, j] : atoms_head(u)) atom_by_j[j] = i;
  for (auto [i, j] : coatoms_head(u)) coatom_by_i[i] = j;
  for (int j = 2; j <= m; ++j) {
    const auto a = v * Permutation::transposition(atom_by_j.at(j), j, m);
    const auto c = w * Permutation::transposition(j - 1, coatom_by_i.at(j - 1), m);
    if (bruhat_leq(a, c)) return "atom " + a.str() + " lies below coatom " + c.str();
  }

  if (n <= 4) {
    const auto vt = u_tail(u);
    const auto wt = vt * s_range(n, 1, m);
    const auto q = build_bip(vt, wt);
    const auto qf = convex_hull_facets(q);
    const auto qc = is_combinatorial_cube(q, qf, vertices_and_edges(q, qf));
    if (!qc.valid()) return "tail polytope is not a cube";
    const auto target = build_fan(triangulation_of_permutation(w0_conjugate(u)));
    if (!fan_iso_bruteforce(paired_normal_fan(qf, qc), target.rays)) return "tail polytope fan is not isomorphic";
    auto mapped = w0_polytope_map(q.points);
    auto image = build_bip(w0_conjugate(vt), w0_conjugate(wt)).points;
    std::sort(mapped.begin(), mapped.end());
    std::sort(image.begin(), image.end());
    if (mapped != image) return "w0 map does not carry the tail polytope onto its conjugate";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_iso_pair(const Triangulation& a, const Triangulation& b) {
  const auto fa = build_fan(a), fb = build_fan(b);
  const bool brute = fan_iso_bruteforce(fa.rays, fb.rays).has_value();
  const bool tree = fan_iso_by_tree(fa, fb);
  if (brute != tree)
    return std::string("brute force says ") + (brute ? "isomorphic" : "not isomorphic") + ", trees say " +
           (tree ? "isomorphic" : "not isomorphic");
  return std::nullopt;
}

// ---------- product decomposition ----------

/// Canonical code of the tree whose fan is isomorphic to the normal fan of the cube Q_{v,w}, if any.
inline std::optional<std::string> catalan_code_of(const Permutation& v, const Permutation& w) {
  const auto p = build_bip(v, w);
  if (static_cast<int>(p.affine_dim) != v.size() - 1) return std::nullopt;
  const auto facets = convex_hull_facets(p);
  const auto cert = is_combinatorial_cube(p, facets, vertices_and_edges(p, facets));
  if (!cert.valid()) return std::nullopt;
  const auto fan = paired_normal_fan(facets, cert);
  for (const auto& cls : classify(v.size() - 1))
    if (fan_iso_bruteforce(fan, build_fan(cls.representative).rays)) return cls.code;
  return std::nullopt;
}

inline std::vector<std::size_t> face_vector_product(const std::vector<std::vector<std::size_t>>& factors) {
  std::vector<std::size_t> out{1};
  for (const auto& f : factors) {
    std::vector<std::size_t> next(out.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += out[i] * f[j];
    out = std::move(next);
  }
  return out;
}

struct ProductCase {
  Permutation v;
  Permutation w;
};

inline const std::vector<std::pair<std::string, std::string>>& census_pairs(int m) {
  static const std::vector<std::pair<std::string, std::string>> three{
      {"1234", "2341"}, {"1324", "3241"}, {"12345", "23154"}, {"123456", "214365"}};
  static const std::vector<std::pair<std::string, std::string>> four{
      {"12345", "23451"},    {"12435", "24351"},    {"13524", "35241"},      {"123456", "231564"},
      {"123456", "234165"},  {"132456", "324165"},  {"1234567", "2315476"},  {"12345678", "21436587"}};
  if (m == 3) return three;
  if (m == 4) return four;
  throw SuiteUsageError("census lists exist for m = 3 and m = 4");
}

/// Decomposes, validates the product against Q_{v,w}, and returns the forest of factor trees.
inline std::optional<std::string> check_product(const Permutation& v, const Permutation& w, Forest* forest = nullptr) {
  ProductDecomposition d;
  try {
    d = product_decomposition(v, w);
  } catch (const NotProper& e) {
    return e.what();
  }
  const auto p = build_bip(v, w);
  if (!is_toric(p)) return "Q is not toric";
  const auto facets = convex_hull_facets(p);
  const auto g = vertices_and_edges(p, facets);
  if (!is_combinatorial_cube(p, facets, g).valid()) return "Q is not a combinatorial cube";
  const auto val = validate_product(p, facets, d);
  if (!val.counts_match)
    return "factor vertex product " + std::to_string(val.factor_vertex_product) + " != |[v,w]| " +
           std::to_string(val.interval_size);
  if (!val.normals_match) return "facet normals differ from the embedded factor normals";
  std::vector<std::vector<std::size_t>> fvs;
  Forest trees;
  for (const auto& f : d.factors) {
    const auto q = build_bip(f.v, f.w);
    const auto qf = convex_hull_facets(q);
    fvs.push_back(face_vector(q, qf, vertices_and_edges(q, qf)));
    const auto code = catalan_code_of(f.v, f.w);
    if (!code) return "factor (" + f.v.str() + "," + f.w.str() + ") is not of Catalan type";
    trees.push_back(*code);
  }
  if (face_vector_product(fvs) != face_vector(p, facets, g)) return "face vector is not the product of the factors'";
  std::sort(trees.begin(), trees.end());
  if (forest) *forest = std::move(trees);
  return std::nullopt;
}

inline std::optional<std::string> check_census(int m) {
  std::set<Forest> seen;
  for (const auto& [vs, ws] : census_pairs(m)) {
    Forest f;
    if (auto err = check_product(Permutation::parse(vs), Permutation::parse(ws), &f)) return vs + "," + ws + ": " + *err;
    if (!seen.insert(f).second) return vs + "," + ws + " repeats a forest";
  }
  const auto all = enumerate_unordered_forests(m);
  if (seen != std::set<Forest>(all.begin(), all.end())) return "listed pairs do not realise every forest";
  return std::nullopt;
}

// ---------- tables ----------

inline std::optional<std::string> check_table(const std::string& id, const std::string& data_dir) {
  std::string expected_file, actual;
  if (id == "table1_we") {
    expected_file = data_dir + "/table1_we.txt";
    actual = we_table(15);
  } else if (id == "table2_coat_hanger") {
    expected_file = data_dir + "/table2_coat_hanger.txt";
    actual = coat_hanger_table(14);
  } else {
    throw MalformedInput("unknown table " + id);
  }
  std::ifstream in(expected_file, std::ios::binary);
  if (!in) return "cannot read " + expected_file;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (ss.str() != actual) return "output differs from " + expected_file;
  return std::nullopt;
}

// ---------- registry ----------

inline std::pair<std::string, std::string> split_pair(const std::string& id, char sep) {
  const auto at = id.find(sep);
  if (at == std::string::npos) throw MalformedInput("case \"" + id + "\" lacks '" + std::string(1, sep) + "'");
  return {id.substr(0, at), id.substr(at + 1)};
}

inline Permutation permutation_of_id(const std::string& id) {
  try {
    return Permutation::parse(id);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"tables", 0, 0, [](int) { return std::vector<std::string>{"table1_we", "table2_coat_hanger"}; },
       [](const std::string& id, const SuiteOptions& o) { return check_table(id, o.data_dir); }},
      {"duality", 7, 9, triangulation_cases,
       [](const std::string& id, const SuiteOptions&) { return check_duality(triangulation_of_id(id)); }},
      {"relations", 7, 8, triangulation_cases,
       [](const std::string& id, const SuiteOptions&) { return check_relations(triangulation_of_id(id)); }},
      {"smooth", 6, 7, triangulation_cases,
       [](const std::string& id, const SuiteOptions& o) {
         return check_smooth(triangulation_of_id(id), o.probe_samples, o.seed);
       }},
      {"iso", 5, 6,
       [](int max_n) {
         std::vector<std::string> out;
         for (int n = 1; n <= max_n; ++n) {
           const auto ts = enumerate_triangulations(n);
           for (const auto& a : ts)
             for (const auto& b : ts) out.push_back(triangulation_id(a) + "|" + triangulation_id(b));
         }
         return out;
       },
       [](const std::string& id, const SuiteOptions&) {
         const auto [a, b] = split_pair(id, '|');
         return check_iso_pair(triangulation_of_id(a), triangulation_of_id(b));
       }},
      {"normalfan", 5, 6, permutation_cases,
       [](const std::string& id, const SuiteOptions&) { return check_normal_fan(permutation_of_id(id)); }},
      {"atoms", 6, 8, permutation_cases,
       [](const std::string& id, const SuiteOptions&) { return check_atoms(permutation_of_id(id)); }},
      {"product", 0, 0,
       [](int) {
         std::vector<std::string> out{"173254689,715326894"};
         for (int m : {3, 4})
           for (const auto& [v, w] : census_pairs(m)) out.push_back(v + "," + w);
         out.push_back("census:3");
         out.push_back("census:4");
         return out;
       },
       [](const std::string& id, const SuiteOptions&) -> std::optional<std::string> {
         if (id.rfind("census:", 0) == 0) return check_census(std::stoi(id.substr(7)));
         const auto [v, w] = split_pair(id, ',');
         return check_product(permutation_of_id(v), permutation_of_id(w));
       }},
  };
  return all;
}

inline const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return s;
  throw SuiteUsageError("unknown suite \"" + name + "\"");
}

/// Runs the cases of one suite over `jobs` threads with a static contiguous partition.
inline VerificationReport run_suite(const Suite& suite, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  int max_n = opt.max_n.value_or(suite.default_max_n);
  if (suite.bound_max_n > 0 && (max_n < 1 || max_n > suite.bound_max_n))
    throw SuiteUsageError("suite " + suite.name + " supports --max-n 1.." + std::to_string(suite.bound_max_n));
  const auto cases = opt.only_case ? std::vector<std::string>{*opt.only_case} : suite.cases(max_n);
  std::vector<std::optional<std::string>> results(cases.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        results[i] = suite.check(cases[i], opt);
      } catch (const MalformedInput&) {
        if (opt.only_case) throw;
        results[i] = "malformed case";
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(opt.jobs, cases.size()));
  if (jobs == 1 || opt.only_case) {
    work(0, cases.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cases.size() + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t lo = std::min(cases.size(), j * chunk), hi = std::min(cases.size(), lo + chunk);
      pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  VerificationReport r{suite.name, cases.size(), {}, 0};
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (results[i]) r.failures.push_back({cases[i], *results[i]});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  return run_suite(find_suite(name), opt);
}

inline Json report_to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"case", f.case_id}, {"detail", f.detail}});
  return {{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}, {"passed", r.passed()}};
}

}  // namespace catalan
