// Command-line front end: folds root data, branches representations, prints
// Lusztig polynomial tables, nearby-cycle reports, and character values.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "satkit/local_model.hpp"

using json = nlohmann::ordered_json;
using namespace satkit;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string format = "pretty";  // json | tsv | pretty
  std::string cache_dir;
};

struct Output {
  json j;
  std::string pretty;
  std::string tsv;
};

// ---- parsing helpers ------------------------------------------------------

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw spec_error("not an integer: '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Vec parse_csv(const std::string& s) {
  Vec v;
  for (const auto& p : split(s, ',')) v.push_back(parse_int(p));
  return v;
}

// class grammar: free coordinates, then an optional ';' and the torsion
// coordinates, e.g. "1;0" for Z + Z/2
Vec parse_class(const std::string& s, const FgAbelianGroup& q) {
  auto halves = split(s, ';');
  if (halves.size() > 2) throw spec_error("more than one ';' in a class");
  Vec free = parse_csv(halves[0]);
  Vec tor = halves.size() == 2 ? parse_csv(halves[1]) : Vec();
  if (free.size() != q.free_rank())
    throw spec_error("expected " + std::to_string(q.free_rank()) +
                     " free coordinates, got " + std::to_string(free.size()));
  if (tor.size() != q.torsion().size())
    throw spec_error("expected " + std::to_string(q.torsion().size()) +
                     " torsion coordinates, got " + std::to_string(tor.size()));
  Vec nf = free;
  nf.insert(nf.end(), tor.begin(), tor.end());
  return q.reduce(nf);
}

Rat parse_rational(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw spec_error("not a rational number: '" + s + "'");
  }
}

// value grammar: "c", "q^k", or "c*q^k" with c rational and k an integer
ParamValue parse_param_value(const std::string& s) {
  ParamValue v{Cyclotomic(Rat(1)), 0};
  std::string body = s;
  auto star = body.find('*');
  std::string qpart;
  if (star != std::string::npos) {
    qpart = body.substr(star + 1);
    body = body.substr(0, star);
  } else if (body.rfind("q^", 0) == 0 || body == "q") {
    qpart = body;
    body.clear();
  }
  if (!body.empty()) v.coeff = Cyclotomic(parse_rational(body));
  if (!qpart.empty()) {
    if (qpart == "q") {
      v.qexp2 = 2;
    } else if (qpart.rfind("q^", 0) == 0) {
      v.qexp2 = 2 * parse_int(qpart.substr(2)).get_si();
    } else {
      throw spec_error("bad q-power: '" + qpart + "'");
    }
  }
  return v;
}

// root-of-unity grammar: rational, or [-]z3[^k] / [-]z4[^k]
Cyclotomic parse_unit(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  Cyclotomic c;
  if (body.rfind("z3", 0) == 0 || body.rfind("z4", 0) == 0) {
    c = Cyclotomic::zeta(body[1] == '3' ? 3 : 4);
    if (body.size() > 2) {
      if (body[2] != '^') throw spec_error("bad root of unity: '" + s + "'");
      c = c.power(parse_int(body.substr(3)));
    }
  } else {
    c = Cyclotomic(parse_rational(neg ? s : body));
    neg = false;
  }
  return neg ? -c : c;
}

// ---- printing helpers -----------------------------------------------------

std::string int_str(const Int& x) { return x.get_str(); }

std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + int_str(v[i]);
  return s;
}

std::string class_str(const FgAbelianGroup& q, const Vec& nf) {
  std::string s = vec_str(q.free_part(nf));
  if (!q.torsion().empty()) s += ";" + vec_str(q.torsion_part(nf));
  return s;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_si());
  return a;
}

std::string pi0_str(const std::vector<Int>& tor) {
  if (tor.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < tor.size(); ++i)
    s += (i ? " × " : "") + std::string("ℤ/") + int_str(tor[i]);
  return s;
}

// "C2+GL1^1 (dual)" -> "C_2 (dual)": drop central tori, space out the ranks
std::string pretty_type(const std::string& folded_type) {
  std::string body = folded_type, suffix;
  auto sp = body.find(' ');
  if (sp != std::string::npos) {
    suffix = body.substr(sp);
    body = body.substr(0, sp);
  }
  std::string out;
  for (const auto& part : split(body, '+')) {
    if (part.rfind("GL1^", 0) == 0) continue;
    std::size_t i = 0;
    while (i < part.size() && std::isalpha(static_cast<unsigned char>(part[i])))
      ++i;
    if (!out.empty()) out += " + ";
    out += part.substr(0, i) + "_" + part.substr(i);
  }
  if (out.empty()) out = "GL1";
  return out + suffix;
}

// ---- fold assembly --------------------------------------------------------

struct FoldSpec {
  std::string datum;
  std::string automorphism = "reverse";  // id | reverse | gu
};

struct FoldData {
  RootDatum rd;
  PinnedAutomorphism psi;
  CoinvariantLattice cl;
  EchelonData ech;
};

FoldData assemble(const FoldSpec& spec) {
  FoldData f;
  f.rd = build_root_datum(spec.datum);
  if (spec.automorphism == "id")
    f.psi = pinned_action(f.rd, identity_permutation(f.rd));
  else if (spec.automorphism == "reverse") {
    bool all_gl = true;
    for (const auto& fac : f.rd.factors)
      if (fac.family != Family::GL && fac.family != Family::GL1) all_gl = false;
    f.psi = all_gl ? gl_reversal_action(f.rd)
                   : pinned_action(f.rd, reversal_permutation(f.rd));
  }
  else if (spec.automorphism == "gu")
    f.psi = gu_pinned_action(f.rd);
  else
    throw spec_error("unknown automorphism '" + spec.automorphism +
                     "' (expected id, reverse, or gu)");
  f.cl = coweight_coinvariants(f.rd, f.psi);
  f.ech = fold_fixed_group(f.rd, f.psi, f.cl);
  return f;
}

json fold_header(const FoldSpec& spec, const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["datum"] = spec.datum;
  j["automorphism"] = spec.automorphism;
  return j;
}

// ---- commands -------------------------------------------------------------

Output cmd_dualgroup(const FoldSpec& spec) {
  FoldData f = assemble(spec);
  std::string type = pretty_type(f.ech.folded_type);
  std::string pi0 = pi0_str(f.ech.pi0);

  Output out;
  out.j = fold_header(spec, "dualgroup");
  out.j["folded_type"] = f.ech.folded_type;
  out.j["type"] = type;
  out.j["pi0"] = json::array();
  for (const auto& d : f.ech.pi0) out.j["pi0"].push_back(d.get_si());
  out.j["free_rank"] = f.cl.quotient.free_rank();
  out.j["coroot_classes"] = json::array();
  for (const auto& c : f.cl.coroot_classes)
    out.j["coroot_classes"].push_back(class_str(f.cl.quotient, c.nf));

  std::ostringstream p;
  p << type << ", π₀ = " << pi0 << "\n";
  p << "coinvariants: ℤ^" << f.cl.quotient.free_rank();
  for (const auto& d : f.ech.pi0) p << " × ℤ/" << d;
  p << "\ncoroot classes:";
  for (const auto& c : f.cl.coroot_classes)
    p << " (" << class_str(f.cl.quotient, c.nf) << ")";
  p << "\n";
  out.pretty = p.str();

  std::ostringstream t;
  t << "type\t" << type << "\npi0\t" << pi0 << "\nfree_rank\t"
    << f.cl.quotient.free_rank() << "\n";
  out.tsv = t.str();
  return out;
}

Output cmd_branch(const FoldSpec& spec, const std::string& hw) {
  FoldData f = assemble(spec);
  Vec mu = parse_csv(hw);
  if (mu.size() != f.rd.rank)
    throw spec_error("highest weight needs " + std::to_string(f.rd.rank) +
                     " ambient coordinates");
  BranchingResult br = branch(f.ech, f.cl, f.rd, mu);

  Output out;
  out.j = fold_header(spec, "branch");
  out.j["highest_weight"] = vec_json(mu);
  out.j["summands"] = json::array();
  std::ostringstream p, t;
  p << "branching of (" << vec_str(mu) << "):\n";
  t << "class\tmultiplicity\tdim\n";
  for (const auto& [w, m] : br.summands) {
    Int dim = irreducible_character(f.ech, f.cl, w).dimension;
    json row;
    row["class"] = class_str(f.cl.quotient, w);
    row["multiplicity"] = m.get_si();
    row["dim"] = dim.get_si();
    out.j["summands"].push_back(row);
    p << "  (" << class_str(f.cl.quotient, w) << ")  x" << m << "  dim " << dim
      << "\n";
    t << class_str(f.cl.quotient, w) << "\t" << m << "\t" << dim << "\n";
  }
  out.pretty = p.str();
  out.tsv = t.str();
  return out;
}

Output cmd_kato(const FoldSpec& spec, const std::string& hw,
                const std::string& wt) {
  FoldData f = assemble(spec);
  Vec lam = parse_class(hw, f.cl.quotient);
  Vec mu = parse_class(wt, f.cl.quotient);
  QPolynomial k;
  if (f.cl.quotient.torsion_part(lam) == f.cl.quotient.torsion_part(mu))
    k = kato_lusztig_poly(f.ech.folded, f.cl.quotient.free_part(lam),
                          f.cl.quotient.free_part(mu));
  Output out;
  out.j = fold_header(spec, "kato");
  out.j["highest_weight"] = class_str(f.cl.quotient, lam);
  out.j["weight"] = class_str(f.cl.quotient, mu);
  out.j["polynomial"] = k.to_string();
  out.pretty = k.to_string() + "\n";
  out.tsv = "polynomial\t" + k.to_string() + "\n";
  return out;
}

Output cmd_stalks(const FoldSpec& spec, const std::string& hw) {
  FoldData f = assemble(spec);
  Vec lam = parse_class(hw, f.cl.quotient);
  StalkTable st = ic_stalk_table(f.ech, f.cl, lam);

  Output out;
  out.j = fold_header(spec, "stalks");
  out.j["label"] = class_str(f.cl.quotient, st.ic_label);
  out.j["pairing"] = st.ic_pairing.get_si();
  out.j["rows"] = json::array();
  std::ostringstream p, t;
  p << "IC(" << class_str(f.cl.quotient, st.ic_label) << "), (2rho, label) = "
    << st.ic_pairing << "\n";
  t << "stratum\tpairing\tpolynomial\tdimensions\n";
  for (const auto& row : st.rows) {
    json r;
    r["stratum"] = class_str(f.cl.quotient, row.stratum);
    r["pairing"] = row.pairing.get_si();
    r["polynomial"] = row.poly.to_string();
    r["dimensions"] = json::object();
    std::string dims;
    for (const auto& [deg, d] : row.dimensions) {
      r["dimensions"][std::to_string(deg)] = d.get_si();
      if (!dims.empty()) dims += " ";
      dims += std::to_string(deg) + ":" + int_str(d);
    }
    out.j["rows"].push_back(r);
    p << "  (" << class_str(f.cl.quotient, row.stratum) << ")  dim "
      << row.pairing << "  P = " << row.poly.to_string() << "  stalks " << dims
      << "\n";
    t << class_str(f.cl.quotient, row.stratum) << "\t" << row.pairing << "\t"
      << row.poly.to_string() << "\t" << dims << "\n";
  }
  out.pretty = p.str();
  out.tsv = t.str();
  return out;
}

Output cmd_localmodel(std::size_t n, std::size_t r, std::size_t s,
                      const std::string& parahoric) {
  GUSetup g = build_gu_data(n);
  NearbyCycleReport rep = nearby_cycle_decomposition(g, r, s);

  Output out;
  out.j["schema_version"] = kSchemaVersion;
  out.j["command"] = "localmodel";
  out.j["n"] = rep.n;
  out.j["r"] = rep.r;
  out.j["s"] = rep.s;
  out.j["parahoric"] = parahoric;
  out.j["summands"] = json::array();
  for (const auto& sm : rep.summands) {
    json x;
    x["weight"] = vec_json(sm.weight);
    x["dim"] = sm.dim.get_si();
    x["inertia"] = inertia_name(sm.inertia);
    out.j["summands"].push_back(x);
  }
  out.j["strata"] = json::array();
  for (const auto& st : rep.trace_table) {
    json x;
    x["weight"] = vec_json(st.weight);
    x["dim_flag"] = st.dim.get_si();
    x["z_value"] = st.z_value.to_string();
    out.j["strata"].push_back(x);
  }
  out.j["monodromy_trivial"] = rep.monodromy_trivial;

  std::ostringstream p, t;
  p << "GU(" << n << "), signature (" << r << "," << s << "), parahoric "
    << parahoric << "\n";
  p << "summands:\n";
  for (const auto& sm : rep.summands)
    p << "  (" << vec_str(sm.weight) << ")  dim " << sm.dim << "  "
      << inertia_name(sm.inertia) << "\n";
  p << "monodromy trivial: " << (rep.monodromy_trivial ? "yes" : "no") << "\n";
  p << "normalized traces:\n";
  for (const auto& st : rep.trace_table)
    p << "  (" << vec_str(st.weight) << ")  stratum dim " << st.dim << "  z = "
      << st.z_value.to_string() << "\n";
  out.pretty = p.str();

  t << "weight\tdim\tinertia\n";
  for (const auto& sm : rep.summands)
    t << vec_str(sm.weight) << "\t" << sm.dim << "\t"
      << inertia_name(sm.inertia) << "\n";
  out.tsv = t.str();
  return out;
}

Output cmd_satake_eval(const FoldSpec& spec, const std::string& hw,
                       const std::string& free_vals,
                       const std::string& torsion_vals) {
  FoldData f = assemble(spec);
  Vec mu = parse_csv(hw);
  if (mu.size() != f.rd.rank)
    throw spec_error("highest weight needs " + std::to_string(f.rd.rank) +
                     " ambient coordinates");
  SatakeParameter param;
  if (!free_vals.empty())
    for (const auto& s : split(free_vals, ','))
      param.free_values.push_back(parse_param_value(s));
  if (!torsion_vals.empty())
    for (const auto& s : split(torsion_vals, ','))
      param.torsion_values.push_back(parse_unit(s));
  validate_parameter(f.cl, param);

  EchelonCharacter ch = irreducible_character(f.ech, f.cl, f.cl.project(mu));
  CycPoly value = eval_character(f.cl, ch, param);

  Output out;
  out.j = fold_header(spec, "satake-eval");
  out.j["highest_weight"] = vec_json(mu);
  out.j["dim"] = ch.dimension.get_si();
  out.j["value"] = value.to_string();
  out.pretty = value.to_string() + "\n";
  out.tsv = "dim\t" + ch.dimension.get_str() + "\nvalue\t" + value.to_string() +
            "\n";
  return out;
}

// ---- output and caching ---------------------------------------------------

std::string render(const Output& out, const std::string& format) {
  if (format == "json") return out.j.dump(2) + "\n";
  if (format == "tsv") return out.tsv;
  return out.pretty;
}

void memoize(const RunConfig& cfg, const std::string& key,
             const std::string& body) {
  if (cfg.cache_dir.empty()) return;
  // pure memo: written for inspection, never read back
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
  std::error_code ec;
  std::filesystem::create_directories(cfg.cache_dir, ec);
  if (ec) return;
  std::ostringstream name;
  name << std::hex << h;
  std::ofstream(cfg.cache_dir + "/" + name.str() + ".txt") << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Satake combinatorics for folded root data"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("SATKIT_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--format", cfg.format, "output format: json | tsv | pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--cache-dir", cfg.cache_dir,
                 "directory for memoized reports (env SATKIT_CACHE_DIR)");

  FoldSpec spec;
  std::string hw, wt, free_vals, torsion_vals, parahoric = "v0";
  std::size_t n = 0, r = 0, s = 0;

  auto add_fold_options = [&](CLI::App* c) {
    c->add_option("--datum", spec.datum, "root datum name, e.g. GL4 or GL4xGL1")
        ->required();
    c->add_option("--auto", spec.automorphism,
                  "pinned automorphism: id | reverse | gu");
  };

  CLI::App* dualgroup = app.add_subcommand(
      "dualgroup", "identity component and pi0 of the fixed dual group");
  add_fold_options(dualgroup);

  CLI::App* branch_cmd = app.add_subcommand(
      "branch", "decompose an irreducible under the fixed dual group");
  add_fold_options(branch_cmd);
  branch_cmd->add_option("--hw", hw, "ambient highest weight, e.g. 1,1,0,0")
      ->required();

  CLI::App* kato = app.add_subcommand(
      "kato", "Lusztig q-analog for a pair of dominant classes");
  add_fold_options(kato);
  kato->add_option("--hw", hw, "dominant class, free;torsion form")->required();
  kato->add_option("--wt", wt, "dominant class, free;torsion form")->required();

  CLI::App* stalks = app.add_subcommand(
      "stalks", "IC stalk table over the closure strata of an orbit");
  add_fold_options(stalks);
  stalks->add_option("--hw", hw, "dominant class, free;torsion form")
      ->required();

  CLI::App* localmodel = app.add_subcommand(
      "localmodel", "nearby-cycle report for a unitary similitude group");
  localmodel->add_option("--n", n, "hermitian space dimension")->required();
  localmodel->add_option("--r", r, "signature part r")->required();
  localmodel->add_option("--s", s, "signature part s")->required();
  localmodel->add_option("--parahoric", parahoric,
                         "parahoric label carried into the report")
      ->check(CLI::IsMember({"v0", "v1"}));

  CLI::App* satake_eval = app.add_subcommand(
      "satake-eval", "evaluate an irreducible character at a parameter");
  add_fold_options(satake_eval);
  satake_eval->add_option("--hw", hw, "ambient highest weight")->required();
  satake_eval->add_option("--free", free_vals,
                          "free generator values, e.g. 3,1/3 or q^1*2");
  satake_eval->add_option("--torsion", torsion_vals,
                          "torsion generator values, e.g. -1 or z3^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (dualgroup->parsed()) out = cmd_dualgroup(spec);
    else if (branch_cmd->parsed()) out = cmd_branch(spec, hw);
    else if (kato->parsed()) out = cmd_kato(spec, hw, wt);
    else if (stalks->parsed()) out = cmd_stalks(spec, hw);
    else if (localmodel->parsed()) out = cmd_localmodel(n, r, s, parahoric);
    else out = cmd_satake_eval(spec, hw, free_vals, torsion_vals);

    std::string body = render(out, cfg.format);
    std::string key;
    for (int i = 1; i < argc; ++i) key += std::string(argv[i]) + "\x1f";
    memoize(cfg, key, body);
    std::cout << body;
    return 0;
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const computation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
