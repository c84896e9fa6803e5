// edval: essential-dimension computations for sums of symbols over valued fields.
//
// Exit codes: 0 success, 1 sweep failure, 2 parse/usage error,
// 3 contract violation, 4 internal error (a proven bound was contradicted).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edval/claims.hpp"
#include "edval/edcore.hpp"
#include "edval/error.hpp"
#include "edval/json_io.hpp"
#include "edval/sweep.hpp"
#include "edval/symcalc.hpp"

namespace {

using namespace edval;

constexpr int kExitSweepFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitContract = 3;
constexpr int kExitInternal = 4;

struct InputOptions {
  std::string text;
  std::string file;
  std::size_t rank = 0;
  bool json = false;
  bool henselian = false;
};

std::size_t max_rank() {
  const char* env = std::getenv("EDVAL_MAX_RANK");
  if (env == nullptr || *env == '\0') return 12;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw ContractError(std::string("EDVAL_MAX_RANK is not a number: ") + env);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  std::string out, line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line + '\n';
  }
  return out;
}

SymbolClass load_class(const InputOptions& in) {
  if (in.text.empty() == in.file.empty())
    throw ContractError("give exactly one of an inline class or --file");
  SymbolClass c = parse_class(in.file.empty() ? in.text : read_file(in.file));
  if (in.rank != 0) c.set_rank(in.rank);
  const std::size_t limit = max_rank();
  if (c.rank() > limit)
    throw ContractError("rank " + std::to_string(c.rank()) + " exceeds EDVAL_MAX_RANK=" + std::to_string(limit));
  return c;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("class", in.text, "Class text, e.g. \"(t0,t1)_2 + (t2,t3)_2\"");
  cmd->add_option("-f,--file", in.file, "Read the class from a file ('#' starts a comment line)");
  cmd->add_option("--rank", in.rank, "Embed the class in Z^rank");
  cmd->add_flag("--json", in.json, "Emit JSON");
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

std::string group_text(const FiniteAbelianP& g) {
  if (g.invariant_factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i)
    out += (i ? " + Z/" : "Z/") + to_string(g.invariant_factors[i]);
  return out;
}

void print_rows(std::ostream& os, const std::vector<IntVector>& rows, const std::string& indent) {
  if (rows.empty()) os << indent << "(none)\n";
  for (const auto& r : rows) os << indent << "[" << join(r, ", ") << "]\n";
}

int cmd_ed(const InputOptions& in) {
  SymbolClass c = load_class(in);
  EdReport rep = ed_report(c, in.henselian);
  if (in.json) {
    std::cout << report_to_json(rep).dump() << '\n';
    return 0;
  }
  std::cout << "class:          " << render(c) << '\n'
            << "p = " << rep.p << ", rank = " << rep.rank << ", degree = "
            << (rep.degree ? std::to_string(*rep.degree) : std::string("mixed")) << '\n'
            << "A_omega:        " << group_text(rep.a_omega) << '\n'
            << "rho:            " << rep.rho << '\n';
  if (rep.exact)
    std::cout << "ed = rho = " << rep.rho << " exactly\n";
  else
    std::cout << "ed >= " << rep.rho << " (lower bound: unit slot scalars make the class non-monomial;"
              << " pass --henselian over a strictly Henselian field)\n";
  std::cout << "classification: " << to_string(rep.classification) << '\n' << "witness basis:\n";
  print_rows(std::cout, rep.witness.basis(), "  ");
  if (rep.brauer)
    std::cout << "brauer:         divisors (" << join(rep.brauer->divisors) << "), i0 = " << rep.brauer->i0 << '\n';
  return 0;
}

int cmd_classify(const InputOptions& in) {
  SymbolClass c = load_class(in);
  const Multivector m = wedge_nu(c);
  const Classification cls = c.is_mixed() ? Classification::Mixed : classify(m);
  const std::size_t r = rho(m);
  if (in.json) {
    std::cout << Json{{"classification", to_string(cls)},
                      {"degree", c.degree() ? Json(*c.degree()) : Json(nullptr)},
                      {"rho", r}}
                     .dump()
              << '\n';
  } else {
    std::cout << to_string(cls) << " (rho = " << r << ")\n";
  }
  return 0;
}

int cmd_witness(const InputOptions& in) {
  SymbolClass c = load_class(in);
  const Multivector m = wedge_nu(c);
  Lattice w = witness(m);
  if (in.json) {
    Json rows = Json::array();
    for (const auto& v : w.basis()) rows.push_back(matrix_to_json(IntMatrix::from_rows({v}))[0]);
    std::cout << Json{{"rho", w.rank()}, {"witness", rows}}.dump() << '\n';
  } else {
    std::cout << "witness of rank " << w.rank() << ":\n";
    print_rows(std::cout, w.basis(), "  ");
  }
  return 0;
}

int cmd_brauer(const InputOptions& in) {
  SymbolClass c = load_class(in);
  auto [matrix, level] = brauer_matrix_common_level(c);
  BrauerData b = brauer_i0(matrix, c.p(), level);
  if (in.json) {
    Json factors = Json::array();
    for (const auto& k : b.factors) factors.push_back(int_to_json(k));
    Json divisors = Json::array();
    for (const auto& d : b.divisors) divisors.push_back(to_string(d));
    std::cout << Json{{"M", matrix_to_json(b.matrix)},
                      {"level", level},
                      {"divisors", divisors},
                      {"i0", b.i0},
                      {"factors", factors}}
                     .dump()
              << '\n';
  } else {
    std::cout << "M (level p^" << level << "):\n";
    print_rows(std::cout, b.matrix.row_list(), "  ");
    std::cout << "elementary divisors: (" << join(b.divisors) << ")\n"
              << "i0 = " << b.i0 << ", A_omega factors: (" << join(b.factors) << ")\n";
  }
  return 0;
}

struct ClaimOptions {
  std::size_t n = 0;
  std::size_t d = 0;
  long j = -1;
};

int cmd_check_claim(const ClaimOptions& o) {
  if (o.j >= 0) {
    std::cout << witness_to_json(claim_subset(o.n, o.d, static_cast<std::size_t>(o.j))).dump() << '\n';
    return 0;
  }
  for (std::size_t j = 0; j < o.n; ++j) std::cout << witness_to_json(claim_subset(o.n, o.d, j)).dump() << '\n';
  return 0;
}

struct GenOptions {
  std::string preset;
  std::size_t r = 2;
  std::size_t d = 2;
  std::uint64_t p = 2;
  unsigned n = 1;
  std::size_t nv = 5;
  std::string out;
  bool json = false;
};

SymbolClass generate(const GenOptions& o, const std::string& preset) {
  if (preset == "generic") return gen_generic(o.r, o.d, o.p, o.n);
  if (preset == "block") return gen_block_brauer(o.r, o.p, o.n);
  if (preset == "chain") return gen_chain(o.r, o.p);
  if (preset == "congruence") return gen_congruence(o.nv, o.d < 3 ? 3 : o.d, o.p);
  if (preset == "t1") return gen_chain(3, 2);
  if (preset == "t2") return gen_chain(4, 2);
  throw ContractError("unknown preset '" + preset + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write " + path);
  out << text;
}

int cmd_gen(const GenOptions& o) {
  if (o.preset == "all") {
    if (o.out.empty()) throw ContractError("--preset all needs --out DIRECTORY");
    std::filesystem::create_directories(o.out);
    struct Fixture { const char* file; const char* comment; SymbolClass cls; };
    const Fixture fixtures[] = {
        {"t1.sym", "# E7 torsor T_1 Rost value: (t0) u [(t1,t2) + (t3,t4) + (t5,t6)], ed 7",
         gen_chain(3, 2)},
        {"t2.sym", "# E8 torsor T_2 Rost value: (t0) u [(t1,t2) + ... + (t7,t8)], ed 9", gen_chain(4, 2)},
        {"block.sym", "# tensor product of 3 cyclic algebras at level 4, ed 6", gen_block_brauer(3, 2, 2)},
        {"generic.sym", "# 2 symbols of degree 3 in 6 independent variables, ed 6", gen_generic(2, 3, 3, 1)},
        {"congruence.sym", "# index-sum congruence class, 7 variables, degree 3, ed 7", gen_congruence(7, 3, 2)},
    };
    for (const auto& f : fixtures) {
      const std::string path = (std::filesystem::path(o.out) / f.file).string();
      write_text(path, std::string(f.comment) + '\n' + render(f.cls) + '\n');
      std::cout << path << '\n';
    }
    return 0;
  }
  SymbolClass c = generate(o, o.preset);
  const std::string text = o.json ? class_to_json(c).dump() : render(c);
  if (o.out.empty())
    std::cout << text << '\n';
  else
    write_text(o.out, text + '\n');
  return 0;
}

struct SweepCli {
  std::uint64_t seed = SweepOptions{}.seed;
  int criterion = 0;
  bool serial = false;
  bool json = false;
};

int cmd_sweep(const SweepCli& o) {
  SweepOptions opts;
  opts.seed = o.seed;
  opts.exec = o.serial ? Exec::Serial : Exec::Parallel;
  std::vector<CriterionResult> results;
  if (o.criterion != 0)
    results.push_back(run_criterion(o.criterion, opts));
  else
    results = run_all_criteria(opts);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.json)
      std::cout << Json{{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                        {"detail", r.detail}}
                       .dump()
                << '\n';
    else
      std::cout << format_result_line(r) << '\n';
  }
  return ok ? 0 : kExitSweepFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential dimension of sums of symbols over valued fields"};
  app.require_subcommand(1);

  InputOptions ed_in, classify_in, witness_in, brauer_in;
  auto* ed = app.add_subcommand("ed", "Full report: A_omega, rho, exactness, witness, Brauer data");
  add_input_options(ed, ed_in);
  ed->add_flag("--henselian", ed_in.henselian, "The field is strictly Henselian (every class is monomial)");
  auto* cls = app.add_subcommand("classify", "Zero / Symbol / NonSymbol");
  add_input_options(cls, classify_in);
  auto* wit = app.add_subcommand("witness", "Saturated subgroup W of rank rho carrying the class");
  add_input_options(wit, witness_in);
  auto* br = app.add_subcommand("brauer", "Skew matrix, elementary divisors and i0 of a degree-2 class");
  add_input_options(br, brauer_in);

  ClaimOptions claim;
  auto* cc = app.add_subcommand("check-claim", "Witness sets of d residues mod n summing to 0");
  cc->add_option("--n", claim.n, "Modulus n")->required();
  cc->add_option("--d", claim.d, "Set size d")->required();
  cc->add_option("--j", claim.j, "Only this residue");

  GenOptions gen;
  auto* gn = app.add_subcommand("gen", "Generate example classes");
  gn->add_option("--preset", gen.preset, "generic | block | chain | congruence | t1 | t2 | all")->required();
  gn->add_option("--r", gen.r, "Number of terms");
  gn->add_option("--d", gen.d, "Degree");
  gn->add_option("--p", gen.p, "Prime");
  gn->add_option("--n", gen.n, "Level exponent");
  gn->add_option("--nv", gen.nv, "Number of variables (congruence)");
  gn->add_option("--out", gen.out, "Output file (directory for --preset all)");
  gn->add_flag("--json", gen.json, "Emit the JSON mirror instead of text");

  SweepCli sweep;
  auto* sw = app.add_subcommand("sweep", "Run the acceptance sweeps and print a pass/fail table");
  sw->add_option("--seed", sweep.seed, "Seed for the randomized corpora");
  sw->add_option("--criterion", sweep.criterion, "Run a single criterion (1-11)");
  sw->add_flag("--serial", sweep.serial, "Use the serial reference kernels");
  sw->add_flag("--json", sweep.json, "One JSON line per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*ed) return cmd_ed(ed_in);
    if (*cls) return cmd_classify(classify_in);
    if (*wit) return cmd_witness(witness_in);
    if (*br) return cmd_brauer(brauer_in);
    if (*cc) return cmd_check_claim(claim);
    if (*gn) return cmd_gen(gen);
    if (*sw) return cmd_sweep(sweep);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitParse;
}
