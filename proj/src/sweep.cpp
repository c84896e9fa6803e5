#include "edval/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "edval/claims.hpp"
#include "edval/edcore.hpp"
#include "edval/error.hpp"
#include "edval/random.hpp"
#include "edval/symcalc.hpp"

namespace edval {

namespace {

constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kLatticesPerCorpus = 100;

// Runs `count` independent cases; each returns an empty string on success or
// a failure description. Results are reported in case order.
template <typename CaseFn>
std::pair<std::size_t, std::string> run_cases(std::size_t count, [[maybe_unused]] Exec exec, CaseFn&& fn) {
  std::vector<std::string> failures(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    try {
      failures[idx] = fn(idx);
    } catch (const std::exception& e) {
      failures[idx] = std::string("exception: ") + e.what();
    }
  }
  std::size_t failed = 0;
  std::string first;
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i].empty()) continue;
    if (failed++ == 0) first = "case " + std::to_string(i) + ": " + failures[i];
  }
  return {failed, first};
}

CriterionResult finish(int id, std::string name, std::size_t cases,
                       const std::pair<std::size_t, std::string>& outcome) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.cases = cases;
  r.passed = outcome.first == 0;
  r.detail = r.passed ? "0 failures" : std::to_string(outcome.first) + " failures; " + outcome.second;
  return r;
}

std::string join(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

// ---- corpora ---------------------------------------------------------------

SymbolClass degree_two_case(std::uint64_t seed, std::size_t index) {
  Rng rng = Rng::for_case(seed, index);
  RandomClassShape shape;
  shape.degree = 2;
  shape.entry_bound = rng.pick(std::vector<std::int64_t>{1, 2, 9});
  return random_class(rng, shape);
}

SymbolClass gap_case(std::uint64_t seed, std::size_t index) {
  Rng rng = Rng::for_case(seed ^ 0x6a09e667f3bcc909ULL, index);
  RandomClassShape shape;
  shape.degree = static_cast<std::size_t>(rng.uniform(2, 3));
  shape.entry_bound = rng.pick(std::vector<std::int64_t>{1, 2, 9});
  return random_class(rng, shape);
}

// ---- criteria --------------------------------------------------------------

CriterionResult rd_variables(const SweepOptions& o) {
  struct Case { std::size_t r, d; std::uint64_t p; unsigned n; };
  std::vector<Case> cases;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint64_t p : {2, 3})
        for (unsigned n = 1; n <= 2; ++n) cases.push_back({r, d, p, n});
  auto start = std::chrono::steady_clock::now();
  auto outcome = run_cases(cases.size(), o.exec, [&](std::size_t i) -> std::string {
    const Case& c = cases[i];
    EdReport rep = ed_report(gen_generic(c.r, c.d, c.p, c.n), false, Exec::Serial);
    const Int pn = ipow(Int(c.p), c.n);
    bool factors_ok = true;
    for (const auto& k : rep.a_omega.invariant_factors) factors_ok = factors_ok && k == pn;
    if (rep.rho != c.r * c.d || !rep.exact || !factors_ok)
      return "gen_generic(" + std::to_string(c.r) + "," + std::to_string(c.d) + "," + std::to_string(c.p) +
             "," + std::to_string(c.n) + ") rho=" + std::to_string(rep.rho) + " factors=" +
             join(rep.a_omega.invariant_factors);
    return {};
  });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) {
    outcome.first += 1;
    outcome.second = "runtime " + std::to_string(secs) + " s exceeds 1 s";
  }
  return finish(1, "rd-variables family: rho = r*d, exact, factors p^n", cases.size(), outcome);
}

CriterionResult block_brauer(const SweepOptions& o) {
  struct Case { std::size_t r; std::uint64_t p; unsigned n; };
  std::vector<Case> cases;
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::uint64_t p : {2, 3})
      for (unsigned n = 1; n <= 3; ++n) cases.push_back({r, p, n});
  auto outcome = run_cases(cases.size(), o.exec, [&](std::size_t i) -> std::string {
    const Case& c = cases[i];
    EdReport rep = ed_report(gen_block_brauer(c.r, c.p, c.n), false, Exec::Serial);
    if (!rep.brauer) return "missing Brauer block";
    for (const auto& d : rep.brauer->divisors)
      if (d != 1) return "divisor " + to_string(d) + " != 1";
    if (rep.brauer->divisors.size() != 2 * c.r || rep.brauer->i0 != 2 * c.r || rep.rho != 2 * c.r)
      return "r=" + std::to_string(c.r) + " i0=" + std::to_string(rep.brauer->i0) + " rho=" + std::to_string(rep.rho);
    return {};
  });
  return finish(2, "block Brauer example: divisors 1, i0 = rho = 2r", cases.size(), outcome);
}

CriterionResult chain_classes(const SweepOptions& o) {
  auto outcome = run_cases(4, o.exec, [&](std::size_t i) -> std::string {
    const std::size_t r = i + 1;
    EdReport rep = ed_report(gen_chain(r, 2), false, Exec::Serial);
    if (rep.rho != 2 * r + 1 || !rep.exact) return "r=" + std::to_string(r) + " rho=" + std::to_string(rep.rho);
    if (r == 3 && rep.rho != 7) return "T_1 class rho " + std::to_string(rep.rho) + " != 7";
    if (r == 4 && rep.rho != 9) return "T_2 class rho " + std::to_string(rep.rho) + " != 9";
    return {};
  });
  return finish(3, "chain classes: rho = 2r+1 (T_1 -> 7, T_2 -> 9)", 4, outcome);
}

CriterionResult degree_two_oracle(const SweepOptions& o) {
  auto outcome = run_cases(kCorpusSize, o.exec, [&](std::size_t i) -> std::string {
    SymbolClass c = degree_two_case(o.seed, i);
    const Multivector m = wedge_nu(c, Exec::Serial);
    FiniteAbelianP group = a_omega(m, Exec::Serial);
    BrauerData b = brauer_i0(brauer_matrix(c), c.p(), *c.level());
    if (b.i0 != group.min_generators() || b.factors != group.invariant_factors)
      return render(c) + ": brauer i0=" + std::to_string(b.i0) + " factors=" + join(b.factors) +
             " vs contraction rho=" + std::to_string(group.min_generators()) + " factors=" +
             join(group.invariant_factors);
    return {};
  });
  return finish(4, "degree-2 oracle: Brauer i0/factors = contraction rho/factors", kCorpusSize, outcome);
}

CriterionResult parity(const SweepOptions& o) {
  auto outcome = run_cases(kCorpusSize, o.exec, [&](std::size_t i) -> std::string {
    SymbolClass c = degree_two_case(o.seed, i);
    std::size_t r = rho(wedge_nu(c, Exec::Serial), Exec::Serial);
    if (r % 2 != 0) return render(c) + ": odd rho " + std::to_string(r);
    return {};
  });
  return finish(5, "parity: rho even for degree-2 classes", kCorpusSize, outcome);
}

CriterionResult gap(const SweepOptions& o) {
  auto outcome = run_cases(kCorpusSize, o.exec, [&](std::size_t i) -> std::string {
    SymbolClass c = gap_case(o.seed, i);
    const std::size_t d = *c.degree();
    const Multivector m = wedge_nu(c, Exec::Serial);
    const std::size_t r = rho(m, Exec::Serial);
    if ((r == 0) != m.is_zero()) return render(c) + ": rho=0 disagrees with m=0";
    if ((r >= 1 && r < d) || r == d + 1) return render(c) + ": rho " + std::to_string(r) + " in forbidden set";
    return {};
  });
  return finish(6, "gap: rho not in {1..d-1, d+1}", kCorpusSize, outcome);
}

// Random lattices around a witness: supersets, sub-spans and unrelated ones.
Lattice random_lattice_near(Rng& rng, const Lattice& wit, std::size_t rank) {
  std::vector<IntVector> gens;
  switch (rng.uniform(0, 2)) {
    case 0:  // superset, rows scaled and re-mixed
      for (const auto& b : wit.basis()) {
        Int s = rng.uniform(1, 3) * (rng.coin() ? 1 : -1);
        IntVector v = b;
        for (auto& x : v) x *= s;
        gens.push_back(std::move(v));
      }
      for (std::int64_t k = rng.uniform(0, 2); k > 0; --k) gens.push_back(random_vector(rng, rank, 4));
      break;
    case 1: {  // sub-span of the witness of rank <= rho, plus noise
      const auto keep = rng.uniform(0, static_cast<std::int64_t>(wit.rank()));
      for (std::int64_t k = 0; k < keep; ++k) {
        IntVector v(rank);
        for (const auto& b : wit.basis()) {
          Int s = rng.uniform(-2, 2);
          for (std::size_t j = 0; j < rank; ++j) v[j] += s * b[j];
        }
        gens.push_back(std::move(v));
      }
      break;
    }
    default:
      for (std::int64_t k = rng.uniform(0, static_cast<std::int64_t>(rank)); k > 0; --k)
        gens.push_back(random_vector(rng, rank, 3));
      break;
  }
  Lattice w = Lattice::span(rank, gens);
  if (w.rank() == 0) return w;
  IntMatrix mixed = IntMatrix::from_rows(w.basis()) * random_unimodular(rng, rank);
  return Lattice(rank, mixed.row_list());
}

std::string witness_checks(const std::function<SymbolClass(std::size_t)>& make, std::size_t index) {
  SymbolClass c = make(index);
  const Multivector m = wedge_nu(c, Exec::Serial);
  FiniteAbelianP group = a_omega(m, Exec::Serial);
  Lattice wit = witness_from_group(group, c.rank());
  if (wit.rank() != group.min_generators()) return render(c) + ": witness rank != rho";
  if (!membership(m, wit)) return render(c) + ": witness fails membership";
  return {};
}

CriterionResult witness_soundness(const SweepOptions& o) {
  std::function<SymbolClass(std::size_t)> corpora[2] = {
      [&](std::size_t i) { return degree_two_case(o.seed, i); },
      [&](std::size_t i) { return gap_case(o.seed, i); }};
  std::size_t total_failed = 0;
  std::string first;
  std::size_t cases = 0;
  for (int k = 0; k < 2; ++k) {
    auto outcome = run_cases(kCorpusSize, o.exec,
                             [&](std::size_t i) { return witness_checks(corpora[k], i); });
    cases += kCorpusSize;
    if (outcome.first && first.empty()) first = std::string(k == 0 ? "corpus 4 " : "corpus 6 ") + outcome.second;
    total_failed += outcome.first;

    // Minimality: every random W with membership true has rank >= rho.
    auto lattices = run_cases(kLatticesPerCorpus, o.exec, [&](std::size_t i) -> std::string {
      Rng rng = Rng::for_case(o.seed ^ 0xbb67ae8584caa73bULL ^ static_cast<std::uint64_t>(k), i);
      for (int attempt = 0; attempt < 400; ++attempt) {
        SymbolClass c = corpora[k](static_cast<std::size_t>(rng.uniform(0, kCorpusSize - 1)));
        const Multivector m = wedge_nu(c, Exec::Serial);
        FiniteAbelianP group = a_omega(m, Exec::Serial);
        Lattice wit = witness_from_group(group, c.rank());
        Lattice w = random_lattice_near(rng, wit, c.rank());
        if (!membership(m, w)) continue;
        if (w.rank() < group.min_generators())
          return render(c) + ": lattice of rank " + std::to_string(w.rank()) + " contains m but rho=" +
                 std::to_string(group.min_generators());
        return {};
      }
      return "no lattice with membership found in 400 attempts";
    });
    cases += kLatticesPerCorpus;
    if (lattices.first && first.empty()) first = "lattices " + lattices.second;
    total_failed += lattices.first;
  }
  return finish(7, "witness soundness and minimality", cases, {total_failed, first});
}

std::string check_smith(const IntMatrix& m) {
  SmithForm s = smith(m);
  if (s.U * m * s.V != s.D) return "U*M*V != D";
  if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return "U or V not unimodular";
  const std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return "D not diagonal";
  for (std::size_t i = 0; i < diag; ++i) {
    if (s.D(i, i) < 0) return "negative divisor";
    if (i + 1 < diag) {
      const Int& a = s.D(i, i);
      const Int& b = s.D(i + 1, i + 1);
      if (a == 0 ? b != 0 : b % a != 0) return "divisibility chain broken";
    }
  }
  if (m.rows() <= 5 && m.cols() <= 5 && elementary_divisors(m) != minors_gcd_divisors(m))
    return "disagrees with minors-gcd oracle";
  return {};
}

CriterionResult smith_contract(const SweepOptions& o) {
  auto outcome = run_cases(kCorpusSize, o.exec, [&](std::size_t i) -> std::string {
    Rng rng = Rng::for_case(o.seed ^ 0x3c6ef372fe94f82bULL, i);
    auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix m = random_matrix(rng, rows, cols, 20);
    if (rng.uniform(0, 2) == 0) {
      // low-rank product, rescaled back into [-20, 20]
      auto inner = static_cast<std::size_t>(rng.uniform(1, 3));
      m = random_matrix(rng, rows, inner, 4) * random_matrix(rng, inner, cols, 1);
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < cols; ++b) m(a, b) = std::clamp(m(a, b), Int(-20), Int(20));
    }
    std::string err = check_smith(m);
    return err.empty() ? err : std::to_string(rows) + "x" + std::to_string(cols) + ": " + err;
  });
  return finish(8, "Smith normal form contract and minors-gcd agreement", kCorpusSize, outcome);
}

CriterionResult combinatorial_claim(const SweepOptions& o) {
  struct Case { std::size_t n, d; };
  std::vector<Case> cases;
  for (std::size_t d = 3; d <= 6; ++d)
    for (std::size_t n = d + 2; n <= 12; ++n) cases.push_back({n, d});
  auto outcome = run_cases(cases.size(), o.exec, [&](std::size_t i) -> std::string {
    for (std::size_t j = 0; j < cases[i].n; ++j)
      if (!is_valid_witness(claim_subset(cases[i].n, cases[i].d, j)))
        return "invalid witness for n=" + std::to_string(cases[i].n) + " d=" + std::to_string(cases[i].d);
    return {};
  });
  auto congruence = run_cases(5, o.exec, [&](std::size_t i) -> std::string {
    const std::size_t nv = 5 + i;
    std::size_t r = rho(wedge_nu(gen_congruence(nv, 3, 2), Exec::Serial), Exec::Serial);
    if (r != nv) return "gen_congruence(" + std::to_string(nv) + ",3,2) rho=" + std::to_string(r);
    return {};
  });
  if (congruence.first) {
    if (outcome.first == 0) outcome.second = congruence.second;
    outcome.first += congruence.first;
  }
  return finish(9, "subset claim sweep and congruence classes rho = nv", cases.size() + 5, outcome);
}

CriterionResult prime_index(const SweepOptions& o) {
  constexpr std::size_t kInstances = 100;
  auto outcome = run_cases(kInstances, o.exec, [&](std::size_t i) -> std::string {
    Rng rng = Rng::for_case(o.seed ^ 0xa54ff53a5f1d36f1ULL, i);
    const std::uint64_t p = rng.coin() ? 2 : 3;
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto n = static_cast<unsigned>(rng.uniform(1, 2));
    std::vector<Int> d(r);
    for (auto& x : d) {
      std::int64_t v = 0;
      do v = rng.uniform(1, 15);
      while (v % static_cast<std::int64_t>(p) == 0);
      x = v;
    }
    if (!verify_prime_index_iso(d, random_unimodular(rng, r), p, n)) return "isomorphism check failed";
    return {};
  });
  return finish(10, "prime-to-p index isomorphism", kInstances, outcome);
}

CriterionResult split_bound(const SweepOptions& o) {
  constexpr std::size_t kPairs = 50;
  auto outcome = run_cases(kPairs + 2, o.exec, [&](std::size_t i) -> std::string {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::size_t r = 0;
    std::optional<Multivector> m;
    Overlattice gp{Lattice(0), 0};
    if (i == 0) {
      // 1/p e0^e1 killed by <e0/p, e1>, index p
      p = 2, n = 1, r = 2;
      m = mv_wedge_vectors(p, PCoeff::unit_fraction(p, 1), {{1, 0}, {0, 1}}, r);
      gp = Overlattice{Lattice(r, {{1, 0}, {0, 2}}), 1};
    } else if (i == 1) {
      // two disjoint copies: rho 4 with index p^2
      p = 3, n = 2, r = 4;
      m = mv_wedge_vectors(p, PCoeff::unit_fraction(p, 1), {{1, 0, 0, 0}, {0, 1, 0, 0}}, r) +
          mv_wedge_vectors(p, PCoeff::unit_fraction(p, 1), {{0, 0, 1, 0}, {0, 0, 0, 1}}, r);
      gp = Overlattice{Lattice(r, {{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 3}}), 1};
    } else {
      Rng rng = Rng::for_case(o.seed ^ 0x510e527fade682d1ULL, i);
      p = rng.coin() ? 2 : 3;
      n = static_cast<unsigned>(rng.uniform(1, 3));
      r = static_cast<std::size_t>(rng.uniform(2, 6));
      // Gamma' has basis t_i / d_i with d_i p-powers whose product divides p^n.
      std::vector<unsigned> e(r, 0);
      for (unsigned budget = static_cast<unsigned>(rng.uniform(1, n)); budget > 0; --budget)
        ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(r) - 1))];
      unsigned top = 0;
      for (unsigned x : e) top = std::max(top, x);
      IntMatrix t = random_unimodular(rng, r);
      std::vector<IntVector> rows;
      for (std::size_t a = 0; a < r; ++a) {
        IntVector v = t.row(a);
        for (auto& x : v) x *= ipow(Int(p), top - e[a]);
        rows.push_back(std::move(v));
      }
      gp = Overlattice{Lattice(r, rows), top};
      // m = sum a_ij / (d_i d_j) t_i ^ t_j dies in Gamma'.
      m = Multivector(p, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
          PCoeff c = PCoeff::normalize(p, rng.uniform(0, 8), e[a] + e[b]);
          *m += mv_wedge_vectors(p, c, {t.row(a), t.row(b)}, r);
        }
    }
    SplitBoundOutcome out = split_bound_outcome(*m, gp, p, n);
    if (!out.hypothesis) return "constructed pair does not satisfy the splitting hypothesis";
    if (!out.holds) return "rho " + std::to_string(out.rho) + " > 2n = " + std::to_string(2 * n);
    if (i == 0 && out.rho != 2) return "hand example rho " + std::to_string(out.rho) + " != 2";
    if (i == 1 && out.rho != 4) return "index p^2 example rho " + std::to_string(out.rho) + " != 4";
    return {};
  });
  return finish(11, "split bound: rho <= 2n when split by index p^n", kPairs + 2, outcome);
}

}  // namespace

CriterionResult run_criterion(int id, const SweepOptions& options) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = rd_variables(options); break;
    case 2: r = block_brauer(options); break;
    case 3: r = chain_classes(options); break;
    case 4: r = degree_two_oracle(options); break;
    case 5: r = parity(options); break;
    case 6: r = gap(options); break;
    case 7: r = witness_soundness(options); break;
    case 8: r = smith_contract(options); break;
    case 9: r = combinatorial_claim(options); break;
    case 10: r = prime_index(options); break;
    case 11: r = split_bound(options); break;
    default: throw ContractError("unknown criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all_criteria(const SweepOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", r.seconds);
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " (" << r.cases
     << " cases, " << buf << ") " << r.detail;
  return os.str();
}

}  // namespace edval
