#include "edval/edcore.hpp"

#include <algorithm>

#include "edval/error.hpp"

namespace edval {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "Zero";
    case Classification::Symbol: return "Symbol";
    case Classification::NonSymbol: return "NonSymbol";
    case Classification::Mixed: return "Mixed";
  }
  return "?";
}

std::vector<Multivector> contraction_generators(const Multivector& m, Exec exec) {
  std::vector<Multivector> out;
  for (std::size_t deg : m.degrees()) {
    if (deg == 0) continue;
    const Multivector part = degree_part(m, deg);
    const std::vector<IndexTuple> duals = k_subsets(m.rank(), deg - 1);
    std::vector<std::optional<Multivector>> images(duals.size());
    const auto count = static_cast<std::ptrdiff_t>(duals.size());
    [[maybe_unused]] const bool parallel = exec == Exec::Parallel && duals.size() >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
      // Contraction of a degree-deg part by a (deg-1)-form is pure degree 1.
      images[static_cast<std::size_t>(idx)] = contract_dual(part, duals[static_cast<std::size_t>(idx)]);
    }
    for (auto& img : images)
      if (!img->is_zero()) out.push_back(std::move(*img));
  }
  return out;
}

FiniteAbelianP group_from_generators(std::uint64_t p, std::size_t rank,
                                     const std::vector<Multivector>& gens) {
  FiniteAbelianP group;
  group.p = p;
  unsigned top = 0;
  for (const auto& g : gens) {
    if (g.p() != p || g.rank() != rank) throw ContractError("generator has wrong prime or rank");
    for (const auto& [tuple, c] : g.terms()) {
      if (tuple.size() != 1) throw ContractError("group generators must be degree 1");
      top = std::max(top, c.exp());
    }
  }
  if (top == 0) return group;

  // Rows: numerators over p^top, then p^top * identity for the relations.
  const Int modulus = ipow(Int(p), top);
  IntMatrix rel(gens.size() + rank, rank);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& [tuple, c] : gens[i].terms())
      rel(i, tuple[0]) = c.num() * ipow(Int(p), top - c.exp());
  for (std::size_t j = 0; j < rank; ++j) rel(gens.size() + j, j) = modulus;

  SmithForm s = smith(hermite_rows(rel));
  IntMatrix vinv = inverse_unimodular(s.V);
  // The row lattice is spanned by s_i * w_i with w_i the rows of V^{-1}, so
  // the group is generated by (s_i / p^top) w_i of order k_i = p^top / s_i.
  for (std::size_t i = rank; i-- > 0;) {
    Int k = modulus / s.D(i, i);
    if (k == 1) continue;
    unsigned e = p_valuation(k, p);
    Multivector g(p, rank);
    for (std::size_t j = 0; j < rank; ++j) g.add_term({j}, PCoeff::normalize(p, vinv(i, j), e));
    group.invariant_factors.push_back(k);
    group.generators.push_back(std::move(g));
  }
  return group;
}

FiniteAbelianP a_omega(const Multivector& m, Exec exec) {
  return group_from_generators(m.p(), m.rank(), contraction_generators(m, exec));
}

std::size_t rho(const Multivector& m, Exec exec) { return a_omega(m, exec).min_generators(); }

Lattice witness_from_group(const FiniteAbelianP& group, std::size_t rank) {
  std::vector<IntVector> lifts;
  for (const auto& g : group.generators) {
    unsigned e = 0;
    for (const auto& [tuple, c] : g.terms()) e = std::max(e, c.exp());
    IntVector u(rank);
    for (const auto& [tuple, c] : g.terms()) u[tuple[0]] = c.num() * ipow(Int(group.p), e - c.exp());
    lifts.push_back(std::move(u));
  }
  Lattice spanned = Lattice::span(rank, lifts);
  if (spanned.rank() != lifts.size())
    throw InternalError("lifted generators of A_omega are dependent");
  return saturate(spanned);
}

Lattice witness(const Multivector& m, Exec exec) { return witness_from_group(a_omega(m, exec), m.rank()); }

bool membership(const Multivector& m, const Lattice& w) {
  if (w.ambient_rank() != m.rank()) throw ContractError("lattice and multivector differ in rank");
  if (m.is_zero()) return true;
  Lattice sat = saturate(w);
  Multivector coords = change_basis(m, basis_extend(sat));
  for (const auto& [tuple, c] : coords.terms())
    if (!tuple.empty() && tuple.back() >= sat.rank()) return false;
  return true;
}

Classification classify(const Multivector& m, Exec exec) {
  if (m.is_zero()) return Classification::Zero;
  if (!m.is_homogeneous()) throw ContractError("classification requires homogeneous class");
  const std::size_t d = *m.degrees().begin();
  if (d == 0) throw ContractError("classification requires degree at least 1");
  const std::size_t r = rho(m, exec);
  if (r < d) throw InternalError("nonzero class of degree " + std::to_string(d) + " has rho " + std::to_string(r));
  if (r == d + 1) throw InternalError("rho = d + 1 = " + std::to_string(r) + " for a degree " + std::to_string(d) + " class");
  return r == d ? Classification::Symbol : Classification::NonSymbol;
}

namespace {

void require_degree_two(const SymbolClass& c) {
  if (c.degree() != std::size_t{2}) throw ContractError("Brauer matrix requires a homogeneous degree-2 class");
}

void add_skew(IntMatrix& m, const IntVector& a, const IntVector& b, const Int& scale) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) += scale * (a[i] * b[j] - b[i] * a[j]);
}

}  // namespace

IntMatrix brauer_matrix(const SymbolClass& c) {
  require_degree_two(c);
  if (!c.level()) throw ContractError("Brauer matrix requires a single level across terms");
  IntMatrix m(c.rank(), c.rank());
  for (const auto& t : c.terms()) add_skew(m, t.slots[0].valuation, t.slots[1].valuation, t.weight);
  return m;
}

std::pair<IntMatrix, unsigned> brauer_matrix_common_level(const SymbolClass& c) {
  require_degree_two(c);
  const unsigned top = c.max_level();
  IntMatrix m(c.rank(), c.rank());
  for (const auto& t : c.terms())
    add_skew(m, t.slots[0].valuation, t.slots[1].valuation, t.weight * ipow(Int(c.p()), top - t.n));
  return {std::move(m), top};
}

BrauerData brauer_i0(const IntMatrix& m, std::uint64_t p, unsigned n) {
  if (!m.is_skew_symmetric()) throw ContractError("Brauer matrix must be skew-symmetric");
  if (!is_prime(p)) throw ContractError("non-prime modulus " + std::to_string(p));
  BrauerData out;
  out.matrix = m;
  out.level = n;
  out.divisors = elementary_divisors(m);
  const Int pn = ipow(Int(p), n);
  for (const auto& d : out.divisors) {
    Int k = pn / gcd(pn, d);
    if (k != 1) out.factors.push_back(k);
  }
  std::sort(out.factors.begin(), out.factors.end());
  out.i0 = out.factors.size();
  return out;
}

EdReport ed_report(const SymbolClass& c, bool henselian, Exec exec) {
  EdReport report;
  report.p = c.p();
  report.rank = c.rank();
  report.degree = c.degree();
  const Multivector m = wedge_nu(c, exec);
  report.a_omega = a_omega(m, exec);
  report.rho = report.a_omega.min_generators();
  report.ed_lower_bound = report.rho;
  report.exact = henselian || !c.has_units();
  report.witness = witness_from_group(report.a_omega, c.rank());
  if (c.is_mixed()) {
    report.classification = Classification::Mixed;
  } else {
    report.classification = classify(m, exec);
  }
  if (report.degree == std::size_t{2}) {
    auto [matrix, level] = brauer_matrix_common_level(c);
    report.brauer = brauer_i0(matrix, c.p(), level);
  }
  return report;
}

SplitBoundOutcome split_bound_outcome(const Multivector& m, const Overlattice& gamma_prime,
                                      std::uint64_t p, unsigned n) {
  const std::size_t r = m.rank();
  if (!m.is_zero() && m.degrees() != std::set<std::size_t>{2})
    throw ContractError("split bound applies to degree-2 classes");
  if (gamma_prime.numerators.ambient_rank() != r || gamma_prime.numerators.rank() != r)
    throw ContractError("overlattice must have full rank " + std::to_string(r));

  // Gamma' basis b_i / p^N. Z^r sits inside iff C = p^N B^{-1} is integral,
  // i.e. every elementary divisor of B divides p^N.
  const IntMatrix b = gamma_prime.numerators.basis_matrix();
  const Int scale = ipow(Int(p), gamma_prime.denominator_exp);
  SmithForm s = smith(b);
  IntMatrix scaled_dinv(r, r);
  SplitBoundOutcome out;
  out.index = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const Int& d = s.D(i, i);
    if (scale % d != 0) throw ContractError("overlattice does not contain Z^r");
    scaled_dinv(i, i) = scale / d;
    out.index *= scale / d;
  }
  const Int pn = ipow(Int(p), n);
  if (pn % out.index != 0)
    throw ContractError("overlattice index " + to_string(out.index) + " does not divide p^n");
  // e_i = sum_j C_ij (b_j / p^N) with C = V (p^N D^{-1}) U.
  const IntMatrix coords = s.V * scaled_dinv * s.U;
  out.hypothesis = apply_linear(m, coords).is_zero();
  out.rho = rho(m);
  out.holds = !out.hypothesis || out.rho <= 2 * n;
  return out;
}

bool split_bound_check(const Multivector& m, const Overlattice& gamma_prime, std::uint64_t p,
                       unsigned n) {
  return split_bound_outcome(m, gamma_prime, p, n).holds;
}

}  // namespace edval
