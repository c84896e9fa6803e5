#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edval/bigint.hpp"
#include "edval/exec.hpp"
#include "edval/extalg.hpp"

namespace edval {

/// One slot of a symbol: scalar * t_0^{v_0} * ... * t_{r-1}^{v_{r-1}}.
struct Slot {
  IntVector valuation;
  Int scalar = 1;

  /// The slot carries a scalar other than +-1.
  bool has_unit() const { return scalar != 1 && scalar != -1; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// weight * (a_1, ..., a_d)_{p^n}
struct SymbolTerm {
  unsigned n = 1;
  Int weight = 1;
  std::vector<Slot> slots;
  friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};

class SymbolClass {
 public:
  SymbolClass(std::uint64_t p, std::size_t rank) : p_(p), rank_(rank) {}

  std::uint64_t p() const { return p_; }
  std::size_t rank() const { return rank_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }

  /// Validates slot lengths against the rank and the weight/scalar contracts.
  void add_term(SymbolTerm term);
  /// Embeds the class into Z^rank (rank must cover every variable in use).
  void set_rank(std::size_t rank);
  /// 1 + the largest variable index with a nonzero exponent (0 if none).
  std::size_t min_rank() const;

  /// Common slot count, or nullopt for mixed-degree (or empty) classes.
  std::optional<std::size_t> degree() const;
  bool is_mixed() const { return !terms_.empty() && !degree(); }
  /// Common level n, or nullopt when levels differ (or no terms).
  std::optional<unsigned> level() const;
  unsigned max_level() const;
  bool has_units() const;

  friend bool operator==(const SymbolClass&, const SymbolClass&) = default;

 private:
  std::uint64_t p_;
  std::size_t rank_;
  std::vector<SymbolTerm> terms_;
};

/// Parses the linear symbol notation, e.g. "rank 5; (t0, t1)_4 + 3*(t2^2*t3, 5*t4)_4".
/// Throws ParseError with the offending position.
SymbolClass parse_class(std::string_view text);
/// Canonical text form; parse_class(render(c)) == c.
std::string render(const SymbolClass& c);

/// Sum over terms of weight * (1/p^n) (x) v(a_1) ^ ... ^ v(a_d).
Multivector wedge_nu(const SymbolClass& c, Exec exec = Exec::Parallel);

/// sum_{i<r} (t_{id}, ..., t_{id+d-1})_{p^n}
SymbolClass gen_generic(std::size_t r, std::size_t d, std::uint64_t p, unsigned n);
/// (t0,t1)_{p^n} + (t2,t3)_{p^n} + ... with r terms
SymbolClass gen_block_brauer(std::size_t r, std::uint64_t p, unsigned n);
/// (t0) u [(t1,t2) + ... + (t_{2r-1},t_{2r})] at level p
SymbolClass gen_chain(std::size_t r, std::uint64_t p);
/// Sum over increasing d-tuples in {0..nv-1} with index sum = 0 mod nv.
SymbolClass gen_congruence(std::size_t nv, std::size_t d, std::uint64_t p);

}  // namespace edval
