#include "edval/symcalc.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "edval/error.hpp"

namespace edval {

void SymbolClass::add_term(SymbolTerm term) {
  if (term.n < 1) throw ContractError("symbol level must be at least 1");
  if (term.weight == 0) throw ContractError("symbol weight must be nonzero");
  if (term.slots.empty()) throw ContractError("symbol needs at least one slot");
  for (const auto& s : term.slots) {
    if (s.valuation.size() != rank_) throw ContractError("slot valuation has wrong length");
    if (s.scalar == 0) throw ContractError("zero scalar factor");
  }
  terms_.push_back(std::move(term));
}

std::size_t SymbolClass::min_rank() const {
  std::size_t need = 0;
  for (const auto& t : terms_)
    for (const auto& s : t.slots)
      for (std::size_t i = 0; i < s.valuation.size(); ++i)
        if (s.valuation[i] != 0) need = std::max(need, i + 1);
  return need;
}

void SymbolClass::set_rank(std::size_t rank) {
  if (rank < min_rank())
    throw ContractError("rank " + std::to_string(rank) + " is smaller than the " +
                        std::to_string(min_rank()) + " variables in use");
  for (auto& t : terms_)
    for (auto& s : t.slots) s.valuation.resize(rank, Int(0));
  rank_ = rank;
}

std::optional<std::size_t> SymbolClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = terms_.front().slots.size();
  for (const auto& t : terms_)
    if (t.slots.size() != d) return std::nullopt;
  return d;
}

std::optional<unsigned> SymbolClass::level() const {
  if (terms_.empty()) return std::nullopt;
  unsigned n = terms_.front().n;
  for (const auto& t : terms_)
    if (t.n != n) return std::nullopt;
  return n;
}

unsigned SymbolClass::max_level() const {
  unsigned n = 0;
  for (const auto& t : terms_) n = std::max(n, t.n);
  return n;
}

bool SymbolClass::has_units() const {
  for (const auto& t : terms_)
    for (const auto& s : t.slots)
      if (s.has_unit()) return true;
  return false;
}

namespace {

struct ParsedTerm {
  SymbolTerm term;  // slot valuations sized to the largest variable seen so far
  std::uint64_t p;
  std::size_t subscript_pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymbolClass parse() {
    std::optional<std::size_t> declared_rank;
    skip_ws();
    if (text_.substr(pos_, 4) == "rank") {
      pos_ += 4;
      skip_ws();
      declared_rank = static_cast<std::size_t>(parse_unsigned("rank"));
      expect(';');
    }
    std::vector<ParsedTerm> terms;
    terms.push_back(parse_term());
    for (;;) {
      skip_ws();
      if (at_end()) break;
      expect('+');
      terms.push_back(parse_term());
    }

    std::uint64_t p = terms.front().p;
    for (const auto& t : terms)
      if (t.p != p)
        throw ParseError(t.subscript_pos, "mixed primes " + std::to_string(p) + " and " +
                                              std::to_string(t.p) + " in subscripts");

    std::size_t needed = max_var_ + 1;
    if (!saw_var_) needed = 0;
    std::size_t rank = needed;
    if (declared_rank) {
      if (*declared_rank < needed)
        throw ParseError(0, "declared rank " + std::to_string(*declared_rank) +
                                " is smaller than the " + std::to_string(needed) +
                                " variables in use");
      rank = *declared_rank;
    }
    SymbolClass out(p, rank);
    for (auto& t : terms) {
      for (auto& s : t.term.slots) s.valuation.resize(rank, Int(0));
      out.add_term(std::move(t.term));
    }
    return out;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) {
      std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(pos_, std::string("expected '") + c + "', got " + got);
    }
    ++pos_;
  }

  Int parse_signed(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, std::string("expected ") + what);
    return parse_int(text_.substr(start, pos_ - start));
  }

  std::uint64_t parse_unsigned(const char* what) {
    std::size_t start = pos_;
    Int v = parse_signed(what);
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
      throw ParseError(start, std::string(what) + " out of range");
    return static_cast<std::uint64_t>(v);
  }

  bool starts_int() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }

  ParsedTerm parse_term() {
    ParsedTerm out{};
    std::size_t start = (skip_ws(), pos_);
    if (starts_int()) {
      out.term.weight = parse_signed("weight");
      if (out.term.weight == 0) throw ParseError(start, "zero weight");
      expect('*');
    }
    expect('(');
    out.term.slots.push_back(parse_slot());
    while (peek() == ',') {
      ++pos_;
      out.term.slots.push_back(parse_slot());
    }
    expect(')');
    expect('_');
    skip_ws();
    out.subscript_pos = pos_;
    std::uint64_t subscript = parse_unsigned("subscript");
    unsigned e = 0;
    if (!prime_power(subscript, out.p, e))
      throw ParseError(out.subscript_pos,
                       "subscript must be a prime power, got " + std::to_string(subscript));
    out.term.n = e;
    return out;
  }

  Slot parse_slot() {
    Slot slot;
    parse_factor(slot);
    while (peek() == '*') {
      ++pos_;
      parse_factor(slot);
    }
    return slot;
  }

  void parse_factor(Slot& slot) {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == 't') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(pos_, "expected variable index after 't'");
      auto index = static_cast<std::size_t>(parse_unsigned("variable index"));
      if (index > 1'000'000) throw ParseError(start, "variable index too large");
      Int exponent = 1;
      if (peek() == '^') {
        ++pos_;
        exponent = parse_signed("exponent");
      }
      if (slot.valuation.size() <= index) slot.valuation.resize(index + 1, Int(0));
      slot.valuation[index] += exponent;
      saw_var_ = true;
      max_var_ = std::max(max_var_, index);
      return;
    }
    if (!starts_int()) throw ParseError(start, "expected integer or variable t<k>");
    Int value = parse_signed("scalar");
    if (value == 0) throw ParseError(start, "zero scalar factor");
    slot.scalar *= value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
  bool saw_var_ = false;
};

std::string render_slot(const Slot& s) {
  std::string out;
  if (s.scalar != 1) out = to_string(s.scalar);
  for (std::size_t i = 0; i < s.valuation.size(); ++i) {
    const Int& e = s.valuation[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i);
    if (e != 1) out += '^' + to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

SymbolClass parse_class(std::string_view text) { return Parser(text).parse(); }

std::string render(const SymbolClass& c) {
  std::string out;
  if (c.rank() != c.min_rank()) out = "rank " + std::to_string(c.rank()) + "; ";
  bool first = true;
  for (const auto& t : c.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.weight != 1) out += to_string(t.weight) + '*';
    out += '(';
    for (std::size_t i = 0; i < t.slots.size(); ++i) {
      if (i > 0) out += ',';
      out += render_slot(t.slots[i]);
    }
    out += ")_" + to_string(ipow(Int(c.p()), t.n));
  }
  return out;
}

Multivector wedge_nu(const SymbolClass& c, Exec exec) {
  Multivector out(c.p(), c.rank());
  for (const auto& t : c.terms()) {
    std::vector<IntVector> vals;
    vals.reserve(t.slots.size());
    for (const auto& s : t.slots) vals.push_back(s.valuation);
    PCoeff coeff = t.weight * PCoeff::unit_fraction(c.p(), t.n);
    out += mv_wedge_vectors(c.p(), coeff, vals, c.rank(), exec);
  }
  return out;
}

namespace {

Slot var_slot(std::size_t rank, std::size_t index) {
  Slot s;
  s.valuation.assign(rank, Int(0));
  s.valuation[index] = 1;
  return s;
}

SymbolTerm var_term(std::size_t rank, unsigned n, const IndexTuple& vars) {
  SymbolTerm t;
  t.n = n;
  for (std::size_t v : vars) t.slots.push_back(var_slot(rank, v));
  return t;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ContractError("non-prime modulus " + std::to_string(p));
}

}  // namespace

SymbolClass gen_generic(std::size_t r, std::size_t d, std::uint64_t p, unsigned n) {
  require_prime(p);
  if (r < 1 || d < 1 || n < 1) throw ContractError("gen_generic needs r, d, n >= 1");
  SymbolClass c(p, r * d);
  for (std::size_t i = 0; i < r; ++i) {
    IndexTuple vars(d);
    for (std::size_t j = 0; j < d; ++j) vars[j] = i * d + j;
    c.add_term(var_term(r * d, n, vars));
  }
  return c;
}

SymbolClass gen_block_brauer(std::size_t r, std::uint64_t p, unsigned n) {
  if (r < 1) throw ContractError("gen_block_brauer needs r >= 1");
  return gen_generic(r, 2, p, n);
}

SymbolClass gen_chain(std::size_t r, std::uint64_t p) {
  require_prime(p);
  if (r < 1) throw ContractError("gen_chain needs r >= 1");
  const std::size_t rank = 2 * r + 1;
  SymbolClass c(p, rank);
  for (std::size_t i = 1; i <= r; ++i) c.add_term(var_term(rank, 1, {0, 2 * i - 1, 2 * i}));
  return c;
}

SymbolClass gen_congruence(std::size_t nv, std::size_t d, std::uint64_t p) {
  require_prime(p);
  if (d < 3 || nv < d + 2) throw ContractError("gen_congruence needs d >= 3 and nv >= d + 2");
  SymbolClass c(p, nv);
  for (const auto& tuple : k_subsets(nv, d)) {
    std::size_t sum = 0;
    for (std::size_t i : tuple) sum += i;
    if (sum % nv == 0) c.add_term(var_term(nv, 1, tuple));
  }
  return c;
}

}  // namespace edval
