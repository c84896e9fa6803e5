#include "edval/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "edval/error.hpp"

namespace edval {

namespace {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::size_t size_from_json(const Json& j) {
  Int v = int_from_json(j);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) throw ParseError("size out of range");
  return static_cast<std::size_t>(v);
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

Json string_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("expected integer in JSON, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(string_vector(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    std::vector<IntVector> rows;
    for (const auto& row : j) {
      IntVector r;
      for (const auto& x : row) r.push_back(int_from_json(x));
      rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
  });
}

Json multivector_to_json(const Multivector& m) {
  Json terms = Json::array();
  for (const auto& [tuple, c] : m.terms())
    terms.push_back(Json{{"idx", tuple}, {"coeff", c.str()}});
  return Json{{"p", m.p()}, {"rank", m.rank()}, {"terms", terms}};
}

Multivector multivector_from_json(const Json& j) {
  return guarded([&] {
    Multivector m(j.at("p").get<std::uint64_t>(), j.at("rank").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
      IndexTuple idx = term.at("idx").get<IndexTuple>();
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) throw ParseError("multivector index tuple must be strictly increasing");
      m.add_term(idx, PCoeff::parse(m.p(), term.at("coeff").get<std::string>()));
    }
    return m;
  });
}

Json class_to_json(const SymbolClass& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) {
    Json slots = Json::array();
    for (const auto& s : t.slots) {
      Json slot{{"val", vector_to_json(s.valuation)}, {"unit", s.has_unit()}};
      if (s.scalar != 1) slot["scalar"] = int_to_json(s.scalar);
      slots.push_back(std::move(slot));
    }
    terms.push_back(Json{{"n", t.n}, {"weight", int_to_json(t.weight)}, {"slots", slots}});
  }
  return Json{{"p", c.p()}, {"rank", c.rank()}, {"terms", terms}};
}

SymbolClass class_from_json(const Json& j) {
  return guarded([&] {
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    if (!is_prime(p)) throw ParseError("class prime " + std::to_string(p) + " is not prime");
    SymbolClass c(p, size_from_json(j.at("rank")));
    for (const auto& term : j.at("terms")) {
      SymbolTerm t;
      t.n = static_cast<unsigned>(size_from_json(term.at("n")));
      t.weight = term.contains("weight") ? int_from_json(term.at("weight")) : Int(1);
      for (const auto& slot : term.at("slots")) {
        Slot s;
        for (const auto& x : slot.at("val")) s.valuation.push_back(int_from_json(x));
        s.scalar = slot.contains("scalar") ? int_from_json(slot.at("scalar")) : Int(1);
        if (slot.value("unit", false) != s.has_unit())
          throw ParseError("slot 'unit' flag disagrees with its scalar (unit slots need \"scalar\")");
        t.slots.push_back(std::move(s));
      }
      try {
        c.add_term(std::move(t));
      } catch (const ContractError& e) {
        throw ParseError(e.what());
      }
    }
    return c;
  });
}

Json report_to_json(const EdReport& r) {
  Json factors = Json::array();
  for (const auto& k : r.a_omega.invariant_factors) factors.push_back(int_to_json(k));
  Json witness = Json::array();
  for (const auto& v : r.witness.basis()) witness.push_back(string_vector(v));
  Json brauer = nullptr;
  if (r.brauer) {
    brauer = Json{{"M", matrix_to_json(r.brauer->matrix)},
                  {"divisors", string_vector(r.brauer->divisors)},
                  {"i0", r.brauer->i0}};
  }
  return Json{{"p", r.p},
              {"rank", r.rank},
              {"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
              {"rho", r.rho},
              {"ed_lower_bound", r.ed_lower_bound},
              {"exact", r.exact},
              {"classification", to_string(r.classification)},
              {"a_omega", Json{{"factors", factors}}},
              {"witness", witness},
              {"brauer", brauer}};
}

EdReport report_from_json(const Json& j) {
  return guarded([&] {
    EdReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.rank = j.at("rank").get<std::size_t>();
    if (!j.at("degree").is_null()) r.degree = j.at("degree").get<std::size_t>();
    r.rho = j.at("rho").get<std::size_t>();
    r.ed_lower_bound = j.at("ed_lower_bound").get<std::size_t>();
    r.exact = j.at("exact").get<bool>();
    const std::string cls = j.at("classification").get<std::string>();
    bool known = false;
    for (auto c : {Classification::Zero, Classification::Symbol, Classification::NonSymbol,
                   Classification::Mixed})
      if (to_string(c) == cls) {
        r.classification = c;
        known = true;
      }
    if (!known) throw ParseError("unknown classification '" + cls + "'");
    r.a_omega.p = r.p;
    for (const auto& k : j.at("a_omega").at("factors")) r.a_omega.invariant_factors.push_back(int_from_json(k));
    std::vector<IntVector> basis;
    for (const auto& row : j.at("witness")) {
      IntVector v;
      for (const auto& x : row) v.push_back(int_from_json(x));
      basis.push_back(std::move(v));
    }
    r.witness = Lattice(r.rank, basis);
    if (!j.at("brauer").is_null()) {
      const Json& b = j.at("brauer");
      BrauerData data;
      std::vector<IntVector> rows;
      for (const auto& row : b.at("M")) {
        IntVector v;
        for (const auto& x : row) v.push_back(int_from_json(x));
        rows.push_back(std::move(v));
      }
      data.matrix = IntMatrix::from_rows(rows, r.rank);
      for (const auto& x : b.at("divisors")) data.divisors.push_back(int_from_json(x));
      data.i0 = b.at("i0").get<std::size_t>();
      r.brauer = std::move(data);
    }
    return r;
  });
}

Json witness_to_json(const SubsetWitness& w) {
  return Json{{"n", w.n}, {"d", w.d}, {"j", w.j}, {"set", w.set}};
}

}  // namespace edval
