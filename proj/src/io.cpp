#include "e7/io.hpp"

#include <fstream>
#include <sstream>

#include "e7/chevalley.hpp"
#include "e7/forms.hpp"
#include "e7/quadrics.hpp"
#include "e7/root_system.hpp"

namespace e7 {

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

template <class Ring, class Cell>
Json matrix_json(const Matrix<Ring>& m, const std::string& ring, std::uint32_t p, Cell cell) {
  Json j;
  j["ring"] = ring;
  if (p) j["p"] = p;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(cell(m(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Rational entry_rational(const Json& e) {
  try {
    if (e.is_number_integer()) return Rational(static_cast<long>(e.get<long long>()));
    if (e.is_string()) return parse_rational(e.get<std::string>());
  } catch (const std::exception& ex) {
    throw ParseError(std::string("bad matrix entry: ") + ex.what());
  }
  throw ParseError("matrix entries must be integers or \"a/b\" strings");
}

template <class Ring>
Matrix<Ring> fill(const Ring& R, const Json& j, int rows, int cols) {
  Matrix<Ring> m(R, rows, cols);
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows) throw ParseError("entries: expected " + std::to_string(rows) + " rows");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw ParseError("entries: row " + std::to_string(i) + " has the wrong length");
    for (int k = 0; k < cols; ++k) {
      Rational v = entry_rational(row[k]);
      try {
        m(i, k) = R.from_rational(v);
      } catch (const std::exception& ex) {
        throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(k) + "): " + ex.what());
      }
    }
  }
  return m;
}

}  // namespace

Json to_json(const Matrix<IntegerRing>& m) { return matrix_json(m, "int", 0, integer_json); }
Json to_json(const Matrix<RationalField>& m) {
  return matrix_json(m, "rat", 0, [](const Rational& x) -> Json {
    if (x.get_den() == 1) return integer_json(x.get_num());
    return x.get_str();
  });
}
Json to_json(const Matrix<PrimeField>& m) {
  return matrix_json(m, "fp", m.ring().p, [](const Fp& x) -> Json { return x.value(); });
}

AnyMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix file must hold a JSON object");
  for (const char* key : {"ring", "rows", "cols", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("matrix file lacks \"") + key + "\"");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) throw ParseError("rows and cols must be integers");
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  if (rows <= 0 || cols <= 0) throw ParseError("rows and cols must be positive");
  const std::string ring = j["ring"].is_string() ? j["ring"].get<std::string>() : "";
  if (ring == "int") return fill(IntegerRing{}, j, rows, cols);
  if (ring == "rat") return fill(RationalField{}, j, rows, cols);
  if (ring == "fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("ring fp requires a prime \"p\"");
    try {
      return fill(PrimeField(j["p"].get<std::uint32_t>()), j, rows, cols);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
  }
  throw ParseError("ring must be one of int, rat, fp");
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return matrix_from_json(j);
}

Json dump_roots() {
  const auto& rs = RootSystem::get();
  Json out = Json::array();
  for (int i = 0; i < kNumRoots; ++i) {
    const Root& r = rs.root(i);
    Json rec;
    rec["index"] = i;
    rec["coeffs"] = r.c;
    rec["height"] = r.height();
    rec["e7"] = rs.is_e7_root(r);
    out.push_back(std::move(rec));
  }
  return out;
}

Json dump_weights() {
  const auto& rs = RootSystem::get();
  Json out = Json::array();
  for (WeightIndex w : rs.weights()) {
    Json rec;
    rec["ordinal"] = w.ordinal();
    rec["label"] = w.label();
    rec["root"] = rs.root_of(w).c;
    rec["bar"] = rs.bar(w).ordinal();
    out.push_back(std::move(rec));
  }
  return out;
}

Json dump_constants() {
  const auto& t = StructureTable::get();
  Json out = Json::array();
  for (int a = 0; a < kNumRoots; ++a)
    for (int b = 0; b < kNumRoots; ++b)
      if (int n = t.n(a, b)) out.push_back(Json::array({a, b, n}));
  return out;
}

Json dump_quadrics() {
  Json out = Json::array();
  for (const auto& g : generators()) {
    Json rec;
    rec["name"] = g.name;
    Json mons = Json::array();
    for (const auto& [k, c] : g.form.terms) {
      Json m;
      m["i"] = k.first + 1;
      m["j"] = k.second + 1;
      m["c"] = c;
      mons.push_back(std::move(m));
    }
    rec["monomials"] = std::move(mons);
    out.push_back(std::move(rec));
  }
  return out;
}

Json dump_form_f() {
  Json out = Json::array();
  for (const auto& e : InvariantForms::get().support()) {
    Json rec;
    rec["quad"] = Json::array({e.pos[0] + 1, e.pos[1] + 1, e.pos[2] + 1, e.pos[3] + 1});
    rec["c"] = e.c;
    out.push_back(std::move(rec));
  }
  return out;
}

Json dump_form_h() {
  const auto& F = InvariantForms::get();
  Json out = Json::array();
  for (int a = 0; a < kDim; ++a) {
    Json rec;
    rec["pair"] = Json::array({a + 1, kDim - a});
    rec["c"] = F.h(a, kDim - 1 - a);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string dump_text(const std::string& target) {
  std::ostringstream os;
  const auto& rs = RootSystem::get();
  auto vec = [](const Root& r) {
    std::string s;
    for (int x : r.c) s += std::to_string(x);
    return s;
  };
  if (target == "roots") {
    for (int i = 0; i < kNumRoots; ++i) os << i << " " << vec(rs.root(i)) << " height " << rs.root(i).height() << "\n";
  } else if (target == "weights") {
    for (WeightIndex w : rs.weights()) os << w.ordinal() << " label " << w.label() << " " << vec(rs.root_of(w)) << "\n";
  } else if (target == "constants") {
    const auto& t = StructureTable::get();
    for (int a = 0; a < kNumRoots; ++a)
      for (int b = 0; b < kNumRoots; ++b)
        if (int n = t.n(a, b)) os << a << " " << b << " " << n << "\n";
  } else if (target == "quadrics") {
    for (const auto& g : generators()) {
      os << g.name << " =";
      for (const auto& [k, c] : g.form.terms) os << " " << (c > 0 ? "+" : "") << c << "*x" << k.first + 1 << "*x" << k.second + 1;
      os << "\n";
    }
  } else if (target == "form-f") {
    for (const auto& e : InvariantForms::get().support())
      os << e.pos[0] + 1 << " " << e.pos[1] + 1 << " " << e.pos[2] + 1 << " " << e.pos[3] + 1 << " " << e.c << "\n";
  } else if (target == "form-h") {
    const auto& F = InvariantForms::get();
    for (int a = 0; a < kDim; ++a) os << a + 1 << " " << kDim - a << " " << F.h(a, kDim - 1 - a) << "\n";
  } else {
    throw std::invalid_argument("unknown dump target " + target);
  }
  return os.str();
}

std::string build_id() { return "e7tool 1.0.0 gmp-" + std::string(gmp_version); }

}  // namespace e7
