#include "hopfkit/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfkit {

using nlohmann::json;

namespace {

const json& member(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw ParseError(std::string("missing member '") + name + "'");
  return doc.at(name);
}

std::size_t index_of(const json& v, const std::string& where, std::size_t bound) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound)
    throw ParseError(where + ": index out of range");
  return static_cast<std::size_t>(v.get<long long>());
}

Scalar scalar_of(const json& v, const Field& f, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": scalar must be a string");
  try {
    return f.parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": bad scalar \"" + v.get<std::string>() + "\" (" + e.what() + ")");
  }
}

const json& array_of(const json& v, const std::string& where, std::size_t size) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if (size != static_cast<std::size_t>(-1) && v.size() != size)
    throw ParseError(where + ": expected " + std::to_string(size) + " entries, got " + std::to_string(v.size()));
  return v;
}

Field field_of(const json& v) {
  const std::string kind = member(v, "kind").is_string() ? v.at("kind").get<std::string>() : "";
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    const json& p = member(v, "p");
    if (!p.is_number_unsigned()) throw ParseError("field.p: expected a prime");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("field.p: ") + e.what());
    }
  }
  throw ParseError("field.kind: expected \"Q\" or \"Fp\"");
}

}  // namespace

json field_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

json to_json(const Bialgebra& b) {
  const std::size_t n = b.dim();
  json doc;
  doc["field"] = field_json(b.field());
  doc["dim"] = n;
  doc["basis"] = b.labels();
  json unit = json::array(), counit = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(b.unit()[i].str());
    counit.push_back(b.counit()[i].str());
  }
  doc["unit"] = unit;
  doc["counit"] = counit;
  json mult = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json entries = json::array();
      for (const auto& [k, c] : b.product(i, j)) entries.push_back(json::array({k, c.str()}));
      row.push_back(entries);
    }
    mult.push_back(row);
  }
  doc["mult"] = mult;
  json comult = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json entries = json::array();
    for (const auto& [jk, c] : b.coproduct(i)) entries.push_back(json::array({jk / n, jk % n, c.str()}));
    comult.push_back(entries);
  }
  doc["comult"] = comult;
  return doc;
}

Bialgebra from_json(const json& doc, bool checked) {
  if (!doc.is_object()) throw ParseError("document: expected an object");
  const Field f = field_of(member(doc, "field"));
  const json& jdim = member(doc, "dim");
  if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0) throw ParseError("dim: expected a positive integer");
  const std::size_t n = jdim.get<std::size_t>();

  std::vector<std::string> labels;
  for (std::size_t i = 0; const auto& l : array_of(member(doc, "basis"), "basis", n)) {
    if (!l.is_string()) throw ParseError("basis/" + std::to_string(i) + ": expected a string");
    labels.push_back(l.get<std::string>());
    ++i;
  }
  Vector unit, counit;
  const json& ju = array_of(member(doc, "unit"), "unit", n);
  const json& jc = array_of(member(doc, "counit"), "counit", n);
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(scalar_of(ju[i], f, "unit/" + std::to_string(i)));
    counit.push_back(scalar_of(jc[i], f, "counit/" + std::to_string(i)));
  }

  Matrix mult(n, n * n, f);
  const json& jm = array_of(member(doc, "mult"), "mult", n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = "mult/" + std::to_string(i);
    const json& row = array_of(jm[i], wi, n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string wij = wi + "/" + std::to_string(j);
      const json& entries = array_of(row[j], wij, static_cast<std::size_t>(-1));
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string w = wij + "/" + std::to_string(e);
        const json& entry = array_of(entries[e], w, 2);
        const std::size_t k = index_of(entry[0], w, n);
        mult(k, i * n + j) += scalar_of(entry[1], f, w);
      }
    }
  }

  Matrix comult(n * n, n, f);
  const json& jd = array_of(member(doc, "comult"), "comult", n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = "comult/" + std::to_string(i);
    const json& entries = array_of(jd[i], wi, static_cast<std::size_t>(-1));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string w = wi + "/" + std::to_string(e);
      const json& entry = array_of(entries[e], w, 3);
      const std::size_t j = index_of(entry[0], w, n);
      const std::size_t k = index_of(entry[1], w, n);
      comult(j * n + k, i) += scalar_of(entry[2], f, w);
    }
  }
  if (checked) return Bialgebra(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult), std::move(counit));
  return Bialgebra::unchecked(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                              std::move(counit));
}

Bialgebra read_bialgebra(const std::string& path, bool checked) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return from_json(doc, checked);
}

void write_bialgebra(const Bialgebra& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << format_bialgebra(b);
}

std::string format_bialgebra(const Bialgebra& b) {
  const json doc = to_json(b);
  std::ostringstream os;
  os << "{\n";
  for (const char* key : {"field", "dim", "basis", "unit", "counit"}) os << "  \"" << key << "\": " << doc[key].dump() << ",\n";
  for (const char* key : {"mult", "comult"}) {
    os << "  \"" << key << "\": [\n";
    const json& rows = doc[key];
    for (std::size_t i = 0; i < rows.size(); ++i) os << "    " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "  ]" << (std::string(key) == "mult" ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(text.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 3) throw ParseError("field: bad prime in '" + text + "'");
    try {
      return Field::prime(p);
    } catch (const std::exception& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field: expected Q or Fp:p, got '" + text + "'");
}

}  // namespace hopfkit
