#include "sring/ring_io.hpp"

#include <fstream>
#include <sstream>

namespace sring {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SringError(ErrorKind::Parse, path + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<Literal> literals_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of element literals");
  std::vector<Literal> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(literal_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json literals_to_json(const std::vector<Literal>& lits) {
  json out = json::array();
  for (const auto& l : lits) out.push_back(to_json(l));
  return out;
}

}  // namespace

json to_json(const Literal& lit) {
  if (lit.is_integer()) return lit.integer();
  json out = json::array();
  for (const auto& item : lit.items()) out.push_back(to_json(item));
  return out;
}

json to_json(const RingExpression& expr) {
  using Kind = RingExpression::Kind;
  switch (expr.kind) {
    case Kind::ZMod:
      return {{"type", "zmod"}, {"n", expr.modulus}};
    case Kind::Product: {
      json factors = json::array();
      for (const auto& f : expr.operands) factors.push_back(to_json(f));
      return {{"type", "product"}, {"factors", factors}};
    }
    case Kind::Quotient:
      return {{"type", "quotient"}, {"base", to_json(expr.base())},
              {"ideal", literals_to_json(expr.ideal)}};
    case Kind::Idealization: {
      json cyclic = json::array();
      for (const auto& c : expr.module.cyclic) cyclic.push_back(literals_to_json(c));
      return {{"type", "idealization"}, {"base", to_json(expr.base())},
              {"module", {{"cyclic", cyclic}}}};
    }
    case Kind::TriangularE:
      return {{"type", "triangular_e"}, {"base", to_json(expr.base())}};
  }
  return nullptr;
}

json to_json(const RingDocument& doc) {
  return {{"ring", to_json(doc.ring)},
          {"mult_set", {{"generators", literals_to_json(doc.generators)}}}};
}

Literal literal_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Literal(j.get<std::int64_t>());
  if (j.is_array()) return Literal::list(literals_from_json(j, path));
  fail(path, "element literals are integers or nested arrays");
}

RingExpression expression_from_json(const json& j, const std::string& path) {
  const json& type = require(j, "type", path);
  if (!type.is_string()) fail(path + ".type", "expected a string");
  const auto t = type.get<std::string>();
  if (t == "zmod") {
    const json& n = require(j, "n", path);
    if (!n.is_number_integer()) fail(path + ".n", "expected an integer");
    const auto v = n.get<std::int64_t>();
    if (v < 2)
      throw SringError(ErrorKind::InvalidModulus,
                       path + ".n: Z/nZ requires n >= 2, got " + std::to_string(v));
    return RingExpression::zmod(static_cast<std::uint64_t>(v));
  }
  if (t == "product") {
    const json& factors = require(j, "factors", path);
    if (!factors.is_array() || factors.empty())
      fail(path + ".factors", "expected a nonempty array");
    std::vector<RingExpression> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
      out.push_back(expression_from_json(factors[i], path + ".factors[" + std::to_string(i) + "]"));
    return RingExpression::product(std::move(out));
  }
  if (t == "quotient")
    return RingExpression::quotient(expression_from_json(require(j, "base", path), path + ".base"),
                                    literals_from_json(require(j, "ideal", path), path + ".ideal"));
  if (t == "idealization") {
    const json& module = require(j, "module", path);
    const json& cyclic = require(module, "cyclic", path + ".module");
    if (!cyclic.is_array() || cyclic.empty())
      fail(path + ".module.cyclic", "expected a nonempty array of generator lists");
    ModuleSpec spec;
    for (std::size_t i = 0; i < cyclic.size(); ++i)
      spec.cyclic.push_back(
          literals_from_json(cyclic[i], path + ".module.cyclic[" + std::to_string(i) + "]"));
    return RingExpression::idealization(
        expression_from_json(require(j, "base", path), path + ".base"), std::move(spec));
  }
  if (t == "triangular_e")
    return RingExpression::triangular_e(
        expression_from_json(require(j, "base", path), path + ".base"));
  fail(path + ".type", "unknown ring type \"" + t + "\"");
}

RingDocument parse_ring_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SringError(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  RingDocument out;
  out.ring = expression_from_json(require(doc, "ring", "$"), "ring");
  if (const auto it = doc.find("mult_set"); it != doc.end())
    out.generators =
        literals_from_json(require(*it, "generators", "mult_set"), "mult_set.generators");
  return out;
}

RingDocument load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SringError(ErrorKind::Parse, path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ring_document(buffer.str());
}

json element_to_json(const FiniteRing& ring, Elem e) { return to_json(ring.decode(e)); }

json elements_to_json(const FiniteRing& ring, std::span<const Elem> elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(element_to_json(ring, e));
  return out;
}

json set_to_json(const FiniteRing& ring, const ElementSet& set) {
  const auto members = set.members();
  return elements_to_json(ring, members);
}

}  // namespace sring
