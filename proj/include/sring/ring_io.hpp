#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sring/ideal.hpp"
#include "sring/ring.hpp"

namespace sring {

/// A ring-definition file: the construction plus generators of S.
struct RingDocument {
  RingExpression ring;
  /// Empty when "mult_set" is absent, which means S = {1}.
  std::vector<Literal> generators;
};

nlohmann::json to_json(const Literal& lit);
nlohmann::json to_json(const RingExpression& expr);
nlohmann::json to_json(const RingDocument& doc);

/// `path` names the location for error messages, e.g. "ring.factors[1]".
Literal literal_from_json(const nlohmann::json& j, const std::string& path);
RingExpression expression_from_json(const nlohmann::json& j, const std::string& path);

/// Throws SringError(Parse) naming the line or key path at fault.
RingDocument parse_ring_document(std::string_view text);
RingDocument load_ring_file(const std::string& path);

/// Decoded literals of the given elements, in the order given.
nlohmann::json elements_to_json(const FiniteRing& ring, std::span<const Elem> elems);
nlohmann::json set_to_json(const FiniteRing& ring, const ElementSet& set);
nlohmann::json element_to_json(const FiniteRing& ring, Elem e);

}  // namespace sring
