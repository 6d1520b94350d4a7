#ifndef MFAM_JSON_IO_HPP
#define MFAM_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "mfam/scheme.hpp"

/// JSON forms of the public artifacts. All exponent tuples are x0-first;
/// coefficients travel as strings so arbitrary-precision values survive.
/// nlohmann::json keeps keys sorted, so output is byte-deterministic.
namespace mfam::io {

using nlohmann::json;

json monomial_json(const Monomial& m);
Monomial monomial_from_json(const json& j, std::size_t n_vars);

json ideal_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

json poly_json(const Poly& p);
json param_json(const ParameterVariable& p);

json marked_set_json(const MarkedSet& set);
/// Reads {ring, polys:[{head, tail:[{monomial, coefficient}]}]}. The ring
/// string `ZZ[C]` resolves to the generic parameter ring of the ideal.
/// An override reinterprets the stored coefficient strings in another ring.
MarkedSet marked_set_from_json(const StableIdeal& ideal, const json& j,
                               const std::optional<std::string>& ring_override = std::nullopt);

/// `ZZ`, `QQ`, `ZZ/p` or `ZZ[C]` (the latter needs the ideal for its
/// parameter set).
RingDescriptor resolve_ring(const std::string& text, const StableIdeal& ideal);

json hilbert_json(const HilbertData& data);
json equations_json(const SchemeEquations& equations);
json stratum_json(const StratumEquations& stratum);
json embedding_json(const EmbeddingReport& report);

}  // namespace mfam::io

#endif
