#ifndef MACX_COMPLEX_JSON_HPP
#define MACX_COMPLEX_JSON_HPP

#include <filesystem>

#include "json.hpp"
#include "macx/chain_complex.hpp"
#include "macx/hochster.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// {"m": 4, "maximal_faces": [[1,2],[2,3],[3,4],[1,4]]}; vertices 1-indexed.
nlohmann::json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex read_complex(const std::filesystem::path& path);
void write_complex(const std::filesystem::path& path, const SimplicialComplex& K);

nlohmann::json vertex_list(VertexSet s);

/// {"0": 1, "3": 1}: degree keys as strings, zero ranks omitted.
nlohmann::json betti_to_json(const BettiTable& table);
/// [{"omega": [1, 3], "p": 0, "rank": 1}, ...] in (ω, p) order.
nlohmann::json hochster_to_json(const HochsterTable& table);

}  // namespace macx

#endif  // MACX_COMPLEX_JSON_HPP
