#include "macx/complex_json.hpp"

#include <fstream>
#include <string>

#include "macx/error.hpp"

namespace macx {

nlohmann::json vertex_list(VertexSet s) { return s.vertices(); }

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [p, rank] : table.entries()) out[std::to_string(p)] = rank;
  return out;
}

nlohmann::json hochster_to_json(const HochsterTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, rank] : table.entries) {
    out.push_back({{"omega", vertex_list(key.first)}, {"p", key.second}, {"rank", rank}});
  }
  return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& K) {
  nlohmann::json faces = nlohmann::json::array();
  for (VertexSet f : K.maximal_faces()) faces.push_back(vertex_list(f));
  return {{"m", K.vertex_count()}, {"maximal_faces", std::move(faces)}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("maximal_faces")) {
      throw Error(ErrorCode::ParseError, "expected an object with keys \"m\" and \"maximal_faces\"");
    }
    const int m = j.at("m").get<int>();
    const auto faces = j.at("maximal_faces").get<std::vector<std::vector<int>>>();
    return SimplicialComplex::from_maximal_faces(m, faces);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return complex_from_json(j);
}

void write_complex(const std::filesystem::path& path, const SimplicialComplex& K) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << complex_to_json(K).dump() << '\n';
}

}  // namespace macx
