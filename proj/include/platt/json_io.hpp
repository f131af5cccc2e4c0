#pragma once

#include "platt/gentle.hpp"
#include "platt/glattice.hpp"
#include "platt/mackey.hpp"
#include "platt/presenter.hpp"

#include "json.hpp"

#include <string>

namespace platt {

/// Canonical serialization: objects with sorted keys, scalars as
/// lowest-terms strings "a" or "a/b", two-space indentation, trailing
/// newline. Emitted files re-parse bit-exactly.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const FGModule& m);
FGModule module_from_json(const nlohmann::json& j, long p);

// {"p", "n", "rank", "action"}
nlohmann::json lattice_to_json(const GLattice& m);
GLattice lattice_from_json(const nlohmann::json& j);

// {"p", "n", "levels", "res", "tr", "gamma"}
nlohmann::json mackey_to_json(const Mackey& x);
Mackey mackey_from_json(const nlohmann::json& j, bool validate = true);

// Mackey schema minus gamma; "res" holds the up maps, "tr" the down maps.
nlohmann::json gentle_to_json(const GentleFunctor& f);
GentleFunctor gentle_from_json(const nlohmann::json& j);

// {"omega0", "omega1", "inject", "project"} (+ "p", "n")
nlohmann::json presentation_to_json(const PermPresentation& pres);
PermPresentation presentation_from_json(const nlohmann::json& j);

} // namespace platt
