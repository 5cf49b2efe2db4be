#include "locres/json_io.hpp"

namespace locres {

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace locres
