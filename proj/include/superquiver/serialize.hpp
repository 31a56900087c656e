#pragma once

// JSON views of the library's values. Matrices are lists of rows of
// rational strings ("p" or "p/q").

#include <json.hpp>

#include "superquiver/gabriel.hpp"
#include "superquiver/pathalg.hpp"
#include "superquiver/quiver.hpp"
#include "superquiver/rep.hpp"
#include "superquiver/roots.hpp"
#include "superquiver/srep.hpp"

namespace superquiver {

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const SuperRoot& r);
nlohmann::json to_json(const SimpleSystem& pi);
nlohmann::json to_json(const ColouredQuiver& q);
nlohmann::json to_json(const Representation& x);
nlohmann::json to_json(const SuperRep& x);
nlohmann::json to_json(const RootCheck& c);
nlohmann::json to_json(const MainTheoremReport& r);
nlohmann::json to_json(const GrothendieckReport& r);
nlohmann::json to_json(const ARQuiver& ar);
nlohmann::json to_json(const PreprojectiveDims& d);

}  // namespace superquiver
