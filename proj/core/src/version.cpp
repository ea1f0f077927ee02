#include "solgeom/version.hpp"

namespace solgeom {

const char* version_string() { return "solgeom/0.1.0"; }

}  // namespace solgeom
