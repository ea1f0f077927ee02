#pragma once

namespace solgeom {

const char* version_string();  // "solgeom/x.y.z"

}  // namespace solgeom
