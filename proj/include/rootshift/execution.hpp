#pragma once

namespace rootshift {

/// How sample loops are run. `serial` is the reference path; `parallel`
/// distributes samples over OpenMP threads and must produce identical output.
enum class Execution { serial, parallel };

}  // namespace rootshift
