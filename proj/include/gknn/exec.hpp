#pragma once

namespace gknn {

// Execution policy for the data-parallel kernels. The serial path is the
// reference implementation the tests compare against; both paths must
// produce bit-identical results.
enum class Exec { serial, parallel };

} // namespace gknn
