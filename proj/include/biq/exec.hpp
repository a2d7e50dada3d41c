#pragma once

namespace biq {

// Selects between the serial reference kernel and its OpenMP counterpart.
// Both produce identical results; the serial path is kept for testing.
enum class Exec { serial, parallel };

}  // namespace biq
