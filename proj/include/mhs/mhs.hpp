#pragma once

#include "mhs/consistency.hpp"
#include "mhs/convexity.hpp"
#include "mhs/corpus.hpp"
#include "mhs/enumeration.hpp"
#include "mhs/errors.hpp"
#include "mhs/graph.hpp"
#include "mhs/learners.hpp"
#include "mhs/oracles.hpp"
#include "mhs/shadows.hpp"
#include "mhs/twosat.hpp"
#include "mhs/vertex_set.hpp"

namespace mhs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mhs
