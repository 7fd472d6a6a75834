#pragma once

#include "ccodes/arith.hpp"
#include "ccodes/bigint.hpp"
#include "ccodes/codes.hpp"
#include "ccodes/enumerator.hpp"
#include "ccodes/errors.hpp"
#include "ccodes/oracle.hpp"
#include "ccodes/polynomial.hpp"
#include "ccodes/residue.hpp"

namespace ccodes {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ccodes
