#pragma once

#include "radokit/certificate_extractor.hpp"
#include "radokit/colorings.hpp"
#include "radokit/condition_checker.hpp"
#include "radokit/exact_linalg.hpp"
#include "radokit/integer.hpp"
#include "radokit/matrix.hpp"
#include "radokit/solution_search.hpp"
#include "radokit/system_model.hpp"
