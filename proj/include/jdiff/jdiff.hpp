#pragma once

#include "jdiff/array_matching.hpp"
#include "jdiff/context.hpp"
#include "jdiff/diff.hpp"
#include "jdiff/error.hpp"
#include "jdiff/hungarian.hpp"
#include "jdiff/json.hpp"
#include "jdiff/json_io.hpp"
#include "jdiff/matrix.hpp"
#include "jdiff/operators.hpp"
#include "jdiff/path.hpp"
#include "jdiff/sequence.hpp"
#include "jdiff/similarity.hpp"
