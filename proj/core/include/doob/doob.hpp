#pragma once

#include "doob/automorphism.hpp"
#include "doob/codes.hpp"
#include "doob/enumerate.hpp"
#include "doob/error.hpp"
#include "doob/graph.hpp"
#include "doob/io.hpp"
#include "doob/params.hpp"
#include "doob/partitions.hpp"
#include "doob/structure.hpp"
#include "doob/vertex_set.hpp"
