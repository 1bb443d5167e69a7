#pragma once

#include "boxkit/bitset.hpp"
#include "boxkit/catalog.hpp"
#include "boxkit/completion.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/interval_order.hpp"
#include "boxkit/json_io.hpp"
#include "boxkit/kneser.hpp"
