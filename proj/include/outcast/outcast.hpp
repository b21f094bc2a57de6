#pragma once

#include "outcast/subset.hpp"
#include "outcast/choice_function.hpp"
#include "outcast/hyper_order.hpp"
#include "outcast/synthesis.hpp"
#include "outcast/oracle.hpp"
