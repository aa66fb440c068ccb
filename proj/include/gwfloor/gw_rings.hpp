#pragma once

#include "gwfloor/checked_int.hpp"
#include "gwfloor/gw/field_model.hpp"
#include "gwfloor/gw/group_ring.hpp"
#include "gwfloor/gw/residual.hpp"
#include "gwfloor/gw/tilde.hpp"
#include "gwfloor/gw/univ.hpp"
