#pragma once

#include "gwfloor/floor/diagram.hpp"
#include "gwfloor/floor/kontsevich.hpp"
#include "gwfloor/floor/merge_config.hpp"
#include "gwfloor/floor/merged.hpp"
