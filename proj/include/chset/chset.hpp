#pragma once

// Umbrella header: the whole chset library.

#include "chset/core.hpp"
#include "chset/oriented_set.hpp"
#include "chset/chronology.hpp"
#include "chset/simultaneity.hpp"
#include "chset/changeable_base.hpp"
#include "chset/multiverse.hpp"
#include "chset/visibility.hpp"
#include "chset/json_io.hpp"
#include "chset/generate.hpp"
#include "chset/oracles.hpp"
