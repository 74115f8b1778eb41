#pragma once

// Umbrella header.

#include "webcoord/cone.hpp"
#include "webcoord/errors.hpp"
#include "webcoord/glue.hpp"
#include "webcoord/io.hpp"
#include "webcoord/localweb.hpp"
#include "webcoord/oracle.hpp"
#include "webcoord/surface.hpp"
