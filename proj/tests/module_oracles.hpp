#pragma once

#include "agrp/brute/modules.hpp"

namespace oracle = agrp::brute;
