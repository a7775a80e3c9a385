#pragma once

#include "agrp/brute/groups.hpp"

namespace oracle = agrp::brute;
