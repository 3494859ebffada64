#pragma once

#include "beatty_lab/beatty.hpp"
#include "beatty_lab/bfile.hpp"
#include "beatty_lab/isqrt.hpp"
#include "beatty_lab/natural.hpp"
#include "beatty_lab/oracle.hpp"
#include "beatty_lab/parallel.hpp"
#include "beatty_lab/render.hpp"
#include "beatty_lab/sequences.hpp"
#include "beatty_lab/walk.hpp"
