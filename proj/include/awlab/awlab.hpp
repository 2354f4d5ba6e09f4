#pragma once

#include "awlab/admissible.hpp"
#include "awlab/alcove.hpp"
#include "awlab/emptiness.hpp"
#include "awlab/errors.hpp"
#include "awlab/json_io.hpp"
#include "awlab/reduction.hpp"
#include "awlab/weyl.hpp"
