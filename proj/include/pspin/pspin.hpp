#pragma once

#include "errors.hpp"
#include "numbers.hpp"
#include "rootdata.hpp"
#include "perm.hpp"
#include "parabolic.hpp"
#include "weyl.hpp"
#include "refine.hpp"
#include "satake.hpp"
#include "hecke.hpp"
#include "slopes.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "intertwine.hpp"
#include "serialize.hpp"
#include "commands.hpp"
