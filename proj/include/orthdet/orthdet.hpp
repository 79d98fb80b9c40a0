#pragma once

#include "orthdet/bigint.hpp"
#include "orthdet/combinat.hpp"
#include "orthdet/errors.hpp"
#include "orthdet/gl_det.hpp"
#include "orthdet/hecke_det.hpp"
#include "orthdet/oracle.hpp"
#include "orthdet/parker.hpp"
#include "orthdet/polyarith.hpp"
#include "orthdet/serialize.hpp"
#include "orthdet/sqclass.hpp"
