#ifndef EXOTIC_EXOTIC_HPP
#define EXOTIC_EXOTIC_HPP

#include "exotic/charp.hpp"
#include "exotic/errors.hpp"
#include "exotic/joseph.hpp"
#include "exotic/laurent.hpp"
#include "exotic/matrix.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/nilcone.hpp"
#include "exotic/partitions.hpp"
#include "exotic/pfaffian.hpp"
#include "exotic/serialization.hpp"
#include "exotic/verify.hpp"
#include "exotic/weight.hpp"
#include "exotic/weyl.hpp"

#endif
