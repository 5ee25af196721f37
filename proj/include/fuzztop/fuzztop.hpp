#pragma once

#include "fuzztop/chain.hpp"
#include "fuzztop/endofunction.hpp"
#include "fuzztop/errors.hpp"
#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/grade.hpp"
#include "fuzztop/maps.hpp"
#include "fuzztop/oracle.hpp"
#include "fuzztop/properties.hpp"
#include "fuzztop/serialize.hpp"
#include "fuzztop/topology.hpp"
