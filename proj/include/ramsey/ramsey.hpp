#pragma once

#include "ramsey/rational.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/combination.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/graphon.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/density.hpp"
#include "ramsey/suite.hpp"
#include "ramsey/inequalities.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/search.hpp"
