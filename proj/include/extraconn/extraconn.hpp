#pragma once

#include "extraconn/connectivity.hpp"
#include "extraconn/error.hpp"
#include "extraconn/generators.hpp"
#include "extraconn/graph.hpp"
#include "extraconn/graph6.hpp"
#include "extraconn/mycielskian.hpp"
#include "extraconn/verification.hpp"
