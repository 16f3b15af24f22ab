#pragma once

#include "bianchi/classify.hpp"
#include "bianchi/checks.hpp"
#include "bianchi/cohomology.hpp"
#include "bianchi/dynamics.hpp"
#include "bianchi/exalg.hpp"
#include "bianchi/io.hpp"
#include "bianchi/rational.hpp"
#include "bianchi/structures.hpp"
#include "bianchi/tables.hpp"
#include "bianchi/variety.hpp"
