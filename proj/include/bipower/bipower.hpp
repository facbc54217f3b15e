#pragma once

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/distance.hpp"
#include "bipower/power.hpp"
#include "bipower/cycles.hpp"
#include "bipower/json_io.hpp"
#include "bipower/intervals.hpp"
#include "bipower/mca.hpp"
#include "bipower/chordal.hpp"
#include "bipower/text_formats.hpp"
#include "bipower/certificate_json.hpp"
#include "bipower/random.hpp"
#include "bipower/harness.hpp"
