#pragma once

#include <facetcx/bits.hpp>
#include <facetcx/coloring.hpp>
#include <facetcx/complex.hpp>
#include <facetcx/complexity.hpp>
#include <facetcx/error.hpp>
#include <facetcx/fixtures.hpp>
#include <facetcx/homsearch.hpp>
#include <facetcx/maps.hpp>
#include <facetcx/oracle.hpp>
#include <facetcx/random.hpp>
#include <facetcx/scx.hpp>
#include <facetcx/verify.hpp>
