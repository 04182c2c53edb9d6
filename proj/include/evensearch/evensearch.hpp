#pragma once

#include "evensearch/bitstring.hpp"
#include "evensearch/criteria.hpp"
#include "evensearch/errors.hpp"
#include "evensearch/indexed_function.hpp"
#include "evensearch/json_io.hpp"
#include "evensearch/oracle.hpp"
#include "evensearch/qsim.hpp"
#include "evensearch/register_pattern.hpp"
#include "evensearch/search.hpp"
#include "evensearch/signed_index.hpp"
