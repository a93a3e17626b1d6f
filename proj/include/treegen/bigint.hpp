#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace treegen {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace treegen
