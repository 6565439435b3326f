#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qstir {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace qstir
