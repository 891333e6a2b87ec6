#pragma once

#include <type_traits>

#include <boost/multiprecision/traits/is_byte_container.hpp>

// Boost 1.74 probes every type with a const_iterator typedef when deciding
// whether cpp_int can be built from a byte range. Eigen 3.4 expressions
// declare const_iterator as void, which breaks that probe under C++20.
// This specialization answers "not a byte container" for such types.
namespace boost::multiprecision::detail {
template <class C>
struct is_byte_container_imp<C, true> {
  template <class It, class = void>
  struct byte_iterator : std::false_type {};
  template <class It>
  struct byte_iterator<It, std::void_t<typename std::iterator_traits<It>::value_type>>
      : std::bool_constant<
            std::is_integral_v<std::remove_cv_t<typename std::iterator_traits<It>::value_type>> &&
            sizeof(typename std::iterator_traits<It>::value_type) == 1> {};
  static const bool value = byte_iterator<typename C::const_iterator>::value;
};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace lucas {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace lucas
