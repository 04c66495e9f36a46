#ifndef BOXFREE_BOUNDS_HPP
#define BOXFREE_BOUNDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace boxfree {

/// Exact rational exponent; all bound comparisons use these, never floats.
/// Arbitrary precision: 2^(r-1) denominators overflow machine words fast.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Upper-bound exponent r - 1/(s_1 ... s_{r-1}) for forbidden complete
/// r-partite r-uniform hypergraphs with part sizes s_1 <= ... <= s_r.
Rational erdos_exponent(std::span<const std::uint64_t> sizes);

/// Best known general lower-bound exponent for the box problem,
/// r - 1/ceil((2^r - 1)/r), due to Conlon, Pohoata and Zakharov.
Rational cpz_exponent(std::uint32_t r);

/// Exponent r - 1/r achieved by the trace construction in this library.
Rational construction_exponent(std::uint32_t r);

struct ExponentRecord {
    std::uint32_t r;
    Rational erdos_two;     // upper bound with all part sizes 2
    Rational cpz;           // best known lower bound
    Rational construction;  // this library's construction
    bool matches_cpz;       // exact rational equality
};

/// Records for r = 2, ..., r_max. The construction matches the best known
/// lower bound exactly for r in {2, 3, 4} and is strictly below it after.
std::vector<ExponentRecord> comparison_table(std::uint32_t r_max);

}  // namespace boxfree

#endif
