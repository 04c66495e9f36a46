#include "boxfree/bounds.hpp"

#include <stdexcept>

namespace boxfree {

namespace {

using boost::multiprecision::cpp_int;

}  // namespace

std::string to_string(const Rational& q) {
    const cpp_int num = boost::multiprecision::numerator(q);
    const cpp_int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational erdos_exponent(std::span<const std::uint64_t> sizes) {
    if (sizes.empty()) throw std::invalid_argument("sizes must be nonempty");
    cpp_int product = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("part sizes must be >= 1");
        if (i > 0 && sizes[i] < sizes[i - 1]) {
            throw std::invalid_argument("part sizes must be sorted ascending");
        }
        if (i + 1 < sizes.size()) product *= sizes[i];  // s_r does not enter the exponent
    }
    return Rational(sizes.size()) - Rational(1, product);
}

Rational cpz_exponent(std::uint32_t r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    const cpp_int pow2 = (cpp_int(1) << r) - 1;
    const cpp_int t = (pow2 + r - 1) / r;  // ceil((2^r - 1)/r)
    return Rational(r) - Rational(1, t);
}

Rational construction_exponent(std::uint32_t r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    return Rational(r) - Rational(1, r);
}

std::vector<ExponentRecord> comparison_table(std::uint32_t r_max) {
    if (r_max < 2) throw std::invalid_argument("r_max must be >= 2");
    std::vector<ExponentRecord> out;
    out.reserve(r_max - 1);
    for (std::uint32_t r = 2; r <= r_max; ++r) {
        std::vector<std::uint64_t> twos(r, 2);
        ExponentRecord rec{r, erdos_exponent(twos), cpz_exponent(r), construction_exponent(r),
                           false};
        rec.matches_cpz = rec.construction == rec.cpz;
        out.push_back(rec);
    }
    return out;
}

}  // namespace boxfree
