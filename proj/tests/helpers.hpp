#ifndef SCOMP_TESTS_HELPERS_HPP
#define SCOMP_TESTS_HELPERS_HPP

#include <map>
#include <vector>

#include "scomp/lhrc.hpp"
#include "scomp/oracle.hpp"
#include "scomp/partset.hpp"

namespace scomp::testing {

// The standing battery of part sets exercised across suites.
inline std::vector<PartSet> battery_sets() {
    return {
        parse_set("{1,2}"),   parse_set("{2,3}"),   parse_set("{3,5}"),
        parse_set("{2,4}"),   parse_set("{1,5}"),   parse_set("1..3"),
        parse_set("1..5"),    parse_set("2.."),     parse_set("3.."),
        parse_set("mod(1,2)"), parse_set("mod(2,3)"), parse_set("not{2}"),
        parse_set("not{3}"),  parse_set("not(2..4)"),
    };
}

// Independent route for the resolvent kernel: enumerate the compositions of
// q - (a_l - a_1) into the offsets explicitly and sum the coefficient
// products. Deliberately avoids the Diophantine machinery under test.
inline BigInt resolvent_by_enumeration(const Lhrc& rec, long long q) {
    long long target = q - (rec.order() - rec.offsets.front());
    if (target < 0) return 0;
    if (target == 0) return 1;
    std::map<int, long long> coeff_of;
    for (std::size_t i = 0; i < rec.offsets.size(); ++i) coeff_of[rec.offsets[i]] = rec.coeffs[i];
    PartSet parts = PartSet::explicit_set(rec.offsets);
    BigInt total = 0;
    for (const Composition& c : enumerate(parts, static_cast<int>(target))) {
        BigInt product = 1;
        for (int part : c) product *= coeff_of.at(part);
        total += product;
    }
    return total;
}

}  // namespace scomp::testing

#endif
