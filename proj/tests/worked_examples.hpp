#pragma once

// Published product expansions used as fixtures.

#include <map>
#include <string>

namespace fixtures {

inline const std::map<std::string, int> product_1562374_4516273 = {
    {"48531726", 1}, {"48532617", 1}, {"48621735", 1}, {"48623517", 1},
    {"48712635", 1}, {"48713526", 1}, {"58341726", 1}, {"58342617", 1},
    {"68241735", 1}, {"68243517", 1}, {"78142635", 1}, {"78143526", 1}};

inline const std::map<std::string, int> product_1457236_3571246 = {
    {"379512468", 1}, {"37(10)4125689", 1}, {"389412567", 1}, {"469512378", 1},
    {"46(10)3125789", 1}, {"47851236", 1}, {"479312568", 2}, {"47(10)2135689", 1},
    {"489213567", 1}, {"56841237", 1}, {"569312478", 2}, {"56(10)2134789", 1},
    {"57831246", 2}, {"579213468", 3}, {"57(10)1234689", 1}, {"589123467", 1},
    {"67821345", 1}, {"679123458", 1}};

inline const std::map<std::string, int> product_3142567_1527346 = {
    {"3527146", 1}, {"3571246", 1}, {"3617245", 1}, {"3715246", 1},
    {"5237146", 1}, {"5271346", 1}, {"5712346", 1}, {"6137245", 1},
    {"6172345", 1}, {"7135246", 1}, {"7152346", 1}};

}  // namespace fixtures
