#pragma once

#include <string_view>

namespace geofit::fixtures
{

// Monthly mean temperature (degrees C) against mean rainfall (mm), Amarante.
inline constexpr std::string_view example1_name = "example1_amarante.csv";
inline constexpr std::string_view example1_csv = "temperatura,pluviosidade\n"
                                                 "11.3,122\n"
                                                 "12.0,108\n"
                                                 "13.5,101\n"
                                                 "15.2,54\n"
                                                 "17.6,44\n"
                                                 "20.0,22\n"
                                                 "22.2,4\n"
                                                 "22.5,6\n"
                                                 "21.3,29\n"
                                                 "18.3,80\n"
                                                 "14.2,102\n"
                                                 "11.6,107\n";

// Cumulative infection count against day of year, 8 to 31 May.
inline constexpr std::string_view example2_name = "example2_infections.csv";
inline constexpr std::string_view example2_csv = "dias,infetados\n"
                                                 "67,27268\n"
                                                 "68,27406\n"
                                                 "69,27581\n"
                                                 "70,27679\n"
                                                 "71,27913\n"
                                                 "72,28132\n"
                                                 "73,28319\n"
                                                 "74,28583\n"
                                                 "75,28810\n"
                                                 "76,29036\n"
                                                 "77,29209\n"
                                                 "78,29432\n"
                                                 "79,29660\n"
                                                 "80,29912\n"
                                                 "81,30200\n"
                                                 "82,30471\n"
                                                 "83,30623\n"
                                                 "84,30788\n"
                                                 "85,31007\n"
                                                 "86,31292\n"
                                                 "87,31596\n"
                                                 "88,31946\n"
                                                 "89,32203\n"
                                                 "90,32500\n";

} // namespace geofit::fixtures
