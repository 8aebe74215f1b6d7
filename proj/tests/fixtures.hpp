#pragma once

// Named graphs as fixed graph6 constants. Labelings:
//   bull:   triangle 0-1-2, pendants 3 on 0 and 4 on 1
//   paw:    triangle 0-1-2, pendant 3 on 0
//   bowtie: triangles 0-1-2 and 0-3-4
//   wheel5: hub 0 over the 4-cycle 1-2-3-4
//   stars:  center 0

#include <string_view>

#include "pisz/graph6.hpp"

namespace fixtures {

inline constexpr std::string_view kPetersen = "IheA@GUAo";
inline constexpr std::string_view kOctahedron = "E]~o";
inline constexpr std::string_view kK33 = "EFz_";
inline constexpr std::string_view kK23 = "D]o";
inline constexpr std::string_view kBull = "D{O";
inline constexpr std::string_view kPaw = "C{";
inline constexpr std::string_view kBowtie = "D{c";
inline constexpr std::string_view kWheel5 = "D|s";
inline constexpr std::string_view kC4 = "Cl";
inline constexpr std::string_view kC5 = "Dhc";
inline constexpr std::string_view kC6 = "EhEG";
inline constexpr std::string_view kK2 = "A_";
inline constexpr std::string_view kK4 = "C~";
inline constexpr std::string_view kK5 = "D~{";
inline constexpr std::string_view kP3 = "Bg";
inline constexpr std::string_view kP4 = "Ch";
inline constexpr std::string_view kStar3 = "Cs";
inline constexpr std::string_view kStar4 = "Ds_";

inline pisz::Graph load(std::string_view g6) { return pisz::parse_graph6(g6); }

}  // namespace fixtures
