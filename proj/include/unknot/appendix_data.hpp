#pragma once

#include <vector>

// PD codes and switch sequences of the published example diagrams.
namespace unknot::appendix {

extern const char* const kHardUnknot42;

extern const char* const k12a898Initial;
extern const char* const k12a898First;
extern const char* const k12a898Second;

extern const char* const k12a916Initial;
extern const char* const k12a916First;
extern const char* const k12a916Second;
extern const char* const k12a916Simplified;
extern const char* const k12a916Final;

extern const char* const k12a999Initial;
extern const char* const k12a999First;
extern const char* const k12a999Second;
extern const char* const k12a999Simplified;
extern const char* const k12a999Final;

inline const std::vector<int> k12a898Sequence{49, 0, 20, 1, 57, 76, 66, 85, 84, 79, 56, 96, 67, 65, 69};
inline const std::vector<int> k12a898ToKnot{49, 0, 1, 57, 76, 66, 85, 84, 79, 56, 96, 67};
inline const std::vector<int> k12aSequence{10, 44, 46, 47, 53, 33, 42, 7, 36};
inline const std::vector<int> k12aInitialSwitches{10, 46, 53, 42, 36};
inline constexpr int k12a916LateSwitch = 3;
inline constexpr int k12a999LateSwitch = 0;

}  // namespace unknot::appendix
