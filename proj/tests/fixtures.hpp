#pragma once

#include "symop/tableau.hpp"

namespace symop::fixtures {

// An ASSYT/SSYT pair contributing -s_{9953/1} to s_{755431/5321} s_{7541/33}.
inline const SkewShape kPairProductLeft(Partition({7, 5, 5, 4, 3, 1}), Partition({5, 3, 2, 1}));
inline const SkewShape kPairProductRight(Partition({7, 5, 4, 1}), Partition({3, 3}));
inline const SkewShape kPairSsytShape(Partition({9, 9, 5, 3}), Partition({7, 5, 4, 1}));
inline const SkewShape kPairAssytShape(Partition({3, 3}), Partition({1}));

inline Ssyt pair_ssyt() { return Ssyt::from_rows(kPairSsytShape, {{2, 4}, {1, 4, 4, 5}, {3}, {5, 6}}); }
inline Assyt pair_assyt() { return Assyt::from_rows(kPairAssytShape, {{3, 2}, {5, 3, 1}}); }

}  // namespace symop::fixtures
