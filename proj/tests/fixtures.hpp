#pragma once

#include "schubert/node_set.hpp"

// Worked examples: Weyl group words with their Levi sets.
namespace fixtures {

inline const schubert::Word kE8Word{2, 3, 4, 2, 3, 4, 5, 4, 2, 3, 1, 4, 5, 6, 7, 6, 8, 7, 6};
inline const schubert::NodeSet kE8Levi{2, 3, 4, 5, 7, 8};
inline const schubert::Word kE8W0Levi{3, 2, 4, 3, 2, 4, 5, 4, 3, 2, 4, 5, 7, 8, 7};

inline const schubert::Word kF4Word{4, 3, 4, 2, 3, 4, 2, 3, 2, 1, 2, 3, 4};
inline const schubert::NodeSet kF4Levi{2, 3, 4};
inline const schubert::Word kF4W0Levi{2, 3, 2, 3, 4, 3, 2, 3, 4};

inline const schubert::Word kF4PrimeWord{2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1};
inline const schubert::NodeSet kF4PrimeLevi{2, 4};
inline const schubert::Word kF4PrimeD{1, 3, 2, 1, 3, 2, 4, 3, 2, 1};

inline const schubert::Word kD4Word{3, 2, 3, 4, 2, 1, 2};
inline const schubert::NodeSet kD4Levi{2, 3};
inline const schubert::Word kD4D{4, 2, 1, 2};

}  // namespace fixtures
