"""Count numerical semigroups through lattice points of Kunz polytopes."""
