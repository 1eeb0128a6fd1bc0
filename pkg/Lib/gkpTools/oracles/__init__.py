"""Independent checks for the lattice engine: a qubit stabilizer tableau and
a direct test of the stabilizer phase condition."""
