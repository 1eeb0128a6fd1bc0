"""Circuit model: Gaussian operations, Clifford words and the circuit file format."""
