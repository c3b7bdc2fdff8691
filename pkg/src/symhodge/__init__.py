"""Mixed Hodge polynomials of symmetric products of varieties with exterior cohomology."""
