"""Reference data for the (n, d, rho) = (4, 3, 3) code over F_5."""

GENERATOR_433 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 4, 4, 2, 2, 3, 1, 3, 4, 2, 3, 3, 4],
    [0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 1, 1, 3, 1, 1, 1, 0, 4, 2, 4],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 3, 0, 1, 4, 4, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 3, 0, 1, 4, 4],
    [0, 0, 0, 0, 1, 0, 0, 0, 4, 4, 1, 3, 4, 3, 1, 1, 3, 0, 4, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1, 3, 1, 0, 1, 2, 2, 4, 3, 3, 3, 4],
    [0, 0, 0, 0, 0, 0, 1, 0, 4, 3, 0, 0, 0, 0, 3, 3, 0, 1, 3, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 3, 3, 1, 0, 1, 4, 4, 4, 2, 0, 2, 4],
]

FIRST_ROW_433 = (
    "x1^3 - x1*x3*x4 - x1*x4^2 + 2*x2^3 + 2*x2^2*x3 - 2*x2^2*x4 + x2*x3^2"
    " - 2*x2*x3*x4 - x2*x4^2 + 2*x3^3 - 2*x3^2*x4 - 2*x3*x4^2 - x4^3"
)
