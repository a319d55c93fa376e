"""Print, for each order-3 sprig shape, the solution the solver picks for every y."""

from hypercordial.solutions import ALL_VECTORS, apply, find_composed_solution, find_simple_solution
from hypercordial.sprig import ORDER3_SHAPES, SHAPE_NAMES


def main():
    for M in ORDER3_SHAPES:
        print(f"shape {SHAPE_NAMES[M]} {M}")
        for y in ALL_VECTORS:
            x = find_simple_solution(M, y)
            if x is not None:
                print(f"  y={y}  simple  x={x} z={apply(M, y, x)}")
                continue
            sol = find_composed_solution(M, y, "full")
            parts = "  ".join(f"x={x} z={apply(M, y, x)}" for x in sol.vectors) if sol else "none"
            print(f"  y={y}  {sol.kind if sol else 'no solution'}  {parts}")


if __name__ == "__main__":
    main()
