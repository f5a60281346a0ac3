#!/usr/bin/env python3
"""Tour of the generalized Gray maps and the mixed weight.

Walks the per-level Gray tables, checks the Lee->Hamming isometry by
brute force, and shows how a mixed-alphabet word maps to one binary word.
"""

import itertools

from mixedcyclic import (
    AlphabetProfile,
    Codeword,
    gray_image,
    gray_map,
    hamming_weight,
    lee_weight,
    mixed_weight,
)


def main():
    print("Gray tables for levels 1..3")
    for level in (1, 2, 3):
        q = 1 << (level - 1)
        print(f"  level {level} (Z/{2 * q} -> binary words of length {q}):")
        for u in range(2 * q):
            bits = "".join(str(b) for b in gray_map(u, level))
            print(f"    {u:2d} -> {bits}   lee weight {lee_weight(u, level)}")

    print("\nWeight isometry, exhaustively for levels 1..5:")
    checks = 0
    for level in range(1, 6):
        for u in range(1 << level):
            assert lee_weight(u, level) == hamming_weight(gray_map(u, level))
            checks += 1
    print(f"  lee_weight(u) == hamming_weight(gray(u)) held {checks} times")

    print("\nDistance transport, all pairs for levels 1..4:")
    pairs = 0
    for level in range(1, 5):
        mod = 1 << level
        for a, b in itertools.product(range(mod), repeat=2):
            d_lee = min((a - b) % mod, (b - a) % mod)
            d_ham = sum(
                x != y for x, y in zip(gray_map(a, level), gray_map(b, level))
            )
            assert d_lee == d_ham
            pairs += 1
    print(f"  lee distance == hamming distance of images for {pairs} pairs")

    print("\nOne mixed-alphabet word and its binary image:")
    profile = AlphabetProfile((2, 3))
    v = Codeword(profile, ((1, 0), (0, 1, 3)))
    bits = "".join(str(b) for b in gray_image(v))
    print(f"  word  {v.to_text()}  over blocks Z2^2 | Z4^3")
    print(f"  image {bits}  (length 2 + 2*3 = 8)")
    print(f"  mixed weight {mixed_weight(v)} == image weight "
          f"{hamming_weight(gray_image(v))}")


if __name__ == "__main__":
    main()
