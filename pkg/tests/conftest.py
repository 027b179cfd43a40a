import random


def random_unimodular(rng: random.Random, factors: int = 4, bound: int = 3):
    """Random determinant-one integer matrix, built as a product of
    elementary shears so entries stay modest."""
    m = [[1, 0], [0, 1]]
    for _ in range(factors):
        k = rng.randint(-bound, bound)
        if rng.random() < 0.5:
            shear = [[1, k], [0, 1]]
        else:
            shear = [[1, 0], [k, 1]]
        m = [
            [
                m[0][0] * shear[0][0] + m[0][1] * shear[1][0],
                m[0][0] * shear[0][1] + m[0][1] * shear[1][1],
            ],
            [
                m[1][0] * shear[0][0] + m[1][1] * shear[1][0],
                m[1][0] * shear[0][1] + m[1][1] * shear[1][1],
            ],
        ]
    return [tuple(m[0]), tuple(m[1])]
