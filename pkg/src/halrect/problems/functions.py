"""Closed-form benchmark objectives.

Every function takes a 1-D float array in the original problem space and
returns a Python float. Formulas follow the usual benchmark literature
(Hedar, Surjanovic & Bingham, Gavana, Clerc).
"""

import math

import numpy as np

PI = math.pi

# 418.9829 is the commonly printed rounding; the exact value keeps f(x*) at 0.
SCHWEFEL_CONST = 418.98288727243369


def ackley(x):
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.mean(x**2)))
        - np.exp(np.mean(np.cos(2.0 * PI * x)))
        + 20.0
        + math.e
    )


def alpine(x):
    # Alpine N.2, negated to a minimization problem.
    return float(-np.prod(np.sqrt(x) * np.sin(x)))


def beale(x):
    x1, x2 = x
    return float(
        (1.5 - x1 + x1 * x2) ** 2
        + (2.25 - x1 + x1 * x2**2) ** 2
        + (2.625 - x1 + x1 * x2**3) ** 2
    )


def bohachevsky1(x):
    x1, x2 = x
    return float(
        x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1) - 0.4 * np.cos(4 * PI * x2) + 0.7
    )


def bohachevsky2(x):
    x1, x2 = x
    return float(
        x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1) * np.cos(4 * PI * x2) + 0.3
    )


def bohachevsky3(x):
    x1, x2 = x
    return float(x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1 + 4 * PI * x2) + 0.3)


def booth(x):
    x1, x2 = x
    return float((x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2)


def branin(x):
    x1, x2 = x
    b = 5.1 / (4 * PI**2)
    c = 5 / PI
    t = 1 / (8 * PI)
    return float((x2 - b * x1**2 + c * x1 - 6) ** 2 + 10 * (1 - t) * np.cos(x1) + 10)


def bukin6(x):
    x1, x2 = x
    return float(100 * np.sqrt(abs(x2 - 0.01 * x1**2)) + 0.01 * abs(x1 + 10))


def colville(x):
    x1, x2, x3, x4 = x
    return float(
        100 * (x1**2 - x2) ** 2
        + (x1 - 1) ** 2
        + (x3 - 1) ** 2
        + 90 * (x3**2 - x4) ** 2
        + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2)
        + 19.8 * (x2 - 1) * (x4 - 1)
    )


def _tray_core(x):
    x1, x2 = x
    return abs(np.sin(x1) * np.sin(x2) * np.exp(abs(100 - np.sqrt(x1**2 + x2**2) / PI)))


def cross_in_tray(x):
    return float(-0.0001 * (_tray_core(x) + 1) ** 0.1)


def crosslegtable(x):
    return float(-1.0 / (_tray_core(x) + 1) ** 0.1)


def csendes(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    nz = x != 0
    out[nz] = x[nz] ** 6 * (2 + np.sin(1 / x[nz]))
    return float(np.sum(out))


def damavandi(x):
    x1, x2 = x
    # np.sinc(t) = sin(pi t) / (pi t), continuous at t = 0.
    ratio = abs(np.sinc(x1 - 2) * np.sinc(x2 - 2))
    return float((1 - ratio**5) * (2 + (x1 - 7) ** 2 + 2 * (x2 - 7) ** 2))


def deb01(x):
    return float(-np.mean(np.sin(5 * PI * x) ** 6))


def deb02(x):
    return float(-np.mean(np.sin(5 * PI * (np.abs(x) ** 0.75 - 0.05)) ** 6))


def dixon_price(x):
    i = np.arange(2, len(x) + 1)
    return float((x[0] - 1) ** 2 + np.sum(i * (2 * x[1:] ** 2 - x[:-1]) ** 2))


def drop_wave(x):
    r2 = float(np.sum(x**2))
    return -(1 + math.cos(12 * math.sqrt(r2))) / (0.5 * r2 + 2)


def easom(x):
    x1, x2 = x
    return float(-np.cos(x1) * np.cos(x2) * np.exp(-((x1 - PI) ** 2) - (x2 - PI) ** 2))


def eggholder(x):
    x1, x2 = x
    return float(
        -(x2 + 47) * np.sin(np.sqrt(abs(x2 + x1 / 2 + 47)))
        - x1 * np.sin(np.sqrt(abs(x1 - (x2 + 47))))
    )


def goldstein_price(x):
    x1, x2 = x
    a = 1 + (x1 + x2 + 1) ** 2 * (
        19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2
    )
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (
        18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2
    )
    return float(a * b)


def griewank(x):
    i = np.arange(1, len(x) + 1)
    return float(np.sum(x**2) / 4000 - np.prod(np.cos(x / np.sqrt(i))) + 1)


_H3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
_H3_P = 1e-4 * np.array(
    [[3689, 1170, 2673], [4699, 4387, 7470], [1091, 8732, 5547], [381, 5743, 8828]]
)
_H6_A = np.array(
    [
        [10, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3, 3.5, 1.7, 10, 17, 8],
        [17, 8, 0.05, 10, 0.1, 14],
    ]
)
_H6_P = 1e-4 * np.array(
    [
        [1312, 1696, 5569, 124, 8283, 5886],
        [2329, 4135, 8307, 3736, 1004, 9991],
        [2348, 1451, 3522, 2883, 3047, 6650],
        [4047, 8828, 8732, 5743, 1091, 381],
    ]
)
_H_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])


def hartman3(x):
    return float(-np.sum(_H_ALPHA * np.exp(-np.sum(_H3_A * (x - _H3_P) ** 2, axis=1))))


def hartman6(x):
    return float(-np.sum(_H_ALPHA * np.exp(-np.sum(_H6_A * (x - _H6_P) ** 2, axis=1))))


def holder_table(x):
    x1, x2 = x
    return float(
        -abs(np.sin(x1) * np.cos(x2) * np.exp(abs(1 - np.sqrt(x1**2 + x2**2) / PI)))
    )


def hump(x):
    # six-hump camel back
    x1, x2 = x
    return float(
        4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 + x1 * x2 - 4 * x2**2 + 4 * x2**4
    )


_LANG_C = np.array([1.0, 2, 5, 2, 3])
_LANG_A = np.array([[3.0, 5], [5, 2], [2, 1], [1, 4], [7, 9]])


def langermann(x):
    s = np.sum((x - _LANG_A) ** 2, axis=1)
    return float(np.sum(_LANG_C * np.exp(-s / PI) * np.cos(PI * s)))


def levy(x):
    w = 1 + (x - 1) / 4
    head = np.sin(PI * w[0]) ** 2
    mid = np.sum((w[:-1] - 1) ** 2 * (1 + 10 * np.sin(PI * w[:-1] + 1) ** 2))
    tail = (w[-1] - 1) ** 2 * (1 + np.sin(2 * PI * w[-1]) ** 2)
    return float(head + mid + tail)


def matyas(x):
    x1, x2 = x
    return float(0.26 * (x1**2 + x2**2) - 0.48 * x1 * x2)


def mccormick(x):
    x1, x2 = x
    return float(np.sin(x1 + x2) + (x1 - x2) ** 2 - 1.5 * x1 + 2.5 * x2 + 1)


def michalewicz(x, m=10):
    i = np.arange(1, len(x) + 1)
    return float(-np.sum(np.sin(x) * np.sin(i * x**2 / PI) ** (2 * m)))


def perm(x, beta=0.5):
    n = len(x)
    j = np.arange(1, n + 1)
    total = 0.0
    for k in range(1, n + 1):
        total += float(np.sum((j**k + beta) * ((x / j) ** k - 1))) ** 2
    return total


def pinter(x):
    n = len(x)
    i = np.arange(1, n + 1)
    prev = np.roll(x, 1)
    nxt = np.roll(x, -1)
    a = prev * np.sin(x) + np.sin(nxt)
    b = prev**2 - 2 * x + 3 * nxt - np.cos(x) + 1
    return float(
        np.sum(i * x**2) + np.sum(20 * i * np.sin(a) ** 2) + np.sum(i * np.log10(1 + i * b**2))
    )


def powell(x):
    a, b, c, d = x[0::4], x[1::4], x[2::4], x[3::4]
    return float(
        np.sum((a + 10 * b) ** 2 + 5 * (c - d) ** 2 + (b - 2 * c) ** 4 + 10 * (a - d) ** 4)
    )


_POWER_SUM_B = np.array([8.0, 18, 44, 114])


def power_sum(x):
    k = np.arange(1, len(x) + 1)[:, None]
    return float(np.sum((np.sum(x[None, :] ** k, axis=1) - _POWER_SUM_B[: len(x)]) ** 2))


def qing(x):
    i = np.arange(1, len(x) + 1)
    return float(np.sum((x**2 - i) ** 2))


def rastrigin(x):
    return float(10 * len(x) + np.sum(x**2 - 10 * np.cos(2 * PI * x)))


def rosenbrock(x):
    return float(np.sum(100 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1) ** 2))


def rotated_hyper_ellipsoid(x):
    return float(np.sum(np.cumsum(x**2)))


def schwefel(x):
    return float(SCHWEFEL_CONST * len(x) - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


_SHEKEL_A = np.array(
    [
        [4.0, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ]
)
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def shekel(x, m):
    d = np.sum((x - _SHEKEL_A[:m]) ** 2, axis=1) + _SHEKEL_C[:m]
    return float(-np.sum(1.0 / d))


def shekel5(x):
    return shekel(x, 5)


def shekel7(x):
    return shekel(x, 7)


def shekel10(x):
    return shekel(x, 10)


_SHUBERT_J = np.arange(1, 6)


def shubert(x):
    x1, x2 = x
    s1 = np.sum(_SHUBERT_J * np.cos((_SHUBERT_J + 1) * x1 + _SHUBERT_J))
    s2 = np.sum(_SHUBERT_J * np.cos((_SHUBERT_J + 1) * x2 + _SHUBERT_J))
    return float(s1 * s2)


def sphere(x):
    return float(np.sum(x**2))


def styblinski_tang(x):
    return float(0.5 * np.sum(x**4 - 16 * x**2 + 5 * x))


def sum_of_powers(x):
    i = np.arange(1, len(x) + 1)
    return float(np.sum(np.abs(x) ** (i + 1)))


def sum_squares(x):
    i = np.arange(1, len(x) + 1)
    return float(np.sum(i * x**2))


def trefethen(x):
    x1, x2 = x
    return float(
        np.exp(np.sin(50 * x1))
        + np.sin(60 * np.exp(x2))
        + np.sin(70 * np.sin(x1))
        + np.sin(np.sin(80 * x2))
        - np.sin(10 * (x1 + x2))
        + 0.25 * (x1**2 + x2**2)
    )


def trid(x):
    return float(np.sum((x - 1) ** 2) - np.sum(x[1:] * x[:-1]))


def vincent(x):
    return float(-np.sum(np.sin(10 * np.log(x))))


def zakharov(x):
    s = np.sum(0.5 * np.arange(1, len(x) + 1) * x)
    return float(np.sum(x**2) + s**2 + s**4)
