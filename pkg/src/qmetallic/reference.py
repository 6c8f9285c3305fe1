"""Reference radii of convergence ``R_(n)`` of ``[n, n, n, ...]_q``, n = 1..48.

Stored as the five-decimal strings they were tabulated with.  Comparisons
round the computed radius to five places (half-even) and compare strings.
"""

REFERENCE_DECIMALS = 5

REFERENCE_RADII = {
    1: "0.38197", 2: "0.53101", 3: "0.59719", 4: "0.65060",
    5: "0.69918", 6: "0.74444", 7: "0.76933", 8: "0.77406",
    9: "0.78191", 10: "0.79338", 11: "0.80802", 12: "0.82492",
    13: "0.84033", 14: "0.84047", 15: "0.84280", 16: "0.84767",
    17: "0.85496", 18: "0.86423", 19: "0.87477", 20: "0.87404",
    21: "0.87485", 22: "0.87747", 23: "0.88192", 24: "0.88793",
    25: "0.89505", 26: "0.89483", 27: "0.89505", 28: "0.89665",
    29: "0.89967", 30: "0.90395", 31: "0.90917", 32: "0.90916",
    33: "0.90910", 34: "0.91016", 35: "0.91236", 36: "0.91560",
    37: "0.91965", 38: "0.91970", 39: "0.91952", 40: "0.92025",
    41: "0.92193", 42: "0.92449", 43: "0.92775", 44: "0.92784",
    45: "0.92759", 46: "0.92811", 47: "0.92944", 48: "0.93153",
}

#: Indices where the radius drops below its predecessor.
NON_MONOTONE = (20, 26, 32, 33, 39, 45)
