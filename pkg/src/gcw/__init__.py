"""gcw: a workbench for codes in graphs.

Builds the classical graph families (Hamming, Johnson, Kneser, bilinear
forms, Grassmann, incidence graphs of small geometries), constructs codes in
them, computes their combinatorial parameters (minimum distance, covering
radius, distance partition, regularity) and checks their symmetry properties
(neighbour-transitivity at each level, complete transitivity, entry/alphabet
classification, elusiveness, quotient distance-transitivity).
"""

__version__ = "0.1.0"
