"""Published reference values, transcribed verbatim.

Everything here is data to be compared against, or (where no derivation is
attempted) used as input.  Series are stored as text and parsed on demand.
Group keys are the CLI slugs listed in :data:`GROUPS`.
"""

from __future__ import annotations

# Row order used by every per-group table.
GROUPS = ("Gamma2", "Sp4Z", "K2", "K4", "Gamma0p2", "Gamma0p4", "Gamma0star4",
          "Klingen2", "Klingen4", "M4", "B2")

GROUP_NAMES = {
    "Gamma2": "Gamma(2)", "Sp4Z": "Sp(4,Z)", "K2": "K(2)", "K4": "K(4)",
    "Gamma0p2": "Gamma0(2)", "Gamma0p4": "Gamma0(4)", "Gamma0star4": "Gamma0*(4)",
    "Klingen2": "Gamma0'(2)", "Klingen4": "Gamma0'(4)", "M4": "M(4)", "B2": "B(2)",
}

# --- finite group tables ----------------------------------------------------

# subgroup -> (order, counts per cycle type in s6.CLASSES order)
CONJUGACY = {
    "Gamma(2)": (1, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    "Sp(4,Z)": (720, (1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120)),
    "K(4)": (36, (1, 6, 9, 0, 4, 12, 4, 0, 0, 0, 0)),
    "Gamma0(2)": (48, (1, 3, 9, 7, 0, 0, 8, 6, 6, 0, 8)),
    "Gamma0(4)": (6, (1, 0, 0, 3, 0, 0, 2, 0, 0, 0, 0)),
    "Gamma0*(4)": (3, (1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0)),
    "Gamma0'(2)": (48, (1, 7, 9, 3, 8, 8, 0, 6, 6, 0, 0)),
    "M(4)": (12, (1, 4, 3, 0, 2, 2, 0, 0, 0, 0, 0)),
    "B(2)": (16, (1, 3, 5, 3, 0, 0, 0, 2, 2, 0, 0)),
}

# subgroup -> fixed-space dimension per irrep in s6.IRREPS order
S6_FIXED = {
    "Gamma(2)": (1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1),
    "Sp(4,Z)": (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "K(4)": (1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0),
    "Gamma0(2)": (1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0),
    "Gamma0(4)": (1, 0, 3, 1, 0, 2, 3, 3, 0, 1, 0),
    "Gamma0*(4)": (1, 1, 3, 4, 3, 4, 4, 3, 3, 1, 1),
    "Gamma0'(2)": (1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "M(4)": (1, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0),
    "B(2)": (1, 1, 2, 0, 0, 1, 0, 1, 0, 0, 0),
}

# Images of a few permutations (cycles) under S6 -> Sp(4,F2), rows of bits.
ISO_EXAMPLES = (
    (((1, 6), (2, 5), (3, 4)), ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))),
    (((4, 6),), ((1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1))),
    (((1, 3), (4, 6)), ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))),
    (((1, 2), (3, 6), (4, 5)), ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 0, 1))),
    (((1, 2), (3, 4), (5, 6)), ((1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1))),
    (((1, 2),), ((1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))),
    (((1, 3, 5), (2, 4, 6)), ((1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 1), (0, 0, 1, 0))),
    (((1, 5, 3), (2, 6, 4)), ((0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1))),
)

# --- local fixed-vector dimensions -------------------------------------------

LOCAL_GROUPS = ("Gamma(p)", "K", "K(p)", "K(p^2)", "Gamma0(p)", "Gamma0(p^2)",
                "Gamma0*(p^2)", "Gamma0'(p)", "Gamma0'(p^2)", "M(p^2)", "B(p)")

LOCALDIM = {
    "I": (45, 1, 2, 4, 4, 12, 15, 4, 11, 8, 8),
    "IIa": (30, 0, 1, 2, 1, 5, 8, 2, 7, 5, 4),
    "IIb": (15, 1, 1, 2, 3, 7, 7, 2, 4, 3, 4),
    "IIIa": (30, 0, 0, 1, 2, 8, 10, 1, 5, 3, 4),
    "IIIb": (15, 1, 2, 3, 2, 4, 5, 3, 6, 5, 4),
    "IVa": (16, 0, 0, 0, 0, 2, 4, 0, 2, 1, 1),
    "IVb": (14, 0, 0, 1, 2, 6, 6, 1, 3, 2, 3),
    "IVc": (14, 0, 1, 2, 1, 3, 4, 2, 5, 4, 3),
    "IVd": (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    "Va": (21, 0, 0, 1, 0, 2, 5, 1, 5, 3, 2),
    "Vb": (9, 0, 1, 1, 1, 3, 3, 1, 2, 2, 2),
    "Vc": (9, 0, 1, 1, 1, 3, 3, 1, 2, 2, 2),
    "Vd": (6, 1, 0, 1, 2, 4, 4, 1, 2, 1, 2),
    "VIa": (25, 0, 0, 1, 1, 5, 7, 1, 5, 3, 3),
    "VIb": (5, 0, 0, 0, 1, 3, 3, 0, 0, 0, 1),
    "VIc": (5, 0, 1, 1, 0, 0, 1, 1, 2, 2, 1),
    "VId": (10, 1, 1, 2, 2, 4, 4, 2, 4, 3, 3),
    "VII": (15, 0, 0, 0, 0, 4, 5, 0, 2, 0, 0),
    "VIIIa": (10, 0, 0, 0, 0, 3, 4, 0, 2, 0, 0),
    "VIIIb": (5, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0),
    "IXa": (10, 0, 0, 0, 0, 3, 4, 0, 1, 0, 0),
    "IXb": (5, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0),
    "X": (15, 0, 0, 1, 0, 1, 7, 0, 3, 2, 0),
    "XIa": (10, 0, 0, 0, 0, 1, 4, 0, 2, 1, 0),
    "XIb": (5, 0, 0, 1, 0, 0, 3, 0, 1, 1, 0),
    "Va*": (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "sc(16)": (9, 0, 0, 0, 0, 0, 3, 0, 1, 0, 0),
}

# --- linear systems as printed ----------------------------------------------

FULL_MATRIX = (
    (45, 30, 15, 30, 16, 21, 9, 25, 5, 5, 15, 10, 5, 10, 15, 10, 5, 1, 9),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (4, 2, 2, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0),
    (4, 1, 3, 2, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (12, 5, 7, 8, 2, 2, 3, 5, 3, 0, 4, 3, 1, 3, 1, 1, 0, 0, 0),
    (15, 8, 7, 10, 4, 5, 3, 7, 3, 1, 5, 4, 1, 4, 7, 4, 3, 1, 3),
    (4, 2, 2, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (11, 7, 4, 5, 2, 5, 2, 5, 0, 2, 2, 2, 0, 1, 3, 2, 1, 0, 1),
    (8, 5, 3, 3, 1, 3, 2, 3, 0, 2, 0, 0, 0, 0, 2, 1, 1, 0, 0),
    (8, 4, 4, 4, 1, 2, 2, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

P_MATRIX = (
    (15, 9, 5, 5, 5, 1), (1, 0, 0, 0, 0, 0), (1, 1, 0, 1, 0, 0),
    (2, 1, 0, 1, 1, 0), (3, 1, 1, 0, 0, 0), (7, 3, 3, 0, 0, 0),
    (7, 3, 3, 1, 3, 1), (2, 1, 0, 1, 0, 0), (4, 2, 0, 2, 1, 0),
    (3, 2, 0, 2, 1, 0), (4, 2, 1, 1, 0, 0),
)

G_MATRIX = (
    (45, 30, 30, 16, 22, 15, 10, 15, 10, 9),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (4, 2, 1, 0, 1, 0, 0, 1, 0, 0),
    (4, 1, 2, 0, 0, 0, 0, 0, 0, 0),
    (12, 5, 8, 2, 2, 4, 3, 1, 1, 0),
    (15, 8, 10, 4, 6, 5, 4, 7, 4, 3),
    (4, 2, 1, 0, 1, 0, 0, 0, 0, 0),
    (8, 5, 3, 1, 3, 0, 0, 2, 1, 0),
    (8, 4, 4, 1, 2, 0, 0, 0, 0, 0),
)

KLINGEN4_ROW = (11, 7, 5, 2, 5, 2, 1, 3, 2, 1)

# --- cusps and codimensions --------------------------------------------------

# group -> (alpha, beta, gamma, delta, closed form)
CODIM = {
    "Gamma2": (0, 0, 15, 15, "15t^6(2-t^2)/(1-t^2)^2"),
    "Sp4Z": (1, 0, 0, 1, "t^6(1+t^2-t^8)/((1-t^4)(1-t^6))"),
    "K2": (2, 0, 0, 1, "t^6(1+t^2+t^6-t^8)/((1-t^4)(1-t^6))"),
    "K4": (2, 1, 0, 2, "t^6(2+3t^2+t^4+t^6-2t^8)/((1-t^4)(1-t^6))"),
    "Gamma0p2": (0, 2, 0, 3, "t^6(3+2t^2-3t^4)/((1-t^2)(1-t^4))"),
    "Gamma0p4": (0, 0, 4, 7, "t^6(11-7t^2)/(1-t^2)^2"),
    "Gamma0star4": (0, 0, 5, 7, "t^6(12-7t^2)/(1-t^2)^2"),
    "Klingen2": (2, 1, 0, 2, "t^6(2+3t^2+t^4+t^6-2t^8)/((1-t^4)(1-t^6))"),
    "Klingen4": (3, 1, 2, 4, "t^6(6+9t^2+5t^4+2t^6-4t^8)/((1-t^4)(1-t^6))"),
    "M4": (2, 3, 0, 3, "t^6(3+6t^2+3t^4+2t^6-3t^8)/((1-t^4)(1-t^6))"),
    "B2": (0, 4, 0, 4, "4t^6(1+t^2-t^4)/((1-t^2)(1-t^4))"),
}

# Number of P- and Q-double cosets (the "#" columns).
P_COSET_COUNT = {"Gamma2": 15, "Sp4Z": 1, "K2": 1, "K4": 2, "Gamma0p2": 3,
                 "Gamma0p4": 7, "Gamma0star4": 7, "Klingen2": 2, "Klingen4": 4,
                 "M4": 3, "B2": 4}
Q_COSET_COUNT = {"Gamma2": 15, "Sp4Z": 1, "K2": 2, "K4": 3, "Gamma0p2": 2,
                 "Gamma0p4": 4, "Gamma0star4": 5, "Klingen2": 3, "Klingen4": 6,
                 "M4": 5, "B2": 4}

# --- dimension generating series --------------------------------------------

MK = {
    "Gamma2": "(1+t^2)(1+t^4)(1+t^5)/(1-t^2)^4",
    "Sp4Z": "(1+t^35)/((1-t^4)(1-t^6)(1-t^10)(1-t^12))",
    "K2": "(1+t^10)(1+t^12)(1+t^11)/((1-t^4)(1-t^6)(1-t^8)(1-t^12))",
    "K4": "(1+t^12)(1+t^6+t^7+t^8+t^9+t^10+t^11+t^17)/((1-t^4)^2(1-t^6)(1-t^12))",
    "Gamma0p2": "(1+t^19)/((1-t^2)(1-t^4)^2(1-t^6))",
    "Gamma0p4": "(1+t^4+t^11+t^15)/((1-t^2)^3(1-t^6))",
    "Gamma0star4": "(1+t^4+t^6+t^10)(1+t^5)/((1-t^2)^3(1-t^6))",
    "Klingen2": "(1+t^6+t^8+t^10+t^12+t^18)(1+t^11)/((1-t^4)^2(1-t^6)(1-t^12))",
    "Klingen4": "(1+2t^4+4t^6+t^7+5t^8+2t^9+4t^10+5t^11+5t^12+4t^13+2t^14+5t^15"
                "+t^16+4t^17+2t^19+t^23)/((1-t^4)^2(1-t^6)^2)",
    "M4": "(1+t^4)(1+2t^6+t^7+3t^8+t^9+t^10+2t^11+t^12+t^13+2t^14+t^15+t^16+3t^17"
          "+t^18+2t^19+t^25)/((1-t^4)^2(1-t^6)(1-t^12))",
    "B2": "(1+t^6)(1+t^11)/((1-t^2)(1-t^4)^3)",
}

SK = {
    "Gamma2": "t^5(1+5t+t^2+4t^3+t^4-5t^5+t^6)/(1-t^2)^4",
    "Sp4Z": "(1+t^35)/((1-t^4)(1-t^6)(1-t^10)(1-t^12))-1/((1-t^4)(1-t^6))",
    "K2": "t^8(1+t^12)(1+t^2+t^3+t^4-t^12+t^13)/((1-t^4)(1-t^6)(1-t^8)(1-t^12))",
    "K4": "t^7(1+t+t^2+2t^3+t^4+2t^5+t^9+t^10+2t^11+t^12+t^13+t^14+t^16-t^21+t^22)"
          "/((1-t^4)^2(1-t^6)(1-t^12))",
    "Gamma0p2": "t^6(1+t^2-t^8+t^13)/((1-t^2)(1-t^4)^2(1-t^6))",
    "Gamma0p4": "t^6(3+t^4+t^5-2t^6+t^9)/((1-t^2)^3(1-t^6))",
    "Gamma0star4": "t^5(1+3t+t^3+t^4+2t^5+t^6-t^7-t^9+t^10)/((1-t^2)^3(1-t^6))",
    "Klingen2": "t^8(1+t^2+t^3+t^4-t^5-t^6+t^7+2t^8+t^11-t^14+t^15+t^16-t^17-t^18+t^19)"
                "/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "Klingen4": "t^7(1+3t+2t^2+9t^3+5t^4+13t^5+4t^6+6t^7+5t^8+4t^10-3t^11+2t^12-2t^13"
                "-2t^15+t^16)/((1-t^4)^2(1-t^6)^2)",
    "M4": "t^7(1+2t+2t^3+3t^4+4t^5-t^6+4t^8+5t^9+3t^12+2t^13-2t^15+2t^16+t^17-t^18"
          "-2t^19+t^20)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "B2": "t^6(1+t^2-t^4+t^5+t^6-t^7-t^8+t^9)/((1-t^2)^2(1-t^4)^2)",
}

SKP = {
    "Gamma2": "t^5(1+t+t^2)(1+4t+10t^3-5t^4+10t^5)/((1-t^4)(1-t^6))",
    "Sp4Z": "t^10/((1-t^2)(1-t^6))",
    "K2": "t^8(1+t^2+t^3+t^4)/((1-t^4)(1-t^6))",
    "K4": "t^7(1+t+t^2+2t^3+t^4+2t^5)/((1-t^4)(1-t^6))",
    "Gamma0p2": "t^6(1+t^2+2t^4)/((1-t^2)(1-t^6))",
    "Gamma0p4": "t^6(3+3t^2+4t^4)/((1-t^2)(1-t^6))",
    "Gamma0star4": "t^5(1-t+t^2)(1+4t+5t^2+4t^3)/((1-t^2)(1-t^6))",
    "Klingen2": "t^8(1+t+t^2)(1-t+2t^2)/((1-t^4)(1-t^6))",
    "Klingen4": "t^7(1+2t+t^2+4t^3+2t^4+4t^5)/((1-t^4)(1-t^6))",
    "M4": "t^7(1+t+t^2)(1+t-t^2+3t^3)/((1-t^4)(1-t^6))",
    "B2": "t^6(1+t+t^2)(1-t+3t^2-2t^3+3t^4)/((1-t^4)(1-t^6))",
}

SKG = {
    "Gamma2": "t^8(1+t+t^2)(10-t+12t^2-5t^3+2t^4+13t^5-16t^6+t^7)/((1-t^2)^2(1-t^4)(1-t^6))",
    "Sp4Z": "t^20(1+t^2+t^4-t^12-t^14+t^15)/((1-t^4)(1-t^6)(1-t^10)(1-t^12))",
    "K2": "t^16(1+t^3+t^4+t^7+t^8-2t^9-2t^10+t^11)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "K4": "t^11(1+t+t^3+t^4+2t^5+2t^8+2t^9+t^12+t^13-2t^14-3t^15+t^16)"
          "/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "Gamma0p2": "t^12(2+2t^2-t^4-2t^6+t^7)/((1-t^2)(1-t^4)^2(1-t^6))",
    "Gamma0p4": "t^8(3+t^3+3t^4-4t^6+t^7)/((1-t^2)^3(1-t^6))",
    "Gamma0star4": "t^8(4+3t+t^2+t^3+4t^4-t^5-5t^6+t^7)/((1-t^2)^3(1-t^6))",
    "Klingen2": "t^12(1+t^2+t^3+2t^4+t^7+t^8+2t^11+t^12-2t^13-3t^14+t^15)"
                "/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "Klingen4": "t^8(1+t+5t^2+4t^3+11t^4+6t^5+12t^6+8t^7+8t^8+5t^9-t^10+t^11-6t^12"
                "-2t^13-6t^14+t^15)/((1-t^4)^2(1-t^6)^2)",
    "M4": "t^10(1+2t+4t^2+t^3+3t^4+4t^5+5t^6+4t^9+4t^10-t^12+3t^13+t^14-3t^15-5t^16"
          "+t^17)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "B2": "t^10(1+t+t^2)(1-t+4t^2-2t^3+t^4+3t^5-5t^6+t^7)/((1-t^2)(1-t^4)^2(1-t^6))",
}

COUNTS_P = {
    "IIb": "t^10/((1-t^2)(1-t^6))",
    "Vb": "t^8/((1-t^4)(1-t^6))",
    "VIb": "(t^6+t^8-t^12)/((1-t^4)(1-t^6))",
    "VIc": "t^11/((1-t^4)(1-t^6))",
    "XIb": "t^7/((1-t^2)(1-t^6))",
    "Va*": "t^5/((1-t^4)(1-t^6))",
}

COUNTS_G = {
    "I": "t^20(1+t^2+t^4-t^12-t^14+t^15)/((1-t^4)(1-t^6)(1-t^10)(1-t^12))",
    "IIa": "t^16(1+t^2+t^3-t^4-t^6)/((1-t^4)^2(1-t^5)(1-t^6))",
    "IIIa+VIa/b": "t^12(1+2t^2+2t^4-t^5+2t^6-2t^7+t^8-2t^9+t^10-2t^11+t^14+t^16+t^17-t^18)"
                  "/((1-t^4)(1-t^5)(1-t^6)(1-t^12))",
    "IVa": "t^10(1+t^2+t^3+t^4-t^8+t^9+2t^10+2t^11+t^12+t^13-t^14-t^15-t^16-t^17+t^20)"
           "/((1-t^4)(1-t^5)(1-t^6)(1-t^12))",
    "Va/a*": "t^15(1+t^2-t^5-t^7+t^10)/((1-t^4)(1-t^5)(1-t^6)(1-t^12))",
    "VII+VIIIa/b": "t^10(1+t^2-t^6+t^7)/((1-t^4)^2(1-t^6)^2)",
    "IXa": "t^8(1+t^11)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "X": "t^11(1+t^8+t^9-t^12)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "XIa": "t^12(1+t^3+t^4-t^7-t^8+t^11)/((1-t^2)(1-t^4)(1-t^6)(1-t^12))",
    "sc(16)": "t^9/((1-t^2)(1-t^4)^2(1-t^5))",
}

# --- low weights, k = 1..20 --------------------------------------------------

MK_LOW = {
    "Gamma2": (0, 5, 0, 15, 1, 35, 5, 69, 15, 121, 35, 195, 69, 295, 121, 425, 195, 589, 295, 791),
    "Sp4Z": (0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 2, 0, 4, 0, 4, 0, 5),
    "K2": (0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 1, 5, 0, 3, 1, 7, 1, 7, 2, 10),
    "K4": (0, 0, 0, 2, 0, 2, 1, 4, 1, 5, 3, 10, 3, 9, 6, 17, 7, 19, 12, 27),
    "Gamma0p2": (0, 1, 0, 3, 0, 4, 0, 7, 0, 9, 0, 14, 0, 17, 0, 24, 0, 29, 1, 38),
    "Gamma0p4": (0, 3, 0, 7, 0, 14, 0, 24, 0, 38, 1, 57, 3, 81, 7, 111, 14, 148, 24, 192),
    "Gamma0star4": (0, 3, 0, 7, 1, 15, 3, 27, 7, 45, 15, 71, 27, 105, 45, 149, 71, 205, 105, 273),
    "Klingen2": (0, 0, 0, 2, 0, 2, 0, 4, 0, 5, 1, 10, 0, 9, 2, 17, 2, 19, 4, 26),
    "Klingen4": (0, 0, 0, 4, 0, 6, 1, 12, 2, 20, 7, 36, 10, 46, 22, 75, 32, 98, 50, 133),
    "M4": (0, 0, 0, 3, 0, 3, 1, 8, 1, 10, 5, 21, 5, 23, 13, 41, 16, 49, 28, 71),
    "B2": (0, 1, 0, 4, 0, 5, 0, 11, 0, 14, 1, 24, 1, 30, 4, 45, 5, 55, 11, 76),
}

SK_LOW = {
    "Gamma2": (0, 0, 0, 0, 1, 5, 5, 24, 15, 61, 35, 120, 69, 205, 121, 320, 195, 469, 295, 656),
    "Sp4Z": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3),
    "K2": (0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 4, 1, 4, 2, 7),
    "K4": (0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 3, 5, 6, 10, 7, 12, 12, 19),
    "Gamma0p2": (0, 0, 0, 0, 0, 1, 0, 2, 0, 4, 0, 7, 0, 10, 0, 15, 0, 20, 1, 27),
    "Gamma0p4": (0, 0, 0, 0, 0, 3, 0, 9, 0, 19, 1, 34, 3, 54, 7, 80, 14, 113, 24, 153),
    "Gamma0star4": (0, 0, 0, 0, 1, 3, 3, 10, 7, 23, 15, 44, 27, 73, 45, 112, 71, 163, 105, 226),
    "Klingen2": (0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 4, 0, 5, 2, 10, 2, 12, 4, 18),
    "Klingen4": (0, 0, 0, 0, 0, 0, 1, 3, 2, 9, 7, 19, 10, 30, 22, 53, 32, 74, 50, 106),
    "M4": (0, 0, 0, 0, 0, 0, 1, 2, 1, 4, 5, 10, 5, 14, 13, 27, 16, 35, 28, 54),
    "B2": (0, 0, 0, 0, 0, 1, 0, 3, 0, 6, 1, 12, 1, 18, 4, 29, 5, 39, 11, 56),
}

SKP_LOW = {
    "Gamma2": (0, 0, 0, 0, 1, 5, 5, 14, 6, 20, 11, 29, 11, 34, 16, 44, 17, 49, 21, 58),
    "Sp4Z": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2),
    "K2": (0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 3, 1, 3, 1, 4),
    "K4": (0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 2, 3, 3, 5, 3, 5, 4, 6),
    "Gamma0p2": (0, 0, 0, 0, 0, 1, 0, 2, 0, 4, 0, 5, 0, 6, 0, 8, 0, 9, 0, 10),
    "Gamma0p4": (0, 0, 0, 0, 0, 3, 0, 6, 0, 10, 0, 13, 0, 16, 0, 20, 0, 23, 0, 26),
    "Gamma0star4": (0, 0, 0, 0, 1, 3, 3, 6, 4, 10, 5, 13, 7, 16, 8, 20, 9, 23, 11, 26),
    "Klingen2": (0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 3, 0, 3, 1, 5, 1, 5, 1, 6),
    "Klingen4": (0, 0, 0, 0, 0, 0, 1, 2, 1, 4, 3, 6, 2, 6, 4, 10, 4, 10, 5, 12),
    "M4": (0, 0, 0, 0, 0, 0, 1, 2, 1, 3, 3, 5, 2, 5, 4, 8, 4, 8, 5, 10),
    "B2": (0, 0, 0, 0, 0, 1, 0, 3, 0, 5, 1, 7, 0, 8, 1, 11, 1, 12, 1, 14),
}

SKG_LOW = {
    "Gamma2": (0, 0, 0, 0, 0, 0, 0, 10, 9, 41, 24, 91, 58, 171, 105, 276, 178, 420, 274, 598),
    "Sp4Z": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "K2": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 3),
    "K4": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 5, 4, 7, 8, 13),
    "Gamma0p2": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 4, 0, 7, 0, 11, 1, 17),
    "Gamma0p4": (0, 0, 0, 0, 0, 0, 0, 3, 0, 9, 1, 21, 3, 38, 7, 60, 14, 90, 24, 127),
    "Gamma0star4": (0, 0, 0, 0, 0, 0, 0, 4, 3, 13, 10, 31, 20, 57, 37, 92, 62, 140, 94, 200),
    "Klingen2": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 5, 1, 7, 3, 12),
    "Klingen4": (0, 0, 0, 0, 0, 0, 0, 1, 1, 5, 4, 13, 8, 24, 18, 43, 28, 64, 45, 94),
    "M4": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 5, 3, 9, 9, 19, 12, 27, 23, 44),
    "B2": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 5, 1, 10, 3, 18, 4, 27, 10, 42),
}

COUNTS_P_LOW = {
    "IIb": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2),
    "Vb": (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2),
    "VIb": (0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 2),
    "VIc": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0),
    "XIb": (0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 0),
    "Va*": (0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0),
}

COUNTS_G_LOW = {
    "I": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "IIa": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1),
    "IIIa+VIa/b": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 3, 0, 5, 0, 6),
    "IVa": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 1, 2, 2, 3, 4, 6),
    "Va/a*": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0),
    "VII+VIIIa/b": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 3, 1, 5, 0, 5),
    "IXa": (0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 4, 0, 5, 1, 8),
    "X": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 5, 1),
    "XIa": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 3, 1, 4, 1, 5),
    "sc(16)": (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 3, 1, 3, 1, 6, 3, 7, 3),
}

# --- Jacobi-form expansions ----------------------------------------------------
# Rows are {r: c(n, r)} for fixed n, listed for r >= 0 (the forms are even in r).

PHI_ROWS = {
    "phi0": {1: {0: "126", 1: "56", 2: "1"}, 2: {0: "756", 1: "576", 2: "126"}},
    "phi1": {1: {0: "126", 2: "56", 4: "1"}, 2: {0: "756", 2: "576", 4: "126"}},
    "phi2": {1: {0: "84", 1: "64", 2: "14"},
             2: {0: "574", 1: "448", 2: "280", 3: "64", 4: "1"}},
    "phi3": {1: {0: "574/9", 1: "448/9", 2: "280/9", 3: "64/9", 4: "1/9"},
             2: {0: "1372/3", 1: "896/3", 2: "320", 3: "448/3", 4: "686/9", 5: "64/9"}},
}

PHI2SQ_OVER_240G4_ROWS = {
    1: {0: "-72", 1: "128", 2: "28"},
    2: {0: "31908", 1: "-17280", 2: "288", 3: "1920", 4: "198"},
}

G4_HEAD = ("1/240", "1", "9", "28")
