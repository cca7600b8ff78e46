from fractions import Fraction

from hypothesis import strategies as st


def rationals(lo=-20, hi=20, max_den=8):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def positive_rationals(hi=30, max_den=6):
    return st.builds(Fraction, st.integers(1, hi), st.integers(1, max_den))
