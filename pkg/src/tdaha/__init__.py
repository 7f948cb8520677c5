"""Exact computations with affine Weyl groups, the Demazure-Lusztig basis of the
trigonometric DAHA, stable envelopes on T*(G/P) and the resulting quantum actions."""

__version__ = "0.1.0"
