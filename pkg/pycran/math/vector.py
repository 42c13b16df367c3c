#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Basic vector functions used for positions, directions and channels."""

import numpy


def renorm_vec(in_vec: numpy.ndarray, renorm_length: float = 1.0, epsilon: float = 1e-30) -> numpy.ndarray:
    """Renormalise a real or complex vector to a given length.

    Parameters
    ----------
    in_vec: numpy.ndarray
        The vector to renormalise.
    renorm_length: float
        The desired length of the renormalised vector.
    epsilon: float
        Squared norms below this are treated as zero.

    Returns
    -------
    numpy.ndarray
        The renormalised vector.
    """
    x_vec = numpy.real(numpy.vdot(in_vec, in_vec))
    if x_vec < epsilon:
        raise ValueError("Trying to renormalise a vector with magnitude 0")

    return in_vec * (renorm_length / numpy.sqrt(x_vec))


def unit_direction(angle: float) -> numpy.ndarray:
    """Return the 2-D unit vector pointing at an angle from the x axis.

    Parameters
    ----------
    angle: float
        The angle in radians.

    Returns
    -------
    numpy.ndarray
        The unit direction vector.
    """
    return numpy.array([numpy.cos(angle), numpy.sin(angle)])
