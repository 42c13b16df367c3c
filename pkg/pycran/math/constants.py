"""Useful constants which do not appear in astropy.constants. All quantities
are SI unless otherwise stated.
"""

SUBCARRIERS_PER_RB = 12  # F, subcarriers in a resource block
SYMBOLS_PER_SLOT = 14  # O, OFDM symbols in a slot
MAX_RE_PER_RB = 156  # Cap on the resource elements per RB used for the TB size
BITS_PER_BYTE = 8

MIN_PATHLOSS_DISTANCE = 10.0  # Distance floor of the path loss model, in metres
INFINITE_CI = float("inf")  # C/I sentinel for RRHs without edge UEs
