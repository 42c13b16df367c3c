#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""pycran - a downlink simulator for small cell C-RAN networks.

pycran simulates NOMA and MU-MIMO transmission in a network of remote
radio heads, where transmission points can cooperate through JT-CoMP. The
cooperating clusters are found by a merge and split coalition formation
game, and can be compared against static, greedy and no-CoMP clustering.
"""

__version__ = "1.0.0"
